#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "moeadde/core.hpp"

namespace moeadde {

/// True-front extremes used to normalize objective vectors before the
/// hypervolume computation. Requires nadir[i] > ideal[i].
struct NormalizationBounds {
    std::vector<double> ideal;
    std::vector<double> nadir;

    NormalizationBounds() = default;
    NormalizationBounds(std::vector<double> ideal_point,
                        std::vector<double> nadir_point);
};

/// Maps each vector through f' = (f - ideal) / (nadir - ideal),
/// coordinate-wise. Values are not clipped; poor fronts may exceed 1.
std::vector<std::vector<double>> normalize_front(
    const std::vector<std::vector<double>>& front,
    const NormalizationBounds& bounds);

std::vector<double> normalize_point(std::span<const double> f,
                                    const NormalizationBounds& bounds);

/// Exact hypervolume (minimization) of the region dominated by `front`
/// and bounded by `reference`, via dimension-sweep slicing on the last
/// objective. Points with any coordinate >= the reference contribute
/// nothing; the empty contributing set yields 0.
double hypervolume(const std::vector<std::vector<double>>& front,
                   std::span<const double> reference);

/// Two-sided Wilcoxon rank-sum p-value, normal approximation with tie and
/// continuity corrections. Degenerate data (zero rank variance) gives 1.
double wilcoxon_rank_sum(std::span<const double> sample_a,
                         std::span<const double> sample_b);

/// Performance score per algorithm on one problem instance: the number of
/// rivals that significantly outperform it. "Outperforms" means a higher
/// hypervolume distribution with rank-sum p < alpha and a strictly greater
/// median.
std::vector<int> performance_scores(
    const std::vector<std::vector<double>>& hv_samples, double alpha = 0.05);

/// Column means of an instances x algorithms score matrix.
std::vector<double> aps(const std::vector<std::vector<int>>& scores);

/// Scores and their aggregation for a set of labelled algorithms.
struct ApsTable {
    std::vector<std::string> algorithms;
    std::vector<std::vector<int>> scores;  // instances x algorithms
    std::vector<double> aps;               // column means
};

}  // namespace moeadde
