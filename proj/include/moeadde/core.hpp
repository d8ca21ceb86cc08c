#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace moeadde {

/// Raised when a run or experiment configuration cannot be executed as
/// given (as opposed to a programming error on a call site).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Box constraints of the decision space: lower[j] < upper[j] for all j.
struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    Bounds() = default;
    Bounds(std::vector<double> lo, std::vector<double> hi);

    std::size_t size() const noexcept { return lower.size(); }
    bool contains(std::span<const double> x) const noexcept;
    double width(std::size_t j) const noexcept { return upper[j] - lower[j]; }
};

/// A candidate solution with its cached objective vector.
struct Individual {
    std::vector<double> x;
    std::vector<double> f;
    bool evaluated = false;
};

/// Pareto dominance for minimization: a is no worse in every coordinate
/// and strictly better in at least one. Throws std::invalid_argument on
/// length mismatch.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Returns the members not dominated by any other member. Exact duplicate
/// vectors are kept once. Empty input yields an empty result.
std::vector<std::vector<double>> nondominated_filter(
    const std::vector<std::vector<double>>& points);

/// Indices (into `points`) of the nondominated members, duplicates
/// deduplicated to their first occurrence; ascending order.
std::vector<std::size_t> nondominated_indices(
    const std::vector<std::vector<double>>& points);

}  // namespace moeadde
