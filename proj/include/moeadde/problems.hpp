#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moeadde/core.hpp"
#include "moeadde/indicators.hpp"
#include "moeadde/random.hpp"

namespace moeadde {

enum class ProblemTag {
    linear,
    nonconvex,
    mixed,
    disconnected,
    partially_degenerate,
    multimodal,
    nonseparable,
    biased,
    deceptive,
};

struct ProblemSpec {
    std::string name;  // e.g. "WFG4"
    int M = 0;         // objectives
    int D = 0;         // decision variables
    int k = 0;         // position variables
    int l = 0;         // distance variables (WFG only; 0 for DTLZ)
    Bounds bounds;
    std::vector<ProblemTag> properties;

    bool has(ProblemTag tag) const;
    std::string key() const;  // "WFG4/M3"
};

/// A benchmark problem instance. Stateless and reentrant: evaluate() may be
/// called concurrently from any number of threads.
class Problem {
public:
    const ProblemSpec& spec() const { return spec_; }

    /// Objective vector of length M. Throws std::invalid_argument if x has
    /// the wrong length or lies outside the bounds.
    std::vector<double> evaluate(std::span<const double> x) const;

    /// Analytic (or frozen, for the degenerate fronts) true-front extremes.
    NormalizationBounds reference_points() const;

    /// Random objective vectors drawn from the closure of the true Pareto
    /// front (for the partially degenerate problems, from the enclosing
    /// parameterization whose nondominated subset is the front). Feeds the
    /// nadir fixtures and the indicator oracles.
    std::vector<std::vector<double>> sample_front_points(std::size_t n,
                                                         RandomSource& rng) const;

private:
    friend Problem make_problem(std::string_view name, int M);
    Problem() = default;

    std::vector<double> evaluate_unchecked(std::span<const double> x) const;

    enum class Family { dtlz, wfg };
    Family family_ = Family::dtlz;
    int index_ = 0;  // 1-based within the family
    ProblemSpec spec_;
};

/// The 16 problem names: DTLZ1..DTLZ7, WFG1..WFG9.
const std::vector<std::string>& problem_names();

Problem make_problem(std::string_view name, int M);

/// Registry lookup by key, e.g. "DTLZ2/M3" or "WFG7/M5".
Problem make_problem_by_key(std::string_view key);

/// Coordinate-wise extremes of the nondominated subset of `points`.
/// Helper shared by the nadir fixture generator and the tests.
std::pair<std::vector<double>, std::vector<double>> front_extremes(
    const std::vector<std::vector<double>>& points);

}  // namespace moeadde
