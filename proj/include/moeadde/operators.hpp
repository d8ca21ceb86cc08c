#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moeadde/core.hpp"
#include "moeadde/random.hpp"

namespace moeadde {

// ---------------------------------------------------------------------------
// Configuration of the DE mutation operator: the three pluggable components.
// ---------------------------------------------------------------------------

enum class MutationStrategy { rand1, current1 };

enum class IndexSelection {
    wor,  // without replacement: parents pairwise distinct and != target
    wr,   // with replacement: independent draws, duplicates and target allowed
    wpr,  // with partial replacement: pairwise distinct, target allowed
};

enum class RepairMethod {
    replacement,       // clamp to the violated bound
    reinitialization,  // redraw the coordinate uniformly inside the box
    reflection,        // fold back by the amount of violation
    r_reflection,      // fold back by a random fraction of the violation
    resampling,        // regenerate the whole mutant with fresh parents
};

struct DEParams {
    double F = 0.5;
    double CR = 1.0;
};

struct PolynomialMutationParams {
    double p_mut = 0.0;     // per-variable mutation rate
    double eta_mut = 20.0;  // distribution index
};

/// One of the 30 operator configurations.
struct MutationConfig {
    MutationStrategy strategy = MutationStrategy::current1;
    IndexSelection selection = IndexSelection::wr;
    RepairMethod repair = RepairMethod::replacement;

    bool operator==(const MutationConfig&) const = default;
};

std::string_view to_string(MutationStrategy s);
std::string_view to_string(IndexSelection s);
std::string_view to_string(RepairMethod r);
std::optional<MutationStrategy> parse_strategy(std::string_view text);
std::optional<IndexSelection> parse_selection(std::string_view text);
std::optional<RepairMethod> parse_repair(std::string_view text);

/// Compact id, e.g. "current1/WR/replacement".
std::string config_id(const MutationConfig& config);
std::optional<MutationConfig> parse_config_id(std::string_view id);

/// Number of parent indices the strategy consumes (3 for rand/1,
/// 2 for current/1).
inline std::size_t parent_count(MutationStrategy s) {
    return s == MutationStrategy::rand1 ? 3 : 2;
}

// ---------------------------------------------------------------------------
// Parent index selection
// ---------------------------------------------------------------------------

/// Draws `n` parent indices from `pool` for target index `target`.
///
/// Every draw is uniform over `pool` with rejection until the method's
/// constraint holds, so each admissible tuple is equally likely:
///   WOR: result distinct from each other and from `target`;
///   WR:  unconstrained independent draws;
///   WPR: result pairwise distinct, `target` allowed.
/// Throws ConfigError when the pool cannot satisfy the constraint.
template <UniformSource R>
std::vector<std::size_t> select_indices(IndexSelection method,
                                        std::span<const std::size_t> pool,
                                        std::size_t target, std::size_t n,
                                        R& rng) {
    if (pool.empty()) throw ConfigError("select_indices: empty pool");
    if (method == IndexSelection::wor || method == IndexSelection::wpr) {
        std::size_t usable = pool.size();
        if (method == IndexSelection::wor)
            for (std::size_t idx : pool)
                if (idx == target) { --usable; break; }
        if (usable < n)
            throw ConfigError("select_indices: pool of size " +
                              std::to_string(pool.size()) +
                              " cannot provide " + std::to_string(n) +
                              " admissible indices");
    }

    std::vector<std::size_t> picked;
    picked.reserve(n);
    while (picked.size() < n) {
        const std::size_t candidate = pool[rng.uniform_below(pool.size())];
        bool reject = false;
        if (method == IndexSelection::wor && candidate == target) reject = true;
        if (method != IndexSelection::wr && !reject)
            for (std::size_t chosen : picked)
                if (chosen == candidate) { reject = true; break; }
        if (!reject) picked.push_back(candidate);
    }
    return picked;
}

// ---------------------------------------------------------------------------
// Differential mutation
// ---------------------------------------------------------------------------

/// Builds the mutant vector; the result may violate the bounds.
///   rand/1:    v = x[r1] + F (x[r2] - x[r3])
///   current/1: v = x[target] + F (x[r1] - x[r2])
std::vector<double> de_mutant(MutationStrategy strategy, std::size_t target,
                              std::span<const std::size_t> parents,
                              const std::vector<Individual>& population,
                              double F);

// ---------------------------------------------------------------------------
// Bound handling
// ---------------------------------------------------------------------------

inline constexpr int kResampleCap = 100;

struct RepairStats {
    std::uint64_t resample_fallbacks = 0;
};

/// Everything needed to regenerate a mutant from scratch for the
/// resampling method (fresh parents drawn with the same selection method).
struct ResampleContext {
    MutationStrategy strategy = MutationStrategy::current1;
    IndexSelection selection = IndexSelection::wr;
    std::size_t target = 0;
    std::span<const std::size_t> pool;
    double F = 0.5;
    const std::vector<Individual>* population = nullptr;
};

/// Maps `v` back into the box. Feasible coordinates pass through
/// unchanged; a fully feasible vector is returned as-is by every method.
///
/// Resampling regenerates the whole mutant up to kResampleCap times and
/// then falls back to clamping (counted in `stats`), so a converged pool
/// cannot livelock the reproduction step.
template <UniformSource R>
std::vector<double> repair(RepairMethod method, std::vector<double> v,
                           const Bounds& bounds, R& rng,
                           const ResampleContext* resample = nullptr,
                           RepairStats* stats = nullptr) {
    if (v.size() != bounds.size())
        throw std::invalid_argument("repair: vector/bounds length mismatch");
    if (bounds.contains(v)) return v;

    if (method == RepairMethod::resampling) {
        if (resample == nullptr || resample->population == nullptr)
            throw std::invalid_argument(
                "repair: resampling requires a ResampleContext");
        for (int attempt = 0; attempt < kResampleCap; ++attempt) {
            auto parents = select_indices(
                resample->selection, resample->pool, resample->target,
                parent_count(resample->strategy), rng);
            v = de_mutant(resample->strategy, resample->target, parents,
                          *resample->population, resample->F);
            if (bounds.contains(v)) return v;
        }
        if (stats != nullptr) ++stats->resample_fallbacks;
        method = RepairMethod::replacement;
    }

    for (std::size_t j = 0; j < v.size(); ++j) {
        const double lo = bounds.lower[j];
        const double hi = bounds.upper[j];
        if (v[j] >= lo && v[j] <= hi) continue;
        switch (method) {
            case RepairMethod::replacement:
                v[j] = v[j] < lo ? lo : hi;
                break;
            case RepairMethod::reinitialization:
                v[j] = lo + (hi - lo) * rng.uniform01();
                break;
            case RepairMethod::reflection:
                v[j] = v[j] < lo ? lo + (lo - v[j]) : hi + (hi - v[j]);
                break;
            case RepairMethod::r_reflection:
                v[j] = v[j] < lo ? lo + rng.uniform01() * (lo - v[j])
                                 : hi + rng.uniform01() * (hi - v[j]);
                break;
            case RepairMethod::resampling:
                break;  // unreachable: handled above
        }
        // Reflection is single-shot; if the overshoot exceeded the box
        // width the folded value is clamped to keep the postcondition.
        if (v[j] < lo) v[j] = lo;
        if (v[j] > hi) v[j] = hi;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Crossover and GA mutation
// ---------------------------------------------------------------------------

/// Binomial crossover. Draw order: j_rand first, then one gate draw per
/// coordinate. The child stays inside the bounds whenever both inputs do.
template <UniformSource R>
std::vector<double> binomial_crossover(std::span<const double> x,
                                       std::span<const double> v, double CR,
                                       R& rng) {
    if (x.size() != v.size())
        throw std::invalid_argument("binomial_crossover: length mismatch");
    const std::size_t j_rand = rng.uniform_below(x.size());
    std::vector<double> u(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const bool from_mutant = rng.uniform01() <= CR || j == j_rand;
        u[j] = from_mutant ? v[j] : x[j];
    }
    return u;
}

/// Polynomial mutation, applied in place and clamped to the bounds.
///
/// Per coordinate the draws are: gate (<= p_mut?), then branch selector
/// (<= 0.5 picks the lower branch), then the magnitude draw feeding the
/// perturbation exponent. Branch and magnitude are independent draws.
template <UniformSource R>
void polynomial_mutation(std::vector<double>& u,
                         const PolynomialMutationParams& params,
                         const Bounds& bounds, R& rng) {
    if (u.size() != bounds.size())
        throw std::invalid_argument(
            "polynomial_mutation: vector/bounds length mismatch");
    const double exponent = 1.0 / (params.eta_mut + 1.0);
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (rng.uniform01() > params.p_mut) continue;
        const bool lower_branch = rng.uniform01() <= 0.5;
        const double magnitude = rng.uniform01();
        const double sigma =
            lower_branch ? std::pow(2.0 * magnitude, exponent) - 1.0
                         : 1.0 - std::pow(2.0 - 2.0 * magnitude, exponent);
        u[j] += sigma * bounds.width(j);
        if (u[j] < bounds.lower[j]) u[j] = bounds.lower[j];
        if (u[j] > bounds.upper[j]) u[j] = bounds.upper[j];
    }
}

}  // namespace moeadde
