#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "moeadde/core.hpp"
#include "moeadde/operators.hpp"
#include "moeadde/problems.hpp"
#include "moeadde/random.hpp"

namespace moeadde {

/// Uniformly spread weight vectors on the simplex.
struct WeightSet {
    int M = 0;
    std::vector<std::vector<double>> vectors;

    std::size_t size() const noexcept { return vectors.size(); }
};

/// Simplex-lattice weights with H divisions chosen so that the count
/// equals mu_target exactly; throws ConfigError naming the nearest
/// achievable counts when no H fits.
WeightSet generate_weights(int M, std::size_t mu_target);

/// Standard population sizes per objective count (200/210/220/210 for
/// M = 2/3/4/5), each matching an exact simplex-lattice size.
std::size_t default_population_size(int M);

/// For every weight vector, the indices of its T nearest weight vectors by
/// Euclidean distance (itself included, ties broken by index).
std::vector<std::vector<std::size_t>> build_neighborhoods(
    const WeightSet& weights, std::size_t T);

/// Weighted Tchebycheff scalarization: max_i w_i |f_i - z*_i| (minimized).
double tchebycheff(std::span<const double> f, std::span<const double> w,
                   std::span<const double> z_star);

/// Per-coordinate (f - z*) / (nadir - z*); denominators floored at eps.
std::vector<double> normalize_objectives(std::span<const double> f,
                                         std::span<const double> z_star,
                                         std::span<const double> z_nadir_est,
                                         double eps = 1e-10);

struct MoeadConfig {
    std::size_t mu = 0;
    std::size_t T = 20;        // neighborhood size
    double delta = 0.9;        // neighborhood mating probability
    int n_rep = 2;             // replacement cap per child
    DEParams de;
    PolynomialMutationParams pm;
    MutationConfig mutation;
    std::uint64_t max_evaluations = 0;
    std::uint64_t seed = 1;
    bool normalize = true;     // scalarize on normalized objectives
};

/// Paper-standard configuration for a problem: population size by M,
/// T=20, delta=0.9, n_rep=2, F=0.5, CR=1, p_mut=1/D, eta=20.
MoeadConfig default_config(const Problem& problem, MutationConfig mutation,
                           std::uint64_t max_evaluations, std::uint64_t seed);

struct MoeadState {
    std::vector<Individual> population;
    std::vector<double> z_star;        // running ideal estimate
    std::vector<double> z_nadir_est;   // per-generation population max
    std::uint64_t evaluations = 0;
};

/// What a single reproduction step did; filled on request by tests and
/// diagnostics.
struct StepTrace {
    bool used_neighborhood = false;
    std::vector<std::size_t> parents;
    bool repaired = false;
    std::vector<std::size_t> replaced;
    std::vector<double> child_f;
};

struct RunDiagnostics {
    std::uint64_t evaluations = 0;
    std::uint64_t resample_fallbacks = 0;
};

struct RunResult {
    std::vector<Individual> population;
    std::vector<std::vector<double>> nondominated;  // objective vectors
    RunDiagnostics diagnostics;
};

/// One MOEA/D-DE run. An engine instance is strictly single-threaded;
/// parallelism belongs at the level of independent runs.
class MoeadEngine {
public:
    MoeadEngine(MoeadConfig config, Problem problem);

    /// Random initial population + ideal-point estimate (costs mu
    /// evaluations).
    void initialize();

    /// Recomputes the per-generation nadir estimate from the population.
    void begin_generation();

    /// One inner-loop iteration for sub-problem i: mating pool choice,
    /// parent selection, mutation, repair, crossover, GA mutation, one
    /// child evaluation, restricted replacement.
    void step_subproblem(std::size_t i, StepTrace* trace = nullptr);

    /// Full run until the evaluation budget is exhausted.
    RunResult run();

    const MoeadState& state() const noexcept { return state_; }
    const MoeadConfig& config() const noexcept { return config_; }
    const WeightSet& weights() const noexcept { return weights_; }
    const std::vector<std::vector<std::size_t>>& neighborhoods() const noexcept {
        return neighborhoods_;
    }
    const RunDiagnostics& diagnostics() const noexcept { return diagnostics_; }

    /// Scalarized fitness of objective vector f on sub-problem i, on
    /// normalized objectives when the config says so.
    double scalarize(std::span<const double> f, std::size_t i) const;

private:
    void evaluate_child(Individual& child);

    MoeadConfig config_;
    Problem problem_;
    WeightSet weights_;
    std::vector<std::vector<std::size_t>> neighborhoods_;
    std::vector<std::size_t> all_indices_;
    MoeadState state_;
    RandomSource rng_;
    RepairStats repair_stats_;
    RunDiagnostics diagnostics_;
};

inline RunResult run_moead(MoeadConfig config, const Problem& problem) {
    return MoeadEngine(std::move(config), problem).run();
}

}  // namespace moeadde
