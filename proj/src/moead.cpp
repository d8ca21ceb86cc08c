#include "moeadde/moead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace moeadde {

namespace {

// Number of simplex-lattice vectors for H divisions over M objectives:
// C(H + M - 1, M - 1).
std::size_t lattice_size(int M, std::size_t H) {
    std::size_t count = 1;
    for (int i = 1; i <= M - 1; ++i)
        count = count * (H + static_cast<std::size_t>(i)) /
                static_cast<std::size_t>(i);
    return count;
}

void enumerate_lattice(int M, std::size_t H, std::size_t level,
                       std::size_t remaining, std::vector<std::size_t>& parts,
                       std::vector<std::vector<double>>& out) {
    if (level + 1 == static_cast<std::size_t>(M)) {
        parts[level] = remaining;
        std::vector<double> w(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            w[i] = static_cast<double>(parts[i]) / static_cast<double>(H);
        out.push_back(std::move(w));
        return;
    }
    for (std::size_t take = 0; take <= remaining; ++take) {
        parts[level] = take;
        enumerate_lattice(M, H, level + 1, remaining - take, parts, out);
    }
}

}  // namespace

WeightSet generate_weights(int M, std::size_t mu_target) {
    if (M < 2 || M > 5)
        throw ConfigError("generate_weights: M must be in 2..5");
    if (mu_target == 0)
        throw ConfigError("generate_weights: zero population size");

    std::size_t below = 1, above = 0;
    for (std::size_t H = 1;; ++H) {
        const std::size_t count = lattice_size(M, H);
        if (count == mu_target) {
            WeightSet ws;
            ws.M = M;
            std::vector<std::size_t> parts(static_cast<std::size_t>(M));
            enumerate_lattice(M, H, 0, H, parts, ws.vectors);
            return ws;
        }
        if (count < mu_target) {
            below = count;
        } else {
            above = count;
            break;
        }
    }
    throw ConfigError(
        "generate_weights: no simplex lattice of M=" + std::to_string(M) +
        " produces exactly " + std::to_string(mu_target) +
        " vectors (nearest achievable: " + std::to_string(below) + " and " +
        std::to_string(above) + ")");
}

std::size_t default_population_size(int M) {
    switch (M) {
        case 2: return 200;
        case 3: return 210;
        case 4: return 220;
        case 5: return 210;
        default:
            throw ConfigError("default_population_size: M must be in 2..5");
    }
}

std::vector<std::vector<std::size_t>> build_neighborhoods(
    const WeightSet& weights, std::size_t T) {
    const std::size_t mu = weights.size();
    if (T == 0 || T > mu)
        throw ConfigError("build_neighborhoods: need 1 <= T <= mu");

    std::vector<std::vector<std::size_t>> table(mu);
    std::vector<std::pair<double, std::size_t>> by_distance(mu);
    for (std::size_t i = 0; i < mu; ++i) {
        const auto& wi = weights.vectors[i];
        for (std::size_t j = 0; j < mu; ++j) {
            double d2 = 0.0;
            for (std::size_t c = 0; c < wi.size(); ++c) {
                const double d = wi[c] - weights.vectors[j][c];
                d2 += d * d;
            }
            by_distance[j] = {d2, j};
        }
        std::partial_sort(by_distance.begin(), by_distance.begin() + T,
                          by_distance.end());
        table[i].reserve(T);
        for (std::size_t t = 0; t < T; ++t)
            table[i].push_back(by_distance[t].second);
    }
    return table;
}

double tchebycheff(std::span<const double> f, std::span<const double> w,
                   std::span<const double> z_star) {
    if (f.size() != w.size() || f.size() != z_star.size())
        throw std::invalid_argument("tchebycheff: length mismatch");
    double value = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        value = std::max(value, w[i] * std::abs(f[i] - z_star[i]));
    return value;
}

std::vector<double> normalize_objectives(std::span<const double> f,
                                         std::span<const double> z_star,
                                         std::span<const double> z_nadir_est,
                                         double eps) {
    if (f.size() != z_star.size() || f.size() != z_nadir_est.size())
        throw std::invalid_argument("normalize_objectives: length mismatch");
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double range = std::max(z_nadir_est[i] - z_star[i], eps);
        out[i] = (f[i] - z_star[i]) / range;
    }
    return out;
}

MoeadConfig default_config(const Problem& problem, MutationConfig mutation,
                           std::uint64_t max_evaluations, std::uint64_t seed) {
    MoeadConfig config;
    config.mu = default_population_size(problem.spec().M);
    config.mutation = mutation;
    config.pm.p_mut = 1.0 / static_cast<double>(problem.spec().D);
    config.pm.eta_mut = 20.0;
    config.max_evaluations = max_evaluations;
    config.seed = seed;
    return config;
}

MoeadEngine::MoeadEngine(MoeadConfig config, Problem problem)
    : config_(std::move(config)),
      problem_(std::move(problem)),
      rng_(config_.seed) {
    const int M = problem_.spec().M;
    if (config_.mu == 0) throw ConfigError("moead: population size is zero");
    if (config_.T > config_.mu) throw ConfigError("moead: T must be <= mu");
    if (config_.n_rep < 1) throw ConfigError("moead: n_rep must be >= 1");
    if (config_.delta < 0.0 || config_.delta > 1.0)
        throw ConfigError("moead: delta must be in [0,1]");
    if (!(config_.de.F > 0.0)) throw ConfigError("moead: F must be > 0");
    if (config_.de.CR < 0.0 || config_.de.CR > 1.0)
        throw ConfigError("moead: CR must be in [0,1]");
    if (config_.pm.p_mut < 0.0 || config_.pm.p_mut > 1.0)
        throw ConfigError("moead: p_mut must be in [0,1]");
    if (!(config_.pm.eta_mut > 0.0))
        throw ConfigError("moead: eta_mut must be > 0");
    if (config_.max_evaluations < config_.mu)
        throw ConfigError("moead: evaluation budget below population size");

    // The tightest mating pool is the neighborhood; make sure the
    // selection method cannot run out of admissible indices there.
    const std::size_t needed = parent_count(config_.mutation.strategy);
    const std::size_t usable =
        config_.mutation.selection == IndexSelection::wor ? config_.T - 1
                                                          : config_.T;
    if (config_.mutation.selection != IndexSelection::wr && usable < needed)
        throw ConfigError("moead: neighborhood too small for the selection method");

    weights_ = generate_weights(M, config_.mu);
    neighborhoods_ = build_neighborhoods(weights_, config_.T);
    all_indices_.resize(config_.mu);
    std::iota(all_indices_.begin(), all_indices_.end(), 0);
}

void MoeadEngine::evaluate_child(Individual& child) {
    child.f = problem_.evaluate(child.x);
    child.evaluated = true;
    ++state_.evaluations;
    for (std::size_t i = 0; i < child.f.size(); ++i)
        state_.z_star[i] = std::min(state_.z_star[i], child.f[i]);
}

void MoeadEngine::initialize() {
    const auto& bounds = problem_.spec().bounds;
    const int M = problem_.spec().M;
    state_ = MoeadState{};
    state_.z_star.assign(static_cast<std::size_t>(M),
                         std::numeric_limits<double>::infinity());
    state_.population.resize(config_.mu);
    for (auto& ind : state_.population) {
        ind.x.resize(bounds.size());
        for (std::size_t j = 0; j < bounds.size(); ++j)
            ind.x[j] = bounds.lower[j] + bounds.width(j) * rng_.uniform01();
        evaluate_child(ind);
    }
    begin_generation();
}

void MoeadEngine::begin_generation() {
    const int M = problem_.spec().M;
    state_.z_nadir_est.assign(static_cast<std::size_t>(M),
                              -std::numeric_limits<double>::infinity());
    for (const auto& ind : state_.population)
        for (int i = 0; i < M; ++i)
            state_.z_nadir_est[i] =
                std::max(state_.z_nadir_est[i], ind.f[i]);
}

double MoeadEngine::scalarize(std::span<const double> f, std::size_t i) const {
    const auto& w = weights_.vectors[i];
    double value = 0.0;
    if (config_.normalize) {
        for (std::size_t c = 0; c < f.size(); ++c) {
            const double range = std::max(
                state_.z_nadir_est[c] - state_.z_star[c], 1e-10);
            value = std::max(
                value, w[c] * std::abs((f[c] - state_.z_star[c]) / range));
        }
    } else {
        for (std::size_t c = 0; c < f.size(); ++c)
            value = std::max(value, w[c] * std::abs(f[c] - state_.z_star[c]));
    }
    return value;
}

void MoeadEngine::step_subproblem(std::size_t i, StepTrace* trace) {
    const auto& bounds = problem_.spec().bounds;
    const bool use_neighborhood = rng_.uniform01() <= config_.delta;
    const std::vector<std::size_t>& pool =
        use_neighborhood ? neighborhoods_[i] : all_indices_;

    const auto parents =
        select_indices(config_.mutation.selection, pool, i,
                       parent_count(config_.mutation.strategy), rng_);
    std::vector<double> v = de_mutant(config_.mutation.strategy, i, parents,
                                      state_.population, config_.de.F);

    bool repaired = false;
    if (!bounds.contains(v)) {
        const ResampleContext ctx{config_.mutation.strategy,
                                  config_.mutation.selection,
                                  i,
                                  pool,
                                  config_.de.F,
                                  &state_.population};
        v = repair(config_.mutation.repair, std::move(v), bounds, rng_, &ctx,
                   &repair_stats_);
        repaired = true;
    }

    Individual child;
    child.x = binomial_crossover(state_.population[i].x, v, config_.de.CR,
                                 rng_);
    polynomial_mutation(child.x, config_.pm, bounds, rng_);
    evaluate_child(child);

    std::vector<std::size_t> order = pool;
    rng_.shuffle(order);
    int replacements = 0;
    std::vector<std::size_t> replaced;
    for (std::size_t j : order) {
        if (replacements >= config_.n_rep) break;
        if (scalarize(child.f, j) <= scalarize(state_.population[j].f, j)) {
            state_.population[j] = child;
            ++replacements;
            replaced.push_back(j);
        }
    }

    if (trace != nullptr) {
        trace->used_neighborhood = use_neighborhood;
        trace->parents.assign(parents.begin(), parents.end());
        trace->repaired = repaired;
        trace->replaced = std::move(replaced);
        trace->child_f = child.f;
    }
}

RunResult MoeadEngine::run() {
    initialize();
    while (state_.evaluations < config_.max_evaluations) {
        begin_generation();
        for (std::size_t i = 0; i < config_.mu; ++i) {
            if (state_.evaluations >= config_.max_evaluations) break;
            step_subproblem(i);
        }
    }

    RunResult result;
    std::vector<std::vector<double>> objectives;
    objectives.reserve(state_.population.size());
    for (const auto& ind : state_.population) objectives.push_back(ind.f);
    result.nondominated = nondominated_filter(objectives);
    result.population = state_.population;
    result.diagnostics.evaluations = state_.evaluations;
    result.diagnostics.resample_fallbacks = repair_stats_.resample_fallbacks;
    diagnostics_ = result.diagnostics;
    return result;
}

}  // namespace moeadde
