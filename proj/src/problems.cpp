#include "moeadde/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "problems_detail.hpp"

namespace moeadde {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752;

// Extremes of the DTLZ7 front in the non-last / last coordinate:
// t* maximizes t (1 + sin(3 pi t)) on [0,1], u* is the maximum itself.
// Refined numerically from the 1-D front parameterization.
constexpr double kDtlz7PosMax = 0.8594008566447239;
constexpr double kDtlz7LastTerm = 1.6929956344984224;

int dtlz_position_count(int index) {
    if (index == 1) return 5;
    if (index == 7) return 20;
    return 10;
}

using Tags = std::vector<ProblemTag>;

Tags dtlz_tags(int index) {
    using T = ProblemTag;
    switch (index) {
        case 1: return {T::linear, T::multimodal};
        case 2: return {T::nonconvex};
        case 3: return {T::nonconvex, T::multimodal};
        case 4: return {T::nonconvex, T::biased};
        case 5:
        case 6: return {T::partially_degenerate};
        default: return {T::disconnected, T::multimodal};
    }
}

Tags wfg_tags(int index) {
    using T = ProblemTag;
    switch (index) {
        case 1: return {T::mixed, T::biased};
        case 2: return {T::disconnected, T::multimodal, T::nonseparable};
        case 3: return {T::partially_degenerate, T::nonseparable};
        case 4: return {T::nonconvex, T::multimodal};
        case 5: return {T::nonconvex, T::deceptive};
        case 6: return {T::nonconvex, T::nonseparable};
        case 7: return {T::nonconvex, T::biased};
        case 8: return {T::nonconvex, T::nonseparable, T::biased};
        default:
            return {T::nonconvex, T::multimodal, T::nonseparable, T::biased,
                    T::deceptive};
    }
}

// Nadir extremes of the partially degenerate fronts, frozen from dense
// sampling of the enclosing front parameterizations (10^6 points each;
// see tools/front_sampler.cpp to regenerate).
struct SampledNadir {
    const char* name;
    int M;
    double nadir[5];
};

constexpr SampledNadir kSampledNadirs[] = {
    {"DTLZ5", 4, {0.0, 0.0, 0.0, 0.0}},  // filled by front_sampler
    {"DTLZ5", 5, {0.0, 0.0, 0.0, 0.0, 0.0}},
    {"DTLZ6", 4, {0.0, 0.0, 0.0, 0.0}},
    {"DTLZ6", 5, {0.0, 0.0, 0.0, 0.0, 0.0}},
    {"WFG3", 3, {0.0, 0.0, 0.0}},
    {"WFG3", 4, {0.0, 0.0, 0.0, 0.0}},
    {"WFG3", 5, {0.0, 0.0, 0.0, 0.0, 0.0}},
};

const SampledNadir* find_sampled_nadir(const std::string& name, int M) {
    for (const auto& entry : kSampledNadirs)
        if (name == entry.name && M == entry.M) return &entry;
    return nullptr;
}

}  // namespace

bool ProblemSpec::has(ProblemTag tag) const {
    return std::find(properties.begin(), properties.end(), tag) !=
           properties.end();
}

std::string ProblemSpec::key() const {
    return name + "/M" + std::to_string(M);
}

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (int i = 1; i <= 7; ++i) v.push_back("DTLZ" + std::to_string(i));
        for (int i = 1; i <= 9; ++i) v.push_back("WFG" + std::to_string(i));
        return v;
    }();
    return names;
}

Problem make_problem(std::string_view name, int M) {
    if (M < 2 || M > 5)
        throw ConfigError("unsupported objective count M=" +
                          std::to_string(M) + " (supported: 2..5)");

    Problem problem;
    ProblemSpec& spec = problem.spec_;
    spec.name = std::string(name);
    spec.M = M;

    if (name.starts_with("DTLZ") && name.size() == 5) {
        const int index = name[4] - '0';
        if (index >= 1 && index <= 7) {
            problem.family_ = Problem::Family::dtlz;
            problem.index_ = index;
            spec.k = dtlz_position_count(index);
            spec.l = 0;
            spec.D = M + spec.k - 1;
            spec.bounds = Bounds(std::vector<double>(spec.D, 0.0),
                                 std::vector<double>(spec.D, 1.0));
            spec.properties = dtlz_tags(index);
            return problem;
        }
    }
    if (name.starts_with("WFG") && name.size() == 4) {
        const int index = name[3] - '0';
        if (index >= 1 && index <= 9) {
            problem.family_ = Problem::Family::wfg;
            problem.index_ = index;
            spec.k = 2 * (M - 1);
            spec.l = 20;
            spec.D = spec.k + spec.l;
            std::vector<double> upper(spec.D);
            for (int j = 0; j < spec.D; ++j) upper[j] = 2.0 * (j + 1);
            spec.bounds =
                Bounds(std::vector<double>(spec.D, 0.0), std::move(upper));
            spec.properties = wfg_tags(index);
            return problem;
        }
    }
    throw ConfigError("unknown problem \"" + std::string(name) + "\"");
}

Problem make_problem_by_key(std::string_view key) {
    const auto slash = key.find('/');
    if (slash != std::string_view::npos && slash + 2 < key.size() &&
        key[slash + 1] == 'M') {
        const std::string_view m_text = key.substr(slash + 2);
        if (m_text.size() == 1 && m_text[0] >= '0' && m_text[0] <= '9')
            return make_problem(key.substr(0, slash), m_text[0] - '0');
    }
    throw ConfigError("bad problem key \"" + std::string(key) +
                      "\" (expected e.g. \"DTLZ2/M3\")");
}

std::vector<double> Problem::evaluate_unchecked(
    std::span<const double> x) const {
    return family_ == Family::dtlz
               ? detail::dtlz_evaluate(index_, spec_.M, x)
               : detail::wfg_evaluate(index_, spec_.M, spec_.k, x);
}

std::vector<double> Problem::evaluate(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(spec_.D))
        throw std::invalid_argument(
            spec_.name + ": expected " + std::to_string(spec_.D) +
            " variables, got " + std::to_string(x.size()));
    if (!spec_.bounds.contains(x))
        throw std::invalid_argument(spec_.name +
                                    ": decision vector violates the bounds");
    return evaluate_unchecked(x);
}

NormalizationBounds Problem::reference_points() const {
    const int M = spec_.M;
    std::vector<double> ideal(M, 0.0);
    std::vector<double> nadir(M, 1.0);

    if (family_ == Family::dtlz) {
        switch (index_) {
            case 1:
                std::fill(nadir.begin(), nadir.end(), 0.5);
                break;
            case 2:
            case 3:
            case 4:
                break;  // unit sphere
            case 5:
            case 6:
                if (M == 2) break;
                if (M == 3) {
                    nadir = {kInvSqrt2, kInvSqrt2, 1.0};
                    break;
                }
                {
                    const SampledNadir* s = find_sampled_nadir(spec_.name, M);
                    nadir.assign(s->nadir, s->nadir + M);
                }
                break;
            case 7:
                std::fill(nadir.begin(), nadir.end() - 1, kDtlz7PosMax);
                nadir[M - 1] = 2.0 * M;
                ideal[M - 1] = 2.0 * M - (M - 1) * kDtlz7LastTerm;
                break;
        }
        return NormalizationBounds(std::move(ideal), std::move(nadir));
    }

    // WFG fronts are scaled by 2m per objective; WFG3's degenerate front
    // needs sampled extremes beyond M=2.
    for (int m = 0; m < M; ++m) nadir[m] = 2.0 * (m + 1);
    if (index_ == 3 && M >= 3) {
        const SampledNadir* s = find_sampled_nadir(spec_.name, M);
        nadir.assign(s->nadir, s->nadir + M);
    }
    return NormalizationBounds(std::move(ideal), std::move(nadir));
}

std::vector<std::vector<double>> Problem::sample_front_points(
    std::size_t n, RandomSource& rng) const {
    const int M = spec_.M;
    std::vector<std::vector<double>> points;
    points.reserve(n);
    std::vector<double> pos(static_cast<std::size_t>(M - 1));

    for (std::size_t s = 0; s < n; ++s) {
        for (double& p : pos) p = rng.uniform01();
        if (family_ == Family::dtlz) {
            switch (index_) {
                case 1:
                    points.push_back(detail::dtlz_evaluate(
                        1, M,
                        [&] {
                            std::vector<double> x(pos.begin(), pos.end());
                            x.resize(spec_.D, 0.5);  // optimal distance part
                            return x;
                        }()));
                    break;
                case 2:
                case 3:
                case 4: {
                    std::vector<double> theta(pos.size());
                    for (std::size_t i = 0; i < pos.size(); ++i)
                        theta[i] = pos[i] * kPi / 2.0;
                    points.push_back(detail::dtlz_spherical(theta, 0.0, M));
                    break;
                }
                case 5:
                case 6: {
                    // The front of the degenerate problems is the
                    // nondominated subset of the whole (position, g) image;
                    // sample g densely near 0 where the front lives.
                    const double g_max = index_ == 5 ? 2.5 : 10.0;
                    const double u = rng.uniform01();
                    const double g = M <= 3 ? 0.0 : g_max * u * u * u;
                    std::vector<double> theta(pos.size());
                    theta[0] = pos[0] * kPi / 2.0;
                    for (std::size_t i = 1; i < pos.size(); ++i)
                        theta[i] = kPi / (4.0 * (1.0 + g)) *
                                   (1.0 + 2.0 * g * pos[i]);
                    points.push_back(detail::dtlz_spherical(theta, g, M));
                    break;
                }
                case 7: {
                    std::vector<double> f(pos.begin(), pos.end());
                    double h = static_cast<double>(M);
                    for (double fi : f)
                        h -= fi / 2.0 * (1.0 + std::sin(3.0 * kPi * fi));
                    f.push_back(2.0 * h);
                    points.push_back(std::move(f));
                    break;
                }
            }
            continue;
        }

        // WFG: position parameters of the underlying shape.
        switch (index_) {
            case 1: {
                std::vector<double> h = detail::shape_convex(pos, M);
                h[M - 1] = detail::shape_mixed(pos[0], 5.0, 1.0);
                std::vector<double> f(static_cast<std::size_t>(M));
                for (int m = 0; m < M; ++m) f[m] = 2.0 * (m + 1) * h[m];
                points.push_back(std::move(f));
                break;
            }
            case 2: {
                std::vector<double> h = detail::shape_convex(pos, M);
                h[M - 1] = detail::shape_disc(pos[0], 5.0, 1.0, 1.0);
                std::vector<double> f(static_cast<std::size_t>(M));
                for (int m = 0; m < M; ++m) f[m] = 2.0 * (m + 1) * h[m];
                points.push_back(std::move(f));
                break;
            }
            case 3: {
                // Partially degenerate: sample the full underlying
                // parameter cube (t_1..t_{M-1}, t_M); its image's
                // nondominated subset is the front.
                const double t_m = M == 2 ? 0.0 : rng.uniform01();
                std::vector<double> x(pos.size());
                x[0] = pos[0];
                for (std::size_t i = 1; i < pos.size(); ++i)
                    x[i] = t_m * (pos[i] - 0.5) + 0.5;
                const std::vector<double> h = detail::shape_linear(x, M);
                std::vector<double> f(static_cast<std::size_t>(M));
                for (int m = 0; m < M; ++m)
                    f[m] = t_m + 2.0 * (m + 1) * h[m];
                points.push_back(std::move(f));
                break;
            }
            default: {
                const std::vector<double> h = detail::shape_concave(pos, M);
                std::vector<double> f(static_cast<std::size_t>(M));
                for (int m = 0; m < M; ++m) f[m] = 2.0 * (m + 1) * h[m];
                points.push_back(std::move(f));
                break;
            }
        }
    }
    return points;
}

std::pair<std::vector<double>, std::vector<double>> front_extremes(
    const std::vector<std::vector<double>>& points) {
    const auto front = nondominated_filter(points);
    if (front.empty())
        throw std::invalid_argument("front_extremes: empty input");
    std::vector<double> lo = front[0];
    std::vector<double> hi = front[0];
    for (const auto& p : front)
        for (std::size_t i = 0; i < p.size(); ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    return {lo, hi};
}

}  // namespace moeadde
