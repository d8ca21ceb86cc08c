#include <cmath>
#include <numbers>
#include <stdexcept>

#include "problems_detail.hpp"

// WFG toolkit evaluation. The transformation functions below follow the
// toolkit definitions literally (floor-based branch selection and all);
// the golden fixtures in tests/fixtures pin their behaviour against an
// independent transcription.

namespace moeadde::detail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kParamA = 0.98 / 49.98;  // bias strength of b_param

double b_poly(double y, double alpha) { return std::pow(y, alpha); }

double b_flat(double y, double A, double B, double C) {
    double v = A + std::min(0.0, std::floor(y - B)) * A * (B - y) / B -
               std::min(0.0, std::floor(C - y)) * (1.0 - A) * (y - C) /
                   (1.0 - C);
    // guard the representable edges against fp excursions
    return std::min(1.0, std::max(0.0, v));
}

double b_param(double y, double u, double A, double B, double C) {
    const double v = A - (1.0 - 2.0 * u) * std::abs(std::floor(0.5 - u) + A);
    return std::pow(y, B + (C - B) * v);
}

double s_linear(double y, double A) {
    return std::abs(y - A) / std::abs(std::floor(A - y) + A);
}

double s_decept(double y, double A, double B, double C) {
    const double t1 = std::floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B);
    const double t2 = std::floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) /
                      (1.0 - A - B);
    return 1.0 + (std::abs(y - A) - B) * (t1 + t2 + 1.0 / B);
}

double s_multi(double y, double A, double B, double C) {
    const double t1 = std::abs(y - C) / (2.0 * (std::floor(C - y) + C));
    const double t2 = (4.0 * A + 2.0) * kPi * (0.5 - t1);
    return (1.0 + std::cos(t2) + 4.0 * B * t1 * t1) / (B + 2.0);
}

double r_sum(std::span<const double> y, std::span<const double> w) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return num / den;
}

double r_sum_unit(std::span<const double> y) {
    double num = 0.0;
    for (double v : y) num += v;
    return num / static_cast<double>(y.size());
}

double r_nonsep(std::span<const double> y, int A) {
    const std::size_t n = y.size();
    double num = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        num += y[j];
        for (int k = 0; k <= A - 2; ++k)
            num += std::abs(y[j] - y[(j + static_cast<std::size_t>(k) + 1) % n]);
    }
    const double half_up = std::ceil(A / 2.0);
    const double den = (static_cast<double>(n) / A) * half_up *
                       (1.0 + 2.0 * A - 2.0 * half_up);
    return num / den;
}

// Position groups of size k/(M-1) followed by one distance group,
// reduced with r_sum (unit weights).
std::vector<double> reduce_groups_unit(std::span<const double> y, int k,
                                       int M) {
    const int gs = k / (M - 1);
    std::vector<double> t(static_cast<std::size_t>(M));
    for (int i = 0; i < M - 1; ++i)
        t[i] = r_sum_unit(y.subspan(static_cast<std::size_t>(i * gs),
                                    static_cast<std::size_t>(gs)));
    t[M - 1] = r_sum_unit(y.subspan(static_cast<std::size_t>(k)));
    return t;
}

// Same groups but with the weight 2j of each 1-based variable index j.
std::vector<double> reduce_groups_weighted(std::span<const double> y, int k,
                                           int M) {
    std::vector<double> weights(y.size());
    for (std::size_t j = 0; j < y.size(); ++j)
        weights[j] = 2.0 * static_cast<double>(j + 1);
    const int gs = k / (M - 1);
    std::vector<double> t(static_cast<std::size_t>(M));
    for (int i = 0; i < M - 1; ++i) {
        const auto lo = static_cast<std::size_t>(i * gs);
        t[i] = r_sum(y.subspan(lo, static_cast<std::size_t>(gs)),
                     std::span<const double>(weights).subspan(
                         lo, static_cast<std::size_t>(gs)));
    }
    const auto lo = static_cast<std::size_t>(k);
    t[M - 1] = r_sum(y.subspan(lo),
                     std::span<const double>(weights).subspan(lo));
    return t;
}

std::vector<double> normalize(std::span<const double> z) {
    std::vector<double> y(z.size());
    for (std::size_t j = 0; j < z.size(); ++j)
        y[j] = z[j] / (2.0 * static_cast<double>(j + 1));
    return y;
}

// t1 of WFG2/WFG3: s_linear on the distance part, then pairwise
// non-separable reduction of the distance part (l must be even).
std::vector<double> wfg2_chain(std::span<const double> z, int k, int M) {
    std::vector<double> y = normalize(z);
    const std::size_t n = y.size();
    const std::size_t l = n - static_cast<std::size_t>(k);
    for (std::size_t j = k; j < n; ++j) y[j] = s_linear(y[j], 0.35);

    std::vector<double> reduced(y.begin(), y.begin() + k);
    for (std::size_t i = 0; i < l / 2; ++i) {
        const std::size_t head = static_cast<std::size_t>(k) + 2 * i;
        const double pair[2] = {y[head], y[head + 1]};
        reduced.push_back(r_nonsep(pair, 2));
    }
    return reduce_groups_unit(reduced, k, M);
}

std::vector<double> finalize(std::span<const double> t, int M,
                             const std::vector<double>& h) {
    std::vector<double> f(static_cast<std::size_t>(M));
    for (int m = 0; m < M; ++m)
        f[m] = t[M - 1] + 2.0 * static_cast<double>(m + 1) * h[m];
    return f;
}

std::vector<double> underlying_position(std::span<const double> t, int M,
                                        std::span<const double> degeneracy) {
    std::vector<double> x(static_cast<std::size_t>(M - 1));
    for (int i = 0; i < M - 1; ++i)
        x[i] = std::max(t[M - 1], degeneracy[i]) * (t[i] - 0.5) + 0.5;
    return x;
}

const std::vector<double> kAllOne(16, 1.0);

}  // namespace

std::vector<double> shape_linear(std::span<const double> x, int M) {
    std::vector<double> h(static_cast<std::size_t>(M));
    for (int m = 1; m <= M; ++m) {
        double value = 1.0;
        for (int i = 0; i < M - m; ++i) value *= x[i];
        if (m >= 2) value *= 1.0 - x[M - m];
        h[m - 1] = value;
    }
    return h;
}

std::vector<double> shape_convex(std::span<const double> x, int M) {
    std::vector<double> h(static_cast<std::size_t>(M));
    for (int m = 1; m <= M; ++m) {
        double value = 1.0;
        for (int i = 0; i < M - m; ++i)
            value *= 1.0 - std::cos(x[i] * kPi / 2.0);
        if (m >= 2) value *= 1.0 - std::sin(x[M - m] * kPi / 2.0);
        h[m - 1] = value;
    }
    return h;
}

std::vector<double> shape_concave(std::span<const double> x, int M) {
    std::vector<double> h(static_cast<std::size_t>(M));
    for (int m = 1; m <= M; ++m) {
        double value = 1.0;
        for (int i = 0; i < M - m; ++i) value *= std::sin(x[i] * kPi / 2.0);
        if (m >= 2) value *= std::cos(x[M - m] * kPi / 2.0);
        h[m - 1] = value;
    }
    return h;
}

double shape_mixed(double x1, double A, double alpha) {
    return std::pow(
        1.0 - x1 - std::cos(2.0 * A * kPi * x1 + kPi / 2.0) / (2.0 * A * kPi),
        alpha);
}

double shape_disc(double x1, double A, double alpha, double beta) {
    const double c = std::cos(A * std::pow(x1, beta) * kPi);
    return 1.0 - std::pow(x1, alpha) * c * c;
}

std::vector<double> wfg_evaluate(int index, int M, int k,
                                 std::span<const double> z) {
    const auto ones = std::span<const double>(kAllOne).first(
        static_cast<std::size_t>(M - 1));

    switch (index) {
        case 1: {
            std::vector<double> y = normalize(z);
            for (std::size_t j = static_cast<std::size_t>(k); j < y.size(); ++j) {
                y[j] = s_linear(y[j], 0.35);
                y[j] = b_flat(y[j], 0.8, 0.75, 0.85);
            }
            for (double& v : y) v = b_poly(v, 0.02);
            const std::vector<double> t = reduce_groups_weighted(y, k, M);
            const std::vector<double> x = underlying_position(t, M, ones);
            std::vector<double> h = shape_convex(x, M);
            h[M - 1] = shape_mixed(x[0], 5.0, 1.0);
            return finalize(t, M, h);
        }
        case 2: {
            const std::vector<double> t = wfg2_chain(z, k, M);
            const std::vector<double> x = underlying_position(t, M, ones);
            std::vector<double> h = shape_convex(x, M);
            h[M - 1] = shape_disc(x[0], 5.0, 1.0, 1.0);
            return finalize(t, M, h);
        }
        case 3: {
            const std::vector<double> t = wfg2_chain(z, k, M);
            std::vector<double> degeneracy(static_cast<std::size_t>(M - 1),
                                           0.0);
            degeneracy[0] = 1.0;
            const std::vector<double> x =
                underlying_position(t, M, degeneracy);
            return finalize(t, M, shape_linear(x, M));
        }
        case 4:
        case 5: {
            std::vector<double> y = normalize(z);
            for (double& v : y)
                v = index == 4 ? s_multi(v, 30.0, 10.0, 0.35)
                               : s_decept(v, 0.35, 0.001, 0.05);
            const std::vector<double> t = reduce_groups_unit(y, k, M);
            const std::vector<double> x = underlying_position(t, M, ones);
            return finalize(t, M, shape_concave(x, M));
        }
        case 6: {
            std::vector<double> y = normalize(z);
            for (std::size_t j = static_cast<std::size_t>(k); j < y.size(); ++j)
                y[j] = s_linear(y[j], 0.35);
            const int gs = k / (M - 1);
            std::vector<double> t(static_cast<std::size_t>(M));
            for (int i = 0; i < M - 1; ++i)
                t[i] = r_nonsep(
                    std::span<const double>(y).subspan(
                        static_cast<std::size_t>(i * gs),
                        static_cast<std::size_t>(gs)),
                    gs);
            t[M - 1] = r_nonsep(
                std::span<const double>(y).subspan(static_cast<std::size_t>(k)),
                static_cast<int>(y.size()) - k);
            const std::vector<double> x = underlying_position(t, M, ones);
            return finalize(t, M, shape_concave(x, M));
        }
        case 7: {
            std::vector<double> y = normalize(z);
            std::vector<double> suffix(y.size() + 1, 0.0);
            for (std::size_t j = y.size(); j > 0; --j)
                suffix[j - 1] = suffix[j] + y[j - 1];
            for (int i = 0; i < k; ++i) {
                const double u = suffix[i + 1] /
                                 static_cast<double>(y.size() - i - 1);
                y[i] = b_param(y[i], u, kParamA, 0.02, 50.0);
            }
            for (std::size_t j = static_cast<std::size_t>(k); j < y.size(); ++j)
                y[j] = s_linear(y[j], 0.35);
            const std::vector<double> t = reduce_groups_unit(y, k, M);
            const std::vector<double> x = underlying_position(t, M, ones);
            return finalize(t, M, shape_concave(x, M));
        }
        case 8: {
            std::vector<double> y = normalize(z);
            double prefix = 0.0;
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (j >= static_cast<std::size_t>(k)) {
                    const double u = prefix / static_cast<double>(j);
                    prefix += y[j];  // biased by the raw value
                    y[j] = b_param(y[j], u, kParamA, 0.02, 50.0);
                    y[j] = s_linear(y[j], 0.35);
                } else {
                    prefix += y[j];
                }
            }
            const std::vector<double> t = reduce_groups_unit(y, k, M);
            const std::vector<double> x = underlying_position(t, M, ones);
            return finalize(t, M, shape_concave(x, M));
        }
        case 9: {
            std::vector<double> y = normalize(z);
            std::vector<double> suffix(y.size() + 1, 0.0);
            for (std::size_t j = y.size(); j > 0; --j)
                suffix[j - 1] = suffix[j] + y[j - 1];
            for (std::size_t i = 0; i + 1 < y.size(); ++i) {
                const double u = suffix[i + 1] /
                                 static_cast<double>(y.size() - i - 1);
                y[i] = b_param(y[i], u, kParamA, 0.02, 50.0);
            }
            for (std::size_t j = 0; j < y.size(); ++j)
                y[j] = j < static_cast<std::size_t>(k)
                           ? s_decept(y[j], 0.35, 0.001, 0.05)
                           : s_multi(y[j], 30.0, 95.0, 0.35);
            const int gs = k / (M - 1);
            std::vector<double> t(static_cast<std::size_t>(M));
            for (int i = 0; i < M - 1; ++i)
                t[i] = r_nonsep(
                    std::span<const double>(y).subspan(
                        static_cast<std::size_t>(i * gs),
                        static_cast<std::size_t>(gs)),
                    gs);
            t[M - 1] = r_nonsep(
                std::span<const double>(y).subspan(static_cast<std::size_t>(k)),
                static_cast<int>(y.size()) - k);
            const std::vector<double> x = underlying_position(t, M, ones);
            return finalize(t, M, shape_concave(x, M));
        }
        default:
            throw std::invalid_argument("wfg_evaluate: bad index");
    }
}

}  // namespace moeadde::detail
