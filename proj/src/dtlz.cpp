#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "problems_detail.hpp"

namespace moeadde::detail {

namespace {

constexpr double kPi = std::numbers::pi;

double g_rastrigin(std::span<const double> z) {
    double g = static_cast<double>(z.size());
    for (double zi : z) {
        const double d = zi - 0.5;
        g += d * d - std::cos(20.0 * kPi * d);
    }
    return 100.0 * g;
}

double g_sphere(std::span<const double> z) {
    double g = 0.0;
    for (double zi : z) {
        const double d = zi - 0.5;
        g += d * d;
    }
    return g;
}

double g_power(std::span<const double> z) {
    double g = 0.0;
    for (double zi : z) g += std::pow(zi, 0.1);
    return g;
}

std::vector<double> dtlz1_shape(std::span<const double> pos, double g,
                                int M) {
    std::vector<double> f(static_cast<std::size_t>(M));
    for (int m = 1; m <= M; ++m) {
        double value = 0.5 * (1.0 + g);
        for (int i = 0; i < M - m; ++i) value *= pos[i];
        if (m >= 2) value *= 1.0 - pos[M - m];
        f[m - 1] = value;
    }
    return f;
}

std::vector<double> curve_angles(std::span<const double> pos, double g,
                                 int M) {
    std::vector<double> theta(pos.size());
    theta[0] = pos[0] * kPi / 2.0;
    for (std::size_t i = 1; i < pos.size(); ++i)
        theta[i] = kPi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * pos[i]);
    return theta;
}

}  // namespace

std::vector<double> dtlz_spherical(std::span<const double> theta, double g,
                                   int M) {
    std::vector<double> f(static_cast<std::size_t>(M));
    for (int m = 1; m <= M; ++m) {
        double value = 1.0 + g;
        for (int i = 0; i < M - m; ++i) value *= std::cos(theta[i]);
        if (m >= 2) value *= std::sin(theta[M - m]);
        f[m - 1] = value;
    }
    return f;
}

std::vector<double> dtlz_evaluate(int index, int M, std::span<const double> x) {
    const auto pos = x.first(static_cast<std::size_t>(M - 1));
    const auto dist = x.subspan(static_cast<std::size_t>(M - 1));

    switch (index) {
        case 1:
            return dtlz1_shape(pos, g_rastrigin(dist), M);
        case 2:
        case 3: {
            const double g = index == 2 ? g_sphere(dist) : g_rastrigin(dist);
            std::vector<double> theta(pos.size());
            for (std::size_t i = 0; i < pos.size(); ++i)
                theta[i] = pos[i] * kPi / 2.0;
            return dtlz_spherical(theta, g, M);
        }
        case 4: {
            const double g = g_sphere(dist);
            std::vector<double> theta(pos.size());
            for (std::size_t i = 0; i < pos.size(); ++i)
                theta[i] = std::pow(pos[i], 100.0) * kPi / 2.0;
            return dtlz_spherical(theta, g, M);
        }
        case 5: {
            const double g = g_sphere(dist);
            return dtlz_spherical(curve_angles(pos, g, M), g, M);
        }
        case 6: {
            const double g = g_power(dist);
            return dtlz_spherical(curve_angles(pos, g, M), g, M);
        }
        case 7: {
            const double g =
                1.0 + 9.0 / static_cast<double>(dist.size()) *
                          std::accumulate(dist.begin(), dist.end(), 0.0);
            std::vector<double> f(pos.begin(), pos.end());
            double h = static_cast<double>(M);
            for (double fi : f)
                h -= fi / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * fi));
            f.push_back((1.0 + g) * h);
            return f;
        }
        default:
            throw std::invalid_argument("dtlz_evaluate: bad index");
    }
}

}  // namespace moeadde::detail
