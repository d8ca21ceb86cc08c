#pragma once

#include <span>
#include <vector>

namespace moeadde::detail {

std::vector<double> dtlz_evaluate(int index, int M, std::span<const double> x);
std::vector<double> wfg_evaluate(int index, int M, int k,
                                 std::span<const double> z);

// Shape helpers shared with front-point sampling. `x` holds the M-1
// position parameters (the distance parameter is applied by the caller).
std::vector<double> shape_linear(std::span<const double> x, int M);
std::vector<double> shape_convex(std::span<const double> x, int M);
std::vector<double> shape_concave(std::span<const double> x, int M);
double shape_mixed(double x1, double A, double alpha);
double shape_disc(double x1, double A, double alpha, double beta);

// Spherical DTLZ shape with precomputed angles (radius 1 + g).
std::vector<double> dtlz_spherical(std::span<const double> theta, double g,
                                   int M);

}  // namespace moeadde::detail
