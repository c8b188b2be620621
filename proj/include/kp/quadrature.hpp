#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "kp/common.hpp"

namespace kp {

/// Nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

/// Gauss-Legendre rule of the given order, computed once by Newton on the
/// Legendre polynomial and cached.
const GaussRule& gauss_legendre(int order);

namespace detail {
struct Gk15Result {
    double value;
    double error;
};
Gk15Result gk15(const std::function<double(double)>& f, double a, double b);
} // namespace detail

/// Adaptive Gauss-Kronrod (7, 15) quadrature with interval bisection.
/// Stops when the local error estimate satisfies the mixed tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol = 1e-12,
                          double abs_tol = 1e-15, int max_depth = 48);

} // namespace kp
