#pragma once

#include <cmath>
#include <functional>

#include "kp/common.hpp"

namespace kp {

/// Brent's method on a bracketing interval [a, b] with f(a) f(b) <= 0.
/// Converges to |x - root| <= tol_x + eps * |x|.  Throws structural_error if
/// the bracket is invalid.
double brent(const std::function<double(double)>& f, double a, double b,
             double tol_x = 0.0, int max_iter = 200);

/// Newton iteration safeguarded by a bracket.  Falls back to bisection
/// whenever a step leaves [lo, hi] or fails to contract.  fdf must return
/// the pair (f(x), f'(x)).
double newton_bracketed(const std::function<void(double, double&, double&)>& fdf,
                        double lo, double hi, double x0,
                        double tol_x, int max_iter = 100);

} // namespace kp
