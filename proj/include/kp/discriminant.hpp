#pragma once

#include <array>

#include "kp/common.hpp"

namespace kp {

/// Lyapunov function of the delta-comb Hill equation at energy k^2:
///   D(k) = 2 cos k + V sin(k)/k.
/// The k -> 0 limit is finite (D(0) = 2 + V); small |k| switches to series.
double discriminant(double k, Potential V);

/// Same function at negative energy lambda < 0 expressed through the
/// hyperbolic form 2 cosh(s) + V sinh(s)/s with s = sqrt(-lambda).
double discriminant_negative_energy(double lambda, Potential V);

/// D and its first max_order derivatives in k (max_order <= 6).
/// derivative[j] holds D^(j)(k).
struct DiscriminantJet {
    double k;
    int max_order;
    std::array<double, 7> derivative;
};

DiscriminantJet discriminant_derivs(double k, Potential V, int max_order = 6);

/// Jet evaluated at k = n*pi + h with the half-period parity factored out:
/// returns (-1)^n * D^(j)(n*pi + h).  Exact trig reduction keeps full
/// precision when |h| is far below n*pi (large band index).
DiscriminantJet discriminant_derivs_shifted(double h, int n, Potential V,
                                            int max_order = 6);

/// (-1)^n * D(n*pi + h) - 2 in the cancellation-free factored form
///   2 sin(h/2) * (V cos(h/2)/(n*pi+h) - 2 sin(h/2)).
/// This is the residual whose interior zero on (0, pi) is the band edge
/// offset; the trivial h = 0 root is the factored-out edge itself.
double edge_equation_shifted(double h, int n, Potential V);

/// (-1)^n * D'(n*pi + h); its zero on (0, pi) (V > 0) locates the gap
/// midpoint offset.
double critical_equation_shifted(double h, int n, Potential V);

/// Monodromy matrix over one period at energy k^2, entries
/// [[cos k, sin(k)/k], [V cos k - k sin k, V sin(k)/k + cos k]].
/// det = 1 identically; trace = D(k).
struct Mat2 {
    double a11, a12, a21, a22;
    double det() const { return a11 * a22 - a12 * a21; }
    double trace() const { return a11 + a22; }
};

Mat2 transfer_matrix(double k, Potential V);

namespace detail {
/// j-th derivative of sin(k)/k, j <= 6; series branch below |k| = 0.5.
double sinc_deriv(double k, int j);
} // namespace detail

} // namespace kp
