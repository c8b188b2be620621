#pragma once

#include <vector>

#include "kp/common.hpp"
#include "kp/discriminant.hpp"

namespace kp {

/// Gap-midpoint momentum l_n: the unique critical point of D in
/// (n*pi, (n+1)*pi) for V > 0, in ((n-1)*pi, n*pi) for V < 0 (n >= 2).
/// l_0 = 0 by convention for V > 0.
double critical_point(int n, Potential V);

/// l_n - n*pi computed directly in the offset variable.  Full relative
/// precision in the offset even when n*pi dwarfs it; prefer this for
/// residual-against-expansion measurements.
double critical_point_offset(int n, Potential V);

/// Band-edge momentum k_n: the unique solution of D(k) = 2*(-1)^n in the
/// open interval (n*pi, (n+1)*pi) for V > 0 (n >= 0), ((n-1)*pi, n*pi) for
/// V < 0 (n >= 2).
double band_edge(int n, Potential V);

/// k_n - n*pi in the offset variable (see critical_point_offset).
double band_edge_offset(int n, Potential V);

/// One spectral band.  The quasimomentum theta runs over [-pi, pi]; k(theta)
/// inverts D(k) = 2 cos(theta) on the monotone stretch [k_lo, k_hi].
struct Band {
    int n;                 // band index, >= 1
    double V;
    double k_lo, k_hi;     // momentum range; k_lo < k_hi
    double l_lo, l_hi;     // bracketing critical points, l_lo <= k_lo, k_hi <= l_hi
    double lambda_lo, lambda_hi; // energy range [k_lo^2, k_hi^2]
    bool k_increasing;     // dk/dtheta > 0 on (0, pi); true exactly when n is odd

    double width() const { return lambda_hi - lambda_lo; }
    /// Reduced-theta location of the top band edge (energy maximum).
    double theta_top() const { return (n % 2 != 0) ? pi : 0.0; }
    /// Reduced-theta location of the bottom band edge.
    double theta_bottom() const { return (n % 2 != 0) ? 0.0 : pi; }
};

Band build_band(int n, Potential V);

/// Inverse of the dispersion relation: the unique k in [k_lo, k_hi] with
/// D(k) = 2 cos(theta).  Even in theta; theta must lie in [-pi, pi].
double k_of_theta(const Band& band, double theta);

/// Band function and derivatives in the quasimomentum, obtained from the
/// implicit-function chain rule on D(k(theta)) = 2 cos(theta).
struct ThetaSample {
    double theta;
    double k;
    double dk_dtheta;
    double lambda; // k^2
    double d1;     // d lambda / d theta
    double d2;     // second derivative
    double d3;     // third derivative
};

ThetaSample lambda_jet(const Band& band, double theta);

/// Same jet against the unfolded quasimomentum on [(n-1)*pi, n*pi], where
/// k(theta) is increasing for every band.
ThetaSample lambda_jet_unfolded(const Band& band, double theta_unfolded);

double theta_unfolded_from_reduced(const Band& band, double theta_reduced);
double theta_reduced_from_unfolded(const Band& band, double theta_unfolded);

/// Unfolded quasimomentum of the curvature zero below the top edge, located
/// from a bracket seeded by the cube-root scaling of the gap parameter and
/// widened geometrically on failure.  Throws no_inflection_error if five
/// widenings never produce a sign change.
double inflection_point(const Band& band);

/// Reduced-theta curvature zero in (0, pi) corresponding to inflection_point.
double inflection_point_reduced(const Band& band);

/// All curvature sign changes of the band function on a uniform reduced-theta
/// grid over [-pi, pi], refined by bisection.  Fallback diagnostic for low
/// bands where the asymptotic bracket is not certified.
std::vector<double> curvature_sign_changes(const Band& band, int grid = 4096);

/// Maximum group speed sup |d lambda / d theta|, attained at the inflection.
double max_group_velocity(const Band& band);

} // namespace kp
