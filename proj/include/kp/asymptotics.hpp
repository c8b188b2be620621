#pragma once

#include <array>
#include <utility>

#include "kp/common.hpp"

namespace kp {

/// Large-n expansions of the band edge k_n and gap midpoint l_n:
///   k_n ~ n pi + V/(n pi) - (V^2 + V^3/12)/(n pi)^3
///   l_n ~ n pi + V/(2 n pi) - (V^2/2 + V^3/24)/(n pi)^3
/// Returned as (k_n, l_n).
std::pair<double, double> kn_ln_asymptotic(int n, Potential V);

/// Offsets from n pi of the same expansions, for cancellation-free residuals.
std::pair<double, double> kn_ln_asymptotic_offset(int n, Potential V);

/// Degree-6 Taylor data of D at the gap midpoint l_n, the square-root
/// (Puiseux) inversion coefficients of the dispersion relation around the
/// gap edge, and the derived expansion coefficients of the band functions.
struct EdgeExpansion {
    int n = 0;
    double V = 0.0;
    double l_n = 0.0;           // gap midpoint momentum
    double h_l = 0.0;           // l_n - n pi
    double y_n = 0.0;           // D(l_n)
    double z_n = 0.0;           // (-1)^n y_n, >= 2
    double z_minus_2 = 0.0;     // z_n - 2 without cancellation
    std::array<double, 7> d{};  // d[m] = D^(m)(l_n)/m!, m = 2..6
    bool has_puiseux = false;
    std::array<double, 6> e{};  // e[p], p = 1..5: k_pm = l_n +- e1 h^(1/2) + e2 h ...
    bool has_lambda = false;
    double l_n_sq = 0.0;
    std::array<double, 6> lam0{}; // lam0[m]: lambda_pm = l_n^2 +- lam0[1] h^(1/2) + ...
    double lam2_m3 = 0.0;       // curvature coefficients: d2 lambda/d theta^2 =
    double lam2_m1 = 0.0;       //   +- lam2_m3 h^(-3/2) +- lam2_m1 h^(-1/2)
    double lam2_0 = 0.0;        //   + lam2_0 +- lam2_1 h^(1/2) + O(h)
    double lam2_1 = 0.0;
};

EdgeExpansion edge_taylor(int n, Potential V);

/// Solves the triangular system matching (k - l_n) powers against
/// h = (-1)^n (y_n - D) and fills e[1..5].  Requires c2 > 0.
EdgeExpansion puiseux_coeffs(EdgeExpansion exp);

/// Squares the momentum expansion and differentiates it in theta through the
/// identity (dh/dtau)^2 = (4 - z_n^2) + 2 z_n h - h^2, filling lam0 / lam2.
EdgeExpansion lambda_edge_coeffs(EdgeExpansion exp);

/// Band function jet near the gap edge from the truncated expansions.
/// branch = +1 follows the upper band (n+1), -1 the lower band (n);
/// theta is the unfolded quasimomentum near n pi.
struct EdgeJet {
    double lambda;
    double d1;
    double d2;
    double d3;
};

EdgeJet lambda_edge_jet(const EdgeExpansion& exp, int branch, double theta);

/// Leading curvature-zero location below the top edge:
///   theta_0 ~ n pi - (V^2 / (4 n pi))^(1/3).
double theta0_asymptotic(int n, Potential V);

/// Mid-band (inner window) expansions in the unfolded quasimomentum, valid on
/// [(n-1) pi + delta^(1/4), n pi - delta^(1/4)] with delta = V^2/(4 n pi).
struct InnerExpansion {
    double theta;
    double k;
    double dk;
    double d2k;
    double lambda;
    double dlambda;
    double d2lambda;
};

InnerExpansion inner_expansion(int n, Potential V, double theta);

/// Leading large-n forms of the edge-expansion data, used as cross-checks.
struct EdgeAsymptotics {
    double y_n;
    std::array<double, 7> d;
    double e1;
    double l_n_sq;
    std::array<double, 6> lam0;
    double lam2_m3, lam2_m1, lam2_0, lam2_1;
};

EdgeAsymptotics edge_asymptotics(int n, Potential V);

} // namespace kp
