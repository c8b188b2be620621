#include "kp/asymptotics.hpp"

#include <cmath>

#include "kp/bands.hpp"
#include "kp/discriminant.hpp"
#include "kp/halfseries.hpp"

namespace kp {

std::pair<double, double> kn_ln_asymptotic_offset(int n, Potential V) {
    if (n < 1) throw domain_error("kn_ln_asymptotic: n must be >= 1");
    double v = V.V;
    double x = 1.0 / (n * pi);
    double k = v * x - (v * v + v * v * v / 12.0) * x * x * x;
    double l = 0.5 * v * x - (0.5 * v * v + v * v * v / 24.0) * x * x * x;
    return {k, l};
}

std::pair<double, double> kn_ln_asymptotic(int n, Potential V) {
    auto [k, l] = kn_ln_asymptotic_offset(n, V);
    return {n * pi + k, n * pi + l};
}

EdgeExpansion edge_taylor(int n, Potential V) {
    if (n < 1) throw domain_error("edge_taylor: n must be >= 1");
    EdgeExpansion exp;
    exp.n = n;
    exp.V = V.V;
    exp.h_l = critical_point_offset(n, V);
    exp.l_n = n * pi + exp.h_l;

    // Parity-reduced jet: reduced[j] = (-1)^n D^(j)(l_n).
    DiscriminantJet jet = discriminant_derivs_shifted(exp.h_l, n, V, 6);
    exp.z_n = jet.derivative[0];
    exp.y_n = (n % 2 != 0) ? -exp.z_n : exp.z_n;
    exp.z_minus_2 = edge_equation_shifted(exp.h_l, n, V);

    if (exp.z_n < 2.0 - 1e-9)
        throw structural_error("edge_taylor: gap value below 2");
    if (std::fabs(jet.derivative[1]) > 1e-8 * std::max(1.0, std::fabs(jet.derivative[2])))
        throw structural_error("edge_taylor: l_n is not a critical point");

    double mfact = 1.0;
    for (int m = 2; m <= 6; ++m) {
        mfact *= m;
        double reduced = jet.derivative[m] / mfact;
        exp.d[m] = (n % 2 != 0) ? -reduced : reduced;
    }
    return exp;
}

EdgeExpansion puiseux_coeffs(EdgeExpansion exp) {
    // c_m = (-1)^(n+1) d_m so that h = c2 (k-l)^2 + c3 (k-l)^3 + ... with c2 > 0.
    double sgn = (exp.n % 2 != 0) ? 1.0 : -1.0;
    double c2 = sgn * exp.d[2];
    double c3 = sgn * exp.d[3];
    double c4 = sgn * exp.d[4];
    double c5 = sgn * exp.d[5];
    double c6 = sgn * exp.d[6];
    if (!(c2 > 0.0))
        throw structural_error("puiseux_coeffs: leading curvature c2 <= 0");

    double e1 = 1.0 / std::sqrt(c2);
    double e2 = -c3 * e1 * e1 / (2.0 * c2);
    double e3 = -(c2 * e2 * e2 + 3.0 * c3 * e1 * e1 * e2 + c4 * std::pow(e1, 4))
                / (2.0 * c2 * e1);
    double e4 = -(2.0 * c2 * e2 * e3 + c3 * (3.0 * e1 * e1 * e3 + 3.0 * e1 * e2 * e2)
                  + 4.0 * c4 * std::pow(e1, 3) * e2 + c5 * std::pow(e1, 5))
                / (2.0 * c2 * e1);
    double e5 = -(c2 * (2.0 * e2 * e4 + e3 * e3)
                  + c3 * (6.0 * e1 * e2 * e3 + 3.0 * e1 * e1 * e4 + std::pow(e2, 3))
                  + c4 * (6.0 * e1 * e1 * e2 * e2 + 4.0 * std::pow(e1, 3) * e3)
                  + 5.0 * c5 * std::pow(e1, 4) * e2 + c6 * std::pow(e1, 6))
                / (2.0 * c2 * e1);

    exp.e[1] = e1; exp.e[2] = e2; exp.e[3] = e3; exp.e[4] = e4; exp.e[5] = e5;
    exp.has_puiseux = true;

    // Matching conditions, order h^1 .. h^(5/2); they hold to roundoff by
    // construction, so any visible residual is a logic error.
    double r1 = c2 * e1 * e1 - 1.0;
    double r2 = 2.0 * c2 * e1 * e2 + c3 * std::pow(e1, 3);
    double r3 = c2 * (2.0 * e1 * e3 + e2 * e2) + 3.0 * c3 * e1 * e1 * e2
                + c4 * std::pow(e1, 4);
    double r4 = c2 * (2.0 * e1 * e4 + 2.0 * e2 * e3)
                + c3 * (3.0 * e1 * e1 * e3 + 3.0 * e1 * e2 * e2)
                + 4.0 * c4 * std::pow(e1, 3) * e2 + c5 * std::pow(e1, 5);
    double r5 = c2 * (2.0 * e1 * e5 + 2.0 * e2 * e4 + e3 * e3)
                + c3 * (6.0 * e1 * e2 * e3 + 3.0 * e1 * e1 * e4 + std::pow(e2, 3))
                + c4 * (6.0 * e1 * e1 * e2 * e2 + 4.0 * std::pow(e1, 3) * e3)
                + 5.0 * c5 * std::pow(e1, 4) * e2 + c6 * std::pow(e1, 6);
    double worst = std::max({std::fabs(r1), std::fabs(r2), std::fabs(r3),
                             std::fabs(r4), std::fabs(r5)});
    if (worst > 1e-8)
        throw structural_error("puiseux_coeffs: matching residual too large");
    return exp;
}

namespace {

struct EdgeSeries {
    HalfSeries lam;  // band function as series in w = h^(1/2)
    HalfSeries s1;   // d lambda / dh
    HalfSeries s2;   // d2 lambda / d theta^2 as series in w
    HalfSeries s3;   // dS2/dh (third theta-derivative carries a 2 sin(tau) factor)
};

EdgeSeries build_edge_series(const EdgeExpansion& exp, int branch) {
    HalfSeries k_half(0, {exp.l_n, exp.e[1], exp.e[2], exp.e[3], exp.e[4], exp.e[5]}, 5);
    if (branch < 0) k_half = k_half.flip_odd();
    EdgeSeries s;
    s.lam = k_half * k_half;
    s.s1 = s.lam.deriv_h();
    double z = exp.z_n;
    // (dh/dtau)^2 = (4 - z^2) + 2 z h - h^2 and dh/dtau d/dh(2 sin tau) ... :
    // chain rule gives S2 = S1' * ((4 - z^2) + 2 z h - h^2) + S1 * (z - h).
    HalfSeries q = HalfSeries::exact(0, {4.0 - z * z, 0.0, 2.0 * z, 0.0, -1.0});
    HalfSeries zh = HalfSeries::exact(0, {z, 0.0, -1.0});
    s.s2 = s.s1.deriv_h() * q + s.s1 * zh;
    s.s3 = s.s2.deriv_h();
    return s;
}

} // namespace

EdgeExpansion lambda_edge_coeffs(EdgeExpansion exp) {
    if (!exp.has_puiseux)
        throw domain_error("lambda_edge_coeffs: puiseux coefficients missing");
    EdgeSeries s = build_edge_series(exp, +1);
    exp.l_n_sq = s.lam.coeff(0);
    for (int m = 1; m <= 5; ++m) exp.lam0[m] = s.lam.coeff(m);
    exp.lam2_m3 = s.s2.coeff(-3);
    exp.lam2_m1 = s.s2.coeff(-1);
    exp.lam2_0 = s.s2.coeff(0);
    exp.lam2_1 = s.s2.coeff(1);
    exp.has_lambda = true;
    return exp;
}

EdgeJet lambda_edge_jet(const EdgeExpansion& exp, int branch, double theta) {
    if (!exp.has_puiseux)
        throw domain_error("lambda_edge_jet: puiseux coefficients missing");
    if (branch != 1 && branch != -1)
        throw domain_error("lambda_edge_jet: branch must be +1 or -1");
    double tau = theta - exp.n * pi;
    double st = std::sin(0.5 * tau);
    double h = exp.z_minus_2 + 4.0 * st * st; // z_n - 2 cos(tau), cancellation-free
    if (!(h > 0.0) || h >= 1.0)
        throw domain_error("lambda_edge_jet: theta outside expansion radius");
    double w = std::sqrt(h);
    double dh = 2.0 * std::sin(tau); // dh/dtau

    EdgeSeries s = build_edge_series(exp, branch);
    EdgeJet jet;
    jet.lambda = s.lam.eval(w);
    jet.d1 = dh * s.s1.eval(w);
    jet.d2 = s.s2.eval(w);
    jet.d3 = dh * s.s3.eval(w);
    return jet;
}

double theta0_asymptotic(int n, Potential V) {
    if (n < 1) throw domain_error("theta0_asymptotic: n must be >= 1");
    return n * pi - std::cbrt(V.V * V.V / (4.0 * n * pi));
}

InnerExpansion inner_expansion(int n, Potential V, double theta) {
    if (n < 1) throw domain_error("inner_expansion: n must be >= 1");
    double delta = V.V * V.V / (4.0 * n * pi);
    double margin = std::pow(delta, 0.25);
    if (theta < (n - 1) * pi + margin || theta > n * pi - margin)
        throw domain_error("inner_expansion: theta outside the inner window");

    double v = V.V;
    double s = std::sin(theta), c = std::cos(theta);
    double cot = c / s;
    InnerExpansion out;
    out.theta = theta;
    out.k = theta + 0.5 * v / theta + v * v / (8.0 * theta * theta) * cot;
    out.dk = 1.0 - 0.5 * v / (theta * theta) - v * v / (8.0 * theta * theta * s * s);
    out.d2k = v * v * c / (4.0 * theta * theta * s * s * s);
    out.lambda = theta * theta + v + v * v / (4.0 * theta) * cot;
    out.dlambda = 2.0 * theta - v * v / (4.0 * theta * s * s);
    out.d2lambda = 2.0 + v * v * c / (2.0 * theta * s * s * s);
    return out;
}

EdgeAsymptotics edge_asymptotics(int n, Potential V) {
    double v = V.V;
    double x = 1.0 / (n * pi);
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    EdgeAsymptotics a;
    a.y_n = sgn * (2.0 + 0.25 * v * v * x * x);
    a.d[2] = sgn * (-1.0 - (v + v * v / 8.0) * x * x);
    a.d[3] = sgn * (v + v * v / 6.0) * x * x * x;
    a.d[4] = sgn * (1.0 / 12.0 + (v / 6.0 + v * v / 96.0) * x * x);
    a.d[5] = sgn * (-(v / 6.0 + v * v / 60.0) * x * x * x);
    a.d[6] = sgn * (-1.0 / 360.0 - (v / 120.0 + v * v / 2880.0) * x * x);
    a.e1 = 1.0 - (0.5 * v + v * v / 16.0) * x * x;
    a.l_n_sq = 1.0 / (x * x) + v - (0.75 * v * v + v * v * v / 12.0) * x * x;
    a.lam0[1] = 2.0 * n * pi - v * v / 8.0 * x;
    a.lam0[2] = 1.0 + v * v / 24.0 * x * x;
    a.lam0[3] = n * pi / 12.0 - v * v / 64.0 * x;
    a.lam0[4] = 1.0 / 12.0 + v * v / 240.0 * x * x;
    a.lam0[5] = 3.0 * n * pi / 320.0 - 3.0 * v * v / 1024.0 * x;
    a.lam2_m3 = 0.5 * v * v * x;
    a.lam2_m1 = -v * v / 16.0 * x;
    a.lam2_0 = 2.0 + v * v / 6.0 * x * x;
    a.lam2_1 = -9.0 * v * v / 256.0 * x;
    return a;
}

} // namespace kp
