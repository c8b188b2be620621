#include "kp/discriminant.hpp"

#include <cmath>

namespace kp {

namespace {

constexpr double series_radius = 0.5;

// Closed-form j-th derivatives of sin(k)/k written over a basis of
// sin/cos times inverse powers of k.  Valid for |k| >= series_radius.
void sinc_derivs_closed(double s, double c, double inv_k, int jmax, double out[7]) {
    double p1 = inv_k;
    double p2 = p1 * inv_k;
    double p3 = p2 * inv_k;
    double p4 = p3 * inv_k;
    double p5 = p4 * inv_k;
    double p6 = p5 * inv_k;
    double p7 = p6 * inv_k;
    out[0] = s * p1;
    if (jmax >= 1) out[1] = c * p1 - s * p2;
    if (jmax >= 2) out[2] = -s * p1 - 2.0 * c * p2 + 2.0 * s * p3;
    if (jmax >= 3) out[3] = -c * p1 + 3.0 * s * p2 + 6.0 * c * p3 - 6.0 * s * p4;
    if (jmax >= 4) out[4] = s * p1 + 4.0 * c * p2 - 12.0 * s * p3 - 24.0 * c * p4
                            + 24.0 * s * p5;
    if (jmax >= 5) out[5] = c * p1 - 5.0 * s * p2 - 20.0 * c * p3 + 60.0 * s * p4
                            + 120.0 * c * p5 - 120.0 * s * p6;
    if (jmax >= 6) out[6] = -s * p1 - 6.0 * c * p2 + 30.0 * s * p3 + 120.0 * c * p4
                            - 360.0 * s * p5 - 720.0 * c * p6 + 720.0 * s * p7;
}

// Termwise-differentiated Maclaurin series of sin(k)/k, even in k, used
// below series_radius where the closed forms lose digits to cancellation.
void sinc_derivs_series(double k, int jmax, double out[7]) {
    constexpr int mmax = 15;
    for (int j = 0; j <= jmax; ++j) {
        double sum = 0.0;
        // Descending m gives ascending magnitude: summing small terms first.
        for (int m = mmax; 2 * m >= j; --m) {
            double coeff = 1.0;
            for (int i = 0; i < j; ++i) coeff *= static_cast<double>(2 * m - i);
            double fact = 1.0;
            for (int i = 2; i <= 2 * m + 1; ++i) fact *= static_cast<double>(i);
            coeff /= fact;
            if (m & 1) coeff = -coeff;
            sum += coeff * std::pow(k, 2 * m - j);
        }
        out[j] = sum;
    }
}

void cos_derivs(double s, double c, int jmax, double out[7]) {
    const double cycle[4] = {c, -s, -c, s};
    for (int j = 0; j <= jmax; ++j) out[j] = cycle[j & 3];
}

} // namespace

double discriminant(double k, Potential V) {
    return discriminant_derivs(k, V, 0).derivative[0];
}

double discriminant_negative_energy(double lambda, Potential V) {
    if (lambda >= 0.0)
        throw domain_error("discriminant_negative_energy: lambda must be < 0");
    double s = std::sqrt(-lambda);
    double sinhc = (s < 1e-4) ? 1.0 + s * s / 6.0 + s * s * s * s / 120.0
                              : std::sinh(s) / s;
    return 2.0 * std::cosh(s) + V.V * sinhc;
}

DiscriminantJet discriminant_derivs(double k, Potential V, int max_order) {
    if (k < 0.0)
        throw domain_error("discriminant_derivs: k must be >= 0");
    if (max_order < 0 || max_order > 6)
        throw domain_error("discriminant_derivs: max_order must be in [0, 6]");

    double sj[7], cj[7];
    if (std::fabs(k) < series_radius)
        sinc_derivs_series(k, max_order, sj);
    else
        sinc_derivs_closed(std::sin(k), std::cos(k), 1.0 / k, max_order, sj);
    cos_derivs(std::sin(k), std::cos(k), max_order, cj);

    DiscriminantJet jet;
    jet.k = k;
    jet.max_order = max_order;
    for (int j = 0; j <= max_order; ++j)
        jet.derivative[j] = 2.0 * cj[j] + V.V * sj[j];
    for (int j = max_order + 1; j < 7; ++j) jet.derivative[j] = 0.0;
    return jet;
}

DiscriminantJet discriminant_derivs_shifted(double h, int n, Potential V,
                                            int max_order) {
    double k = n * pi + h;
    if (k < series_radius)
        throw domain_error("discriminant_derivs_shifted: n*pi + h too small");
    if (max_order < 0 || max_order > 6)
        throw domain_error("discriminant_derivs_shifted: max_order must be in [0, 6]");

    // sin(n pi + h) = (-1)^n sin h and likewise for cos, so the parity
    // factor cancels against the requested (-1)^n overall sign.
    double s = std::sin(h), c = std::cos(h);
    double sj[7], cj[7];
    sinc_derivs_closed(s, c, 1.0 / k, max_order, sj);
    cos_derivs(s, c, max_order, cj);

    DiscriminantJet jet;
    jet.k = k;
    jet.max_order = max_order;
    for (int j = 0; j <= max_order; ++j)
        jet.derivative[j] = 2.0 * cj[j] + V.V * sj[j];
    for (int j = max_order + 1; j < 7; ++j) jet.derivative[j] = 0.0;
    return jet;
}

double edge_equation_shifted(double h, int n, Potential V) {
    double k = n * pi + h;
    double sh = std::sin(0.5 * h), ch = std::cos(0.5 * h);
    return 2.0 * sh * (V.V * ch / k - 2.0 * sh);
}

double critical_equation_shifted(double h, int n, Potential V) {
    double k = n * pi + h;
    double s = std::sin(h), c = std::cos(h);
    return -2.0 * s + V.V * (c / k - s / (k * k));
}

Mat2 transfer_matrix(double k, Potential V) {
    if (k < 0.0)
        throw domain_error("transfer_matrix: k must be >= 0");
    double sinc = detail::sinc_deriv(k, 0);
    double c = std::cos(k);
    double ks = k * std::sin(k);
    return Mat2{c, sinc, V.V * c - ks, V.V * sinc + c};
}

namespace detail {

double sinc_deriv(double k, int j) {
    double out[7];
    if (std::fabs(k) < series_radius)
        sinc_derivs_series(k, j, out);
    else
        sinc_derivs_closed(std::sin(k), std::cos(k), 1.0 / k, j, out);
    return out[j];
}

} // namespace detail

} // namespace kp
