#include "kp/bloch.hpp"

#include <cmath>

#include "kp/quadrature.hpp"

namespace kp {

namespace {

using cplx = std::complex<double>;
const cplx I(0.0, 1.0);

// sin(k x)/k with the k -> 0 limit.
double sin_over_k(double k, double x) {
    if (std::fabs(k) < 1e-8) return x * (1.0 - k * k * x * x / 6.0);
    return std::sin(k * x) / k;
}

} // namespace

BlochWave bloch_wave(const Band& band, double theta) {
    BlochWave w;
    w.n = band.n;
    w.V = band.V;
    w.theta = theta;
    w.k = k_of_theta(band, theta);
    w.A0 = -detail::sinc_deriv(w.k, 0);
    w.B0 = std::cos(w.k) - std::exp(I * theta);
    return w;
}

std::complex<double> bloch_eval(const BlochWave& wave, double x) {
    double j = std::floor(x);
    double xr = x - j;
    cplx cell = wave.A0 * std::cos(wave.k * xr)
              + wave.B0 * sin_over_k(wave.k, xr);
    return std::exp(I * wave.theta * j) * cell;
}

std::complex<double> bloch_deriv(const BlochWave& wave, double x) {
    double j = std::floor(x);
    double xr = x - j;
    cplx cell = -wave.A0 * wave.k * std::sin(wave.k * xr)
              + wave.B0 * std::cos(wave.k * xr);
    return std::exp(I * wave.theta * j) * cell;
}

std::complex<double> wronskian_pair(const Band& band, double theta) {
    double k = k_of_theta(band, theta);
    return -2.0 * I * detail::sinc_deriv(k, 0) * std::sin(theta);
}

std::complex<double> wronskian_numeric(const BlochWave& f, const BlochWave& g,
                                       double x) {
    return bloch_eval(f, x) * bloch_deriv(g, x) - bloch_deriv(f, x) * bloch_eval(g, x);
}

double normalization(const BlochWave& wave) {
    if (std::abs(wave.A0) < 1e-14 && std::abs(wave.B0) < 1e-14)
        throw structural_error("normalization: degenerate wave at a band edge");
    auto density = [&](double x) {
        cplx v = wave.A0 * std::cos(wave.k * x) + wave.B0 * sin_over_k(wave.k, x);
        return std::norm(v);
    };
    double n2 = integrate_adaptive(density, 0.0, 1.0, 1e-13, 1e-300);
    return std::sqrt(n2);
}

AmplitudeTerms amplitude_terms(const Band& band, double theta) {
    AmplitudeTerms t;
    t.theta = theta;
    t.k = k_of_theta(band, theta);
    Potential V = (band.V == 0.0) ? Potential::zero_for_oracle() : Potential(band.V);
    DiscriminantJet jet = discriminant_derivs(t.k, V, 1);
    t.dprime = jet.derivative[1];
    if (t.dprime == 0.0)
        throw structural_error("amplitude_terms: critical point inside band");
    double s = std::sin(t.k), c = std::cos(t.k);
    double v = band.V;
    t.alpha = 0.5 * v / t.k;
    t.c1 = -2.0 * s / t.dprime;
    t.c2 = -2.0 * std::sin(theta) / t.dprime;
    // Third coefficient -2 sin^2(theta) / (sin k D'(k)) rewritten through
    // 4 sin^2(theta) = 4 - D(k)^2, which cancels the sin k in the denominator
    // analytically; this form stays finite at every band edge.
    t.c3 = (-4.0 * s + 4.0 * v * c / t.k + v * v * s / (t.k * t.k)) / (2.0 * t.dprime);
    return t;
}

std::complex<double> amplitude_from_terms(const AmplitudeTerms& t, double x,
                                          double y) {
    double skx = std::sin(t.k * x), ckx = std::cos(t.k * x);
    double sky = std::sin(t.k * y), cky = std::cos(t.k * y);
    double px = ckx + t.alpha * skx;
    double py = cky + t.alpha * sky;
    double sindiff = skx * cky - ckx * sky; // sin(k (x - y))
    return cplx(t.c1 * px * py + t.c3 * skx * sky, t.c2 * sindiff);
}

std::complex<double> amplitude(const Band& band, double theta, double x, double y) {
    if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
        throw domain_error("amplitude: in-cell coordinates must lie in [0, 1]");
    AmplitudeTerms t = amplitude_terms(band, theta);
    return amplitude_from_terms(t, x, y);
}

} // namespace kp
