#pragma once

#include <complex>

#include "kp/bands.hpp"

namespace kp {

/// Unnormalized Floquet solution on the line, pinned down by its unit-cell
/// data: phi(x) = e^{i j theta} (A0 cos(k x') + B0 sin(k x')/k) for
/// x = j + x', x' in [0, 1), with A0 = -sin(k)/k and B0 = cos k - e^{i theta}.
struct BlochWave {
    int n;
    double V;
    double theta;
    double k;
    std::complex<double> A0;
    std::complex<double> B0;
};

BlochWave bloch_wave(const Band& band, double theta);

std::complex<double> bloch_eval(const BlochWave& wave, double x);

/// One-sided derivative from within the cell of x (jumps live at integers).
std::complex<double> bloch_deriv(const BlochWave& wave, double x);

/// Wronskian of the theta / -theta pair, closed form -2i sin(k) sin(theta)/k.
std::complex<double> wronskian_pair(const Band& band, double theta);

/// W[f, g](x) = f(x) g'(x) - f'(x) g(x) evaluated numerically at x.
std::complex<double> wronskian_numeric(const BlochWave& f, const BlochWave& g,
                                       double x);

/// Unit-cell L2 norm of the wave (adaptive quadrature).  Degenerate waves
/// (both coefficients below 1e-14) are rejected: at a band edge with
/// k = m pi the raw cell data collapses to zero.
double normalization(const BlochWave& wave);

/// Spectral amplitude of the band-projected evolution written over the
/// in-cell coordinates x, y in [0, 1]:
///   a_n = c1 P(x) P(y) + i c2 sin(k (x-y)) + c3 sin(k x) sin(k y),
/// with P(x) = cos(k x) + (V/2k) sin(k x).  All three coefficients are
/// evaluated in forms regular across the band edges.
struct AmplitudeTerms {
    double theta;
    double k;
    double dprime; // D'(k)
    double c1, c2, c3;
    double alpha;  // V / (2k)
};

AmplitudeTerms amplitude_terms(const Band& band, double theta);

std::complex<double> amplitude(const Band& band, double theta, double x, double y);

/// Same value assembled from the amplitude pieces at a known (theta, k, D')
/// point; used by the quadrature drivers that track k themselves.
std::complex<double> amplitude_from_terms(const AmplitudeTerms& t, double x,
                                          double y);

} // namespace kp
