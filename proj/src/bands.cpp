#include "kp/bands.hpp"

#include <algorithm>
#include <cmath>

#include "kp/roots.hpp"

namespace kp {

namespace {

// Sign-change scan used for low bands and V < 0 where endpoint brackets are
// not available analytically.
std::pair<double, double> find_bracket(const std::function<double(double)>& f,
                                       double a, double b, int cells) {
    double fa = f(a);
    for (int i = 1; i <= cells; ++i) {
        double x = a + (b - a) * static_cast<double>(i) / cells;
        double fx = f(x);
        if (fa == 0.0) return {a, a};
        if ((fa > 0.0) != (fx > 0.0)) return {a + (b - a) * (i - 1.0) / cells, x};
        fa = fx;
    }
    throw structural_error("find_bracket: no sign change located");
}

// Factor of the band-edge equation with the trivial h = 0 root removed:
//   (-1)^n D(n pi + h) - 2 = 2 sin(h/2) * factor(h).
double edge_factor(double h, int n, Potential V) {
    double k = n * pi + h;
    return V.V * std::cos(0.5 * h) / k - 2.0 * std::sin(0.5 * h);
}

} // namespace

double critical_point_offset(int n, Potential V) {
    if (V.V == 0.0) return 0.0; // free-oracle limit: l_n = n pi
    if (V.V > 0.0) {
        if (n < 0) throw domain_error("critical_point: n must be >= 0 for V > 0");
        if (n == 0) return 0.0; // convention l_0 = 0 (offset measured from 0)
        auto f = [&](double h) { return critical_equation_shifted(h, n, V); };
        return brent(f, 0.0, pi);
    }
    if (n < 1) throw domain_error("critical_point: n must be >= 1 for V < 0");
    auto f = [&](double h) { return critical_equation_shifted(h, n, V); };
    auto [a, b] = find_bracket(f, -pi + 1e-9, -1e-12, 512);
    return brent(f, a, b);
}

double critical_point(int n, Potential V) {
    if (V.V > 0.0 && n == 0) return 0.0;
    return n * pi + critical_point_offset(n, V);
}

double band_edge_offset(int n, Potential V) {
    if (V.V == 0.0) return 0.0; // free-oracle limit: k_n = n pi
    auto f = [&](double h) { return edge_factor(h, n, V); };
    if (V.V > 0.0) {
        if (n < 0) throw domain_error("band_edge: n must be >= 0 for V > 0");
        if (n == 0) {
            // factor(h) ~ V/h near 0; start past the blowup but before the root.
            double lo = std::min(0.5 * std::sqrt(V.V), 0.5 * pi);
            if (f(lo) <= 0.0) {
                auto [a, b] = find_bracket(f, 1e-8, pi, 1024);
                return brent(f, a, b);
            }
            return brent(f, lo, pi);
        }
        return brent(f, 0.0, pi);
    }
    if (n < 2) throw domain_error("band_edge: n must be >= 2 for V < 0");
    return brent(f, -pi + 1e-9, 0.0);
}

double band_edge(int n, Potential V) {
    return n * pi + band_edge_offset(n, V);
}

Band build_band(int n, Potential V) {
    Band band;
    band.n = n;
    band.V = V.V;
    if (V.V >= 0.0) {
        if (n < 1) throw domain_error("build_band: n must be >= 1 for V > 0");
        band.k_lo = band_edge(n - 1, V);
        band.k_hi = n * pi;
        band.l_lo = critical_point(n - 1, V);
        band.l_hi = critical_point(n, V);
    } else {
        if (n < 2) throw domain_error("build_band: n must be >= 2 for V < 0");
        band.k_lo = (n - 1) * pi;
        band.k_hi = band_edge(n, V);
        band.l_lo = critical_point(n - 1, V);
        band.l_hi = critical_point(n, V);
    }
    band.lambda_lo = band.k_lo * band.k_lo;
    band.lambda_hi = band.k_hi * band.k_hi;
    band.k_increasing = (n % 2 != 0);

    if (!(band.k_lo < band.k_hi))
        throw structural_error("build_band: edge ordering violated");
    if (!(band.l_lo <= band.k_lo + 1e-12 && band.k_hi <= band.l_hi + 1e-12))
        throw structural_error("build_band: band not inside critical bracket");
    // D must cross from 2*(-1)^(n-1) to 2*(-1)^n monotonically: spot-check the
    // derivative sign at a few interior points.
    double want = (n % 2 != 0) ? -1.0 : 1.0;
    for (int i = 1; i <= 5; ++i) {
        double k = band.k_lo + (band.k_hi - band.k_lo) * i / 6.0;
        double dp = discriminant_derivs(k, V, 1).derivative[1];
        if (dp * want <= 0.0)
            throw structural_error("build_band: discriminant not monotone on band");
    }
    return band;
}

double k_of_theta(const Band& band, double theta) {
    if (std::fabs(theta) > pi + 1e-12)
        throw domain_error("k_of_theta: theta outside [-pi, pi]");
    double th = std::min(std::fabs(theta), pi);
    double target = 2.0 * std::cos(th);
    Potential V = (band.V == 0.0) ? Potential::zero_for_oracle() : Potential(band.V);

    auto fdf = [&](double k, double& f, double& df) {
        DiscriminantJet jet = discriminant_derivs(k, V, 1);
        f = jet.derivative[0] - target;
        df = jet.derivative[1];
    };
    double frac = th / pi;
    if (!band.k_increasing) frac = 1.0 - frac;
    double x0 = band.k_lo + (band.k_hi - band.k_lo) * frac;
    return newton_bracketed(fdf, band.k_lo, band.k_hi, x0, 0.0);
}

ThetaSample lambda_jet(const Band& band, double theta) {
    ThetaSample out;
    out.theta = theta;
    double k = k_of_theta(band, theta);
    out.k = k;
    out.lambda = k * k;

    Potential V = (band.V == 0.0) ? Potential::zero_for_oracle() : Potential(band.V);
    DiscriminantJet jet = discriminant_derivs(k, V, 3);
    double dp = jet.derivative[1];
    if (dp == 0.0)
        throw structural_error("lambda_jet: critical point inside band");
    double s = std::sin(theta);
    double Dv = 2.0 * std::cos(theta); // exact on-curve value of D(k(theta))

    if (std::fabs(s) < 1e-12) {
        // Band edge: odd-order theta-derivatives vanish identically.
        double k2 = -Dv / dp;
        out.dk_dtheta = 0.0;
        out.d1 = 0.0;
        out.d2 = 2.0 * k * k2;
        out.d3 = 0.0;
        return out;
    }

    double dpp = jet.derivative[2];
    double dppp = jet.derivative[3];
    double four_minus_D2 = 4.0 * s * s; // 4 - D^2 on the dispersion curve
    double inv = 1.0 / dp;
    double inv2 = inv * inv;
    double inv3 = inv2 * inv;

    double k1 = -2.0 * s * inv;
    double k2 = -inv3 * dpp * four_minus_D2 - inv * Dv;
    double k3 = ((-3.0 * inv3 * inv2 * dpp * dpp + inv2 * inv2 * dppp) * four_minus_D2
                 - 3.0 * inv3 * Dv * dpp + inv) * 2.0 * s;

    out.dk_dtheta = k1;
    out.d1 = 2.0 * k * k1;
    out.d2 = 2.0 * k1 * k1 + 2.0 * k * k2;
    out.d3 = 6.0 * k1 * k2 + 2.0 * k * k3;
    return out;
}

double theta_unfolded_from_reduced(const Band& band, double theta_reduced) {
    double th = std::fabs(theta_reduced);
    return band.k_increasing ? (band.n - 1) * pi + th : band.n * pi - th;
}

double theta_reduced_from_unfolded(const Band& band, double theta_unfolded) {
    if (theta_unfolded < (band.n - 1) * pi - 1e-9 ||
        theta_unfolded > band.n * pi + 1e-9)
        throw domain_error("theta_reduced_from_unfolded: theta outside band window");
    double th = band.k_increasing ? theta_unfolded - (band.n - 1) * pi
                                  : band.n * pi - theta_unfolded;
    return std::clamp(th, 0.0, pi);
}

ThetaSample lambda_jet_unfolded(const Band& band, double theta_unfolded) {
    double th = theta_reduced_from_unfolded(band, theta_unfolded);
    ThetaSample s = lambda_jet(band, th);
    s.theta = theta_unfolded;
    if (!band.k_increasing) {
        s.dk_dtheta = -s.dk_dtheta;
        s.d1 = -s.d1;
        s.d3 = -s.d3;
    }
    return s;
}

double inflection_point(const Band& band) {
    double delta = band.V * band.V / (4.0 * band.n * pi);
    double d13 = std::cbrt(delta);
    auto curvature = [&](double tau) {
        return lambda_jet_unfolded(band, band.n * pi + tau).d2;
    };
    double lo = -2.0 * d13;
    double hi = -0.5 * d13;
    const double tau_min = -(pi - 1e-9);
    for (int attempt = 0; attempt < 5; ++attempt) {
        double clo = std::max(lo, tau_min);
        if (curvature(clo) * curvature(hi) < 0.0) {
            double tau0 = brent([&](double t) { return curvature(t); }, clo, hi, 1e-14);
            return band.n * pi + tau0;
        }
        lo *= 2.0;
        hi *= 0.5;
    }
    throw no_inflection_error("inflection_point: no certified curvature sign change"
                              " near the top edge (band n=" + std::to_string(band.n) + ")");
}

double inflection_point_reduced(const Band& band) {
    return theta_reduced_from_unfolded(band, inflection_point(band));
}

std::vector<double> curvature_sign_changes(const Band& band, int grid) {
    std::vector<double> zeros;
    double prev_theta = -pi;
    double prev = lambda_jet(band, prev_theta).d2;
    for (int i = 1; i <= grid; ++i) {
        double th = -pi + 2.0 * pi * i / grid;
        double cur = lambda_jet(band, th).d2;
        if (prev == 0.0) {
            zeros.push_back(prev_theta);
        } else if ((prev > 0.0) != (cur > 0.0)) {
            double z = brent([&](double t) { return lambda_jet(band, t).d2; },
                             prev_theta, th, 1e-13);
            zeros.push_back(z);
        }
        prev = cur;
        prev_theta = th;
    }
    return zeros;
}

double max_group_velocity(const Band& band) {
    try {
        double th0 = inflection_point_reduced(band);
        return std::fabs(lambda_jet(band, th0).d1);
    } catch (const no_inflection_error&) {
        // Low bands: fall back to a dense scan with local refinement.
        const int grid = 4096;
        double best = 0.0, best_th = 0.0;
        for (int i = 0; i <= grid; ++i) {
            double th = pi * i / grid;
            double v = std::fabs(lambda_jet(band, th).d1);
            if (v > best) { best = v; best_th = th; }
        }
        double a = std::max(0.0, best_th - pi / grid);
        double b = std::min(pi, best_th + pi / grid);
        for (int it = 0; it < 60; ++it) {
            double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
            if (std::fabs(lambda_jet(band, m1).d1) < std::fabs(lambda_jet(band, m2).d1))
                a = m1;
            else
                b = m2;
        }
        return std::fabs(lambda_jet(band, 0.5 * (a + b)).d1);
    }
}

} // namespace kp
