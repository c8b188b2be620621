#include "kp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kp {

double brent(const std::function<double(double)>& f, double a, double b,
             double tol_x, int max_iter) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw structural_error("brent: endpoints do not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int it = 0; it < max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa; d = b - a; e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * tol_x;
        double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q, r;
            double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q),
                                   std::fabs(e * q))) {
                e = d; d = p / q;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        if (std::fabs(d) > tol1)
            b += d;
        else
            b += (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

double newton_bracketed(const std::function<void(double, double&, double&)>& fdf,
                        double lo, double hi, double x0,
                        double tol_x, int max_iter) {
    double fl, dfl;
    fdf(lo, fl, dfl);
    if (fl == 0.0) return lo;
    const bool lo_positive = fl > 0.0;

    double a = lo, b = hi;
    double x = std::clamp(x0, a, b);
    for (int it = 0; it < max_iter; ++it) {
        double fx, dfx;
        fdf(x, fx, dfx);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == lo_positive) a = x; else b = x;

        double xn = (dfx != 0.0) ? x - fx / dfx : 0.5 * (a + b);
        if (!(xn > a && xn < b) || !std::isfinite(xn))
            xn = 0.5 * (a + b);
        if (std::fabs(xn - x) <= tol_x + 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(xn))
            return xn;
        x = xn;
    }
    return x;
}

} // namespace kp
