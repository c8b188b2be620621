#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "kp/common.hpp"

namespace kp {

/// Truncated Laurent polynomial in w = h^(1/2) with real coefficients and an
/// explicit trust horizon: coefficients above `trusted` are unknown, not
/// zero.  Arithmetic propagates the horizon so that composing expansions can
/// never silently promote junk terms to results.
class HalfSeries {
  public:
    HalfSeries() : jmin_(0), trusted_(-1) {}

    HalfSeries(int jmin, std::vector<double> coeff, int trusted)
        : jmin_(jmin), coeff_(std::move(coeff)), trusted_(trusted) {
        trim();
    }

    static HalfSeries exact(int jmin, std::vector<double> coeff) {
        // Exact polynomial: trusted horizon far beyond any composition here.
        return HalfSeries(jmin, std::move(coeff), 1 << 20);
    }

    int jmin() const { return jmin_; }
    int trusted() const { return trusted_; }

    double coeff(int j) const {
        if (j < jmin_ || j >= jmin_ + static_cast<int>(coeff_.size())) return 0.0;
        return coeff_[j - jmin_];
    }

    HalfSeries operator+(const HalfSeries& o) const {
        int lo = std::min(jmin_, o.jmin_);
        int hi = std::max(top(), o.top());
        int tr = std::min(trusted_, o.trusted_);
        std::vector<double> c(std::max(0, hi - lo + 1), 0.0);
        for (int j = lo; j <= hi; ++j) c[j - lo] = coeff(j) + o.coeff(j);
        return HalfSeries(lo, std::move(c), tr);
    }

    HalfSeries operator*(const HalfSeries& o) const {
        int lo = jmin_ + o.jmin_;
        int tr = std::min(trusted_ + o.jmin_, o.trusted_ + jmin_);
        int hi = std::min(top() + o.top(), tr);
        std::vector<double> c(std::max(0, hi - lo + 1), 0.0);
        for (int a = jmin_; a <= top(); ++a)
            for (int b = o.jmin_; b <= o.top(); ++b) {
                int j = a + b;
                if (j <= hi) c[j - lo] += coeff(a) * o.coeff(b);
            }
        return HalfSeries(lo, std::move(c), tr);
    }

    HalfSeries scaled(double s) const {
        std::vector<double> c = coeff_;
        for (double& v : c) v *= s;
        return HalfSeries(jmin_, std::move(c), trusted_);
    }

    /// d/dh applied termwise: c w^j -> (j/2) c w^(j-2).
    HalfSeries deriv_h() const {
        std::vector<double> c(coeff_.size());
        for (size_t i = 0; i < coeff_.size(); ++i) {
            int j = jmin_ + static_cast<int>(i);
            c[i] = 0.5 * j * coeff_[i];
        }
        return HalfSeries(jmin_ - 2, std::move(c), trusted_ - 2);
    }

    /// Branch flip w -> -w (negates odd-exponent coefficients).
    HalfSeries flip_odd() const {
        std::vector<double> c = coeff_;
        for (size_t i = 0; i < c.size(); ++i) {
            int j = jmin_ + static_cast<int>(i);
            if (j & 1) c[i] = -c[i];
        }
        return HalfSeries(jmin_, std::move(c), trusted_);
    }

    /// Evaluate using trusted coefficients only.
    double eval(double w) const {
        if (w <= 0.0) throw domain_error("HalfSeries::eval: w must be > 0");
        double sum = 0.0;
        for (int j = std::min(top(), trusted_); j >= jmin_; --j)
            sum = sum * w + coeff(j); // Horner over consecutive exponents
        return sum * std::pow(w, jmin_);
    }

  private:
    int top() const { return jmin_ + static_cast<int>(coeff_.size()) - 1; }

    void trim() {
        while (!coeff_.empty() && coeff_.front() == 0.0 && jmin_ < 0) {
            coeff_.erase(coeff_.begin());
            ++jmin_;
        }
    }

    int jmin_;
    std::vector<double> coeff_;
    int trusted_;
};

} // namespace kp
