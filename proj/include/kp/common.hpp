#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace kp {

inline constexpr double pi = std::numbers::pi;

/// Thrown when a computed quantity violates a structural convention of the
/// model (wrong bracket, non-monotone inverse, lost sign pattern).  These
/// indicate a bug or an input outside the supported regime, never roundoff.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument to a numerical routine (out-of-domain point, bad order).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An oscillatory integral would need more quadrature nodes than the
/// configured cap allows.  Callers should treat the result as unavailable
/// rather than silently degrade accuracy.
struct resolution_refused : std::runtime_error {
    long long needed;
    long long cap;
    resolution_refused(long long needed_, long long cap_)
        : std::runtime_error("quadrature resolution refused: need "
                             + std::to_string(needed_) + " nodes, cap is "
                             + std::to_string(cap_)),
          needed(needed_), cap(cap_) {}
};

/// No certified curvature sign change: the inflection bracket failed even
/// after widening.  Expected for some low bands; callers may fall back to a
/// grid scan of curvature sign changes.
struct no_inflection_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad run configuration (file or flags).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coupling strength of the delta comb.  V = 0 collapses the gap structure,
/// so it is rejected here; test oracles that need the free Laplacian build
/// the value through zero_for_oracle() to make the intent explicit.
struct Potential {
    double V;

    explicit Potential(double v) : V(v) {
        if (v == 0.0)
            throw domain_error("Potential: V = 0 is reserved for test oracles");
    }

    static Potential zero_for_oracle() {
        Potential p;
        return p;
    }

  private:
    Potential() : V(0.0) {}
};

} // namespace kp
