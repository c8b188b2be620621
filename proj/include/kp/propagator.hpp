#pragma once

#include <complex>
#include <span>
#include <vector>

#include "kp/bands.hpp"
#include "kp/bloch.hpp"

namespace kp {

/// Point query of the band-projected propagator kernel K_n(t; x, y).
/// x and y live on the whole line; only their cell offset jx - jy enters the
/// phase, the fractional parts select the amplitude arguments.  Integer
/// coordinates are rejected: the comb's derivative jumps make them ambiguous.
struct KernelQuery {
    int n;
    double t;
    double x;
    double y;

    long long cell_x() const;
    long long cell_y() const;
    double frac_x() const;
    double frac_y() const;
    long long offset() const { return cell_x() - cell_y(); }
};

void validate_query(const KernelQuery& q);

/// Controls for the oscillatory quadrature.  Node counts grow linearly with
/// the total phase winding  |t| width/(2 pi) + |offset|; exceeding max_nodes
/// raises resolution_refused rather than degrading accuracy.  Work is split
/// into blocks of panels whose partial sums are reduced in block order, so
/// results are independent of the number of threads.
struct QuadratureSpec {
    double nodes_per_oscillation = 8.0;
    long long min_nodes = 2000;
    int panel_order = 16;
    long long max_nodes = 400000000;
    long long panels_per_block = 1024;
};

/// Kernel via composite Gauss-Legendre over the quasimomentum.  Negative
/// times fold onto positive ones through K(-t; x, y) = conj K(t; y, x).
std::complex<double> kernel(const Band& band, const KernelQuery& q,
                            const QuadratureSpec& spec = {});

/// Raw quadrature without the negative-time fold (any sign of t); exposed so
/// the conjugation symmetry itself can be tested at quadrature level.
std::complex<double> kernel_quadrature(const Band& band, const KernelQuery& q,
                                       const QuadratureSpec& spec = {},
                                       long long* nodes_used = nullptr);

/// Strictly sequential single-accumulator evaluation; reference for the
/// blocked/parallel path and baseline for the benchmark.
std::complex<double> kernel_serial(const Band& band, const KernelQuery& q,
                                   const QuadratureSpec& spec = {});

/// Independent route: midpoint rule over normalized Bloch waves,
/// (1/2 pi) sum e^{-i t lambda} u(x) conj(u(y)).  Slowly convergent but
/// entirely detached from the amplitude algebra.
std::complex<double> kernel_oracle_eigen(const Band& band, const KernelQuery& q,
                                         int grid);

/// Independent route: spectral-measure form over energy,
/// ((-1)^(n-1)/pi) int e^{-i t lambda} Im[phi phi / W] d lambda, integrated
/// in k with edge-graded panels.  The inverse-square-root edge behavior is
/// integrable; a fixed energy sliver (1e-6) at each edge is excluded and its
/// estimated mass reported through excluded_mass.
std::complex<double> kernel_via_stone(const Band& band, const KernelQuery& q,
                                      int grid, double* excluded_mass = nullptr);

/// Whole-line resolvent kernel off the spectrum via the decaying Floquet
/// solutions: R(lambda)(x, y) = -phi_+(max) phi_-(min) / W(phi_+, phi_-).
std::complex<double> resolvent_kernel(std::complex<double> lambda, double x,
                                      double y, Potential V);

/// Oscillatory-integral bound  |I| <= c_k (|t| m)^(-1/k) (|psi(b)| + ||psi'||_1)
/// with c_k = 5 * 2^(k-1) - 2; for k = 1 the phase derivative must also be
/// monotone on the interval (caller's obligation, tracked by the partition).
struct VdcInput {
    int k;          // stationary-phase order, 1..3
    double m;       // lower bound for |phi^(k)| on the interval
    double psi_end; // |psi(b)|
    double psi_l1;  // total variation of psi
    double t;       // time (nonzero)
};

double van_der_corput_bound(const VdcInput& v);

/// One certified interval of a bound partition.
struct VdcInterval {
    double lo, hi;
    int k;    // derivative order used
    double m; // certified lower bound for |d^k/dtheta^k (lambda - s theta)|
};

/// Splits [-pi, pi] at the sign changes of the second and third band-function
/// derivatives and of lambda' - s, then assigns each piece the derivative
/// order with the smallest t-bound; pieces with no usable order are bisected
/// recursively and marked with m = 0 when that fails.
std::vector<VdcInterval> make_partition(const Band& band, double s, double t,
                                        int grid = 4096);

struct IntervalBound {
    VdcInterval interval;
    double bound;
    bool available;
};

struct BandBound {
    double total;    // sum over available intervals
    bool complete;   // true when every interval produced a bound
    std::vector<IntervalBound> parts;
};

/// Rigorous (up to grid certification of m) upper bound for |K_n(t; x, y)|
/// assembled interval by interval from van_der_corput_bound.
BandBound certified_band_bound(const Band& band, const KernelQuery& q,
                               std::span<const VdcInterval> partition);

/// Kernel on the uniform in-cell grid x_i = (i + 1/2)/grid at a fixed cell
/// offset: values[i * grid + j] = K(t; offset + x_i, y_j).  Shares the node
/// plan with kernel() but factorizes the amplitude into four oscillatory
/// moments per node, making the whole grid cost O(grid) per node instead of
/// O(grid^2).
struct GridKernel {
    int grid;
    long long offset;
    double t;
    long long nodes;
    std::vector<std::complex<double>> values;

    std::complex<double> at(int i, int j) const { return values[i * grid + j]; }
    double sup_abs() const;
};

GridKernel kernel_grid(const Band& band, double t, long long offset, int grid,
                       const QuadratureSpec& spec = {}, bool parallel = true);

/// Same grid evaluated pointwise through kernel_serial; test- and
/// benchmark-scale only.
GridKernel kernel_grid_reference(const Band& band, double t, long long offset,
                                 int grid, const QuadratureSpec& spec = {});

} // namespace kp
