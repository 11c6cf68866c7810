#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "ggt/exact/poly.hpp"

namespace ggt {

// Small dense double matrix for the numeric side (adapted norms, numeric
// splitting bases). Row-major.
struct MatD {
    int rows = 0, cols = 0;
    std::vector<double> a;

    MatD() = default;
    MatD(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
    static MatD from(const MatZ& m);
    static MatD identity(int n);

    double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    MatD operator*(const MatD& o) const;
    std::vector<double> apply(const std::vector<double>& v) const;
    MatD inverse() const;          // LU with partial pivoting
    double operator_norm() const;  // largest singular value
};

// An automorphism of Z^n: integer matrix with determinant +-1. Immutable.
class IntAutomorphism {
  public:
    explicit IntAutomorphism(MatZ m);
    static IntAutomorphism from_string(const std::string& text) {
        return IntAutomorphism(parse_matrix(text));
    }

    int dim() const { return mat_.rows(); }
    const MatZ& mat() const { return mat_; }
    const MatZ& inv() const { return inv_; }
    const Int& det() const { return det_; }
    const PolyZ& characteristic() const { return charpoly_; }

    // phi^k for any integer k, exact.
    MatZ power(long k) const;
    VecZ iterate(const VecZ& v, long k) const;

    // Exact spectral predicates.
    bool has_eigenvalue_one() const;
    bool has_eigenvalue_minus_one() const;
    bool is_hyperbolic() const;
    bool all_eigenvalues_real() const;
    bool all_eigenvalues_positive_real() const;
    bool is_diagonalizable_over_r() const;
    // Hypothesis bundle for the orbit-intersection machinery: hyperbolic,
    // diagonalizable over R, all eigenvalues positive.
    bool is_positive_diagonal_action() const;

  private:
    MatZ mat_, inv_;
    Int det_;
    PolyZ charpoly_;
};

struct Eigenvalue {
    std::complex<double> value;
    double radius;  // certified inclusion radius
    int multiplicity;
    bool is_real;
    bool on_unit_circle;  // exact verdict
};

struct Spectrum {
    std::vector<Eigenvalue> roots;
    double spectral_radius;
    double radius_error;  // |rho - spectral_radius| <= radius_error
};

Spectrum spectrum(const IntAutomorphism& m);

// Bases of E-, E+, E0 (root-space sums for |lambda| <,>,= 1). Rational
// chunks are exact; the rest is numeric and flagged.
struct SplitComponent {
    std::vector<std::vector<double>> basis;  // numeric copies, always filled
    std::vector<VecQ> exact;                 // filled iff rational
    bool rational = false;
    int dimension() const { return static_cast<int>(basis.size()); }
};

struct SpectralSplitting {
    SplitComponent minus, plus, zero;
};

SpectralSplitting spectral_splitting(const IntAutomorphism& m);

struct AdaptedNorm {
    MatD basis_change;  // B with ||B phi B^-1|| <= certified_bound
    double delta;
    double certified_bound;
};

// Prop.-style adapted norm: ||B M B^-1||_2 < rho(M) + delta. Works for any
// real matrix; the IntAutomorphism overload uses the certified spectral
// radius lower bound. Throws precision_error when the epsilon scaling
// bottoms out without certification.
AdaptedNorm adapted_norm(const MatD& m, double delta);
AdaptedNorm adapted_norm(const IntAutomorphism& m, double delta);

struct OrbitWindow {
    VecZ base;
    long lo, hi;
    std::vector<VecZ> points;  // points[i - lo] = phi^i(base)

    const VecZ& at(long i) const { return points[static_cast<size_t>(i - lo)]; }
};

OrbitWindow orbit(const VecZ& z, const IntAutomorphism& m, long lo, long hi);

struct IntersectionReport {
    long count = 0;
    std::vector<std::pair<long, long>> witnesses;  // (i, j) with phi^i z = a + phi^j w
};

// Count of solutions to phi^i z = a + phi^j w over |i|,|j| <= window.
// Hypotheses of the two-point bound are enforced exactly.
IntersectionReport orbit_intersection_count(const VecZ& z, const VecZ& w, const VecZ& a,
                                            const IntAutomorphism& m, long window);

// First pair (i < j) of points with ||phi^k(p_i - p_j)|| > D for all
// |k| <= window; nullopt when no pair qualifies.
std::optional<std::pair<std::size_t, std::size_t>> separated_pair(
    const std::vector<VecZ>& points, const Rat& d_bound, const IntAutomorphism& m, long window);

// Exact count of lattice points in the closed ball of radius D.
long long lattice_ball_count(const Rat& d_bound, int dim);

// N = 2 |S|^2 with S the closed-ball lattice points.
long long packing_bound_estimate(const Rat& d_bound, const IntAutomorphism& m);

// Certified escape window per the finite-check policy: after K steps, every
// nonzero v with ||v|| <= 2D stays above D across the whole buffer window
// with nondecreasing norms. Exponential growth makes the scan terminate.
struct WindowCertificate {
    long k;       // certified escape index
    long buffer;  // verified margin
};
WindowCertificate certified_window(const IntAutomorphism& m, const Rat& d_bound,
                                   long buffer = 10, long max_k = 400);

// Integer basis (HNF rows) of Z^n intersected with the sum of the root
// spaces away from eigenvalue 1. Requires all eigenvalues real positive.
std::vector<VecZ> invariant_lattice(const IntAutomorphism& m);

}  // namespace ggt
