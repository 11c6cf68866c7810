#pragma once

#include <complex>
#include <vector>

#include "ggt/exact/matrix.hpp"

namespace ggt {

// Integer polynomial, coefficients low-to-high, trailing zeros trimmed.
struct PolyZ {
    std::vector<Int> c;

    PolyZ() = default;
    explicit PolyZ(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Int& leading() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const PolyZ& o) const = default;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    PolyZ derivative() const;
    PolyZ operator*(const PolyZ& o) const;
    PolyZ operator+(const PolyZ& o) const;
    PolyZ operator-(const PolyZ& o) const;
    PolyZ negated() const;

    // Exact quotient; throws if the division is not exact.
    PolyZ divexact(const PolyZ& d) const;

    Int content() const;
    PolyZ primitive_part() const;

    std::string to_string() const;  // human form, highest degree first
};

// Primitive gcd via a pseudo-remainder sequence; result is primitive with
// positive leading coefficient.
PolyZ poly_gcd(const PolyZ& a, const PolyZ& b);

// p / gcd(p, p'): same roots, all simple.
PolyZ square_free_part(const PolyZ& p);

// Yun decomposition: p = prod f_i^{m_i} with the f_i square-free and coprime.
struct SquareFreeFactor {
    PolyZ factor;
    int multiplicity;
};
std::vector<SquareFreeFactor> square_free_decomposition(const PolyZ& p);

// Characteristic polynomial det(xI - A), monic, exact (Faddeev-LeVerrier).
PolyZ char_poly(const MatZ& a);

// Number of distinct real roots in the open interval (a, b), exact.
int sturm_count_open(const PolyZ& p, const Rat& a, const Rat& b);
// Number of distinct real roots on the whole line / in (0, inf), exact.
int sturm_count_all(const PolyZ& p);
int sturm_count_positive(const PolyZ& p);

// True iff p (a char poly of a unimodular matrix) has a non-real root on the
// unit circle. Decided exactly: p has a root pair on the circle iff
// N(y) = A^2 + ABy + B^2 has a real root in (-2, 2), where
// p = A(y) x + B(y) mod (x^2 - yx + 1).
bool has_unit_circle_complex_root(const PolyZ& p);

// Evaluate p at a matrix argument (Horner), exact.
MatZ eval_at_matrix(const PolyZ& p, const MatZ& m);

// One isolated root cluster of a square-free polynomial: |value - true root|
// <= radius; certification via Weierstrass inclusion disks.
struct CertifiedRoot {
    std::complex<double> value;
    double radius;
    bool is_real;  // exact (Sturm-backed) classification
};

// All roots of a square-free integer polynomial with certified radii.
// Throws precision_error if certification fails to separate the disks.
std::vector<CertifiedRoot> isolate_roots(const PolyZ& square_free);

}  // namespace ggt
