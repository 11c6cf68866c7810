#pragma once

#include <optional>
#include <vector>

#include "ggt/base.hpp"

namespace ggt {

// Dense integer matrix. Row-major, arbitrary precision entries.
class MatZ {
  public:
    MatZ() = default;
    MatZ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static MatZ identity(int n);
    static MatZ from_rows(const std::vector<VecZ>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const MatZ& o) const = default;

    MatZ operator*(const MatZ& o) const;
    MatZ operator+(const MatZ& o) const;
    MatZ operator-(const MatZ& o) const;
    VecZ apply(const VecZ& v) const;
    MatZ transposed() const;

    // Fraction-free Bareiss determinant; exact for any size.
    Int det() const;

    // Exact inverse for |det| = 1 matrices (adjugate route). Throws
    // validation_error otherwise.
    MatZ unimodular_inverse() const;

    // Nonnegative k only; pair with unimodular_inverse for negative powers.
    MatZ pow(unsigned k) const;

    std::string to_string() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Parses the CLI matrix format: rows split by ';', entries by ',',
// e.g. "2,1;1,1". Whitespace-tolerant.
MatZ parse_matrix(const std::string& text);

// Dense rational matrix with the handful of exact kernels everything
// downstream needs: RREF, rank, kernel, solve.
class MatQ {
  public:
    MatQ() = default;
    MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static MatQ from(const MatZ& m);
    static MatQ identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    MatQ operator*(const MatQ& o) const;
    VecQ apply(const VecQ& v) const;

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<int> rref();

    int rank() const;

    // Basis of the right kernel (column vectors returned as rows of the result).
    std::vector<VecQ> kernel() const;

    // Solves A x = b; nullopt when inconsistent. Underdetermined systems get
    // the pivot solution (free variables zero).
    std::optional<VecQ> solve(const VecQ& b) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Column-style Hermite normal form of the lattice spanned by the given
// generators (rows). Returns a basis (as rows) of the lattice; the basis is
// in row HNF, so equal lattices produce identical bases.
std::vector<VecZ> lattice_hnf_basis(const std::vector<VecZ>& generators);

// Exact membership of v in the lattice spanned by basis rows.
bool lattice_contains(const std::vector<VecZ>& hnf_basis, const VecZ& v);

// Smith normal form: returns diagonal entries d_1 | d_2 | ... and optionally
// the unimodular transforms U*A*V = D.
struct SmithResult {
    std::vector<Int> diag;   // length min(m, n), trailing zeros allowed
    MatZ left, right;        // U (m x m), V (n x n), both unimodular
};
SmithResult smith_normal_form(const MatZ& a);

// Integer kernel of A (a saturated sublattice of Z^cols); basis rows in HNF.
std::vector<VecZ> integer_kernel(const MatZ& a);

}  // namespace ggt
