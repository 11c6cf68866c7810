#include "ggt/exact/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ggt {

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
            s.find('E') != std::string::npos)
            return rat_from_decimal(s);
        Rat q(s, 10);
        q.canonicalize();
        return q;
    }
    Rat q(s.substr(0, slash) + "/" + s.substr(slash + 1), 10);
    q.canonicalize();
    return q;
}

Rat rat_from_decimal(const std::string& s) {
    std::string t = s;
    int exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stoi(t.substr(epos + 1));
        t = t.substr(0, epos);
    }
    std::string digits;
    int frac = 0;
    bool seen_dot = false;
    for (char c : t) {
        if (c == '.') {
            seen_dot = true;
            continue;
        }
        digits.push_back(c);
        if (seen_dot) ++frac;
    }
    if (digits.empty() || digits == "-" || digits == "+") throw validation_error("bad decimal: " + s);
    Rat q{Int(digits, 10)};
    int shift = frac - exp10;
    Int p10 = 1;
    for (int i = 0; i < std::abs(shift); ++i) p10 *= 10;
    if (shift > 0)
        q /= Rat(p10);
    else
        q *= Rat(p10);
    q.canonicalize();
    return q;
}

Rat rat_from_double(double x) {
    Rat q(x);
    q.canonicalize();
    return q;
}

MatZ MatZ::identity(int n) {
    MatZ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatZ MatZ::from_rows(const std::vector<VecZ>& rows) {
    if (rows.empty()) return {};
    MatZ m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw validation_error("ragged matrix rows");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

MatZ MatZ::operator*(const MatZ& o) const {
    if (cols_ != o.rows_) throw validation_error("matrix dims mismatch in mul");
    MatZ r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

MatZ MatZ::operator+(const MatZ& o) const {
    MatZ r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

MatZ MatZ::operator-(const MatZ& o) const {
    MatZ r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

VecZ MatZ::apply(const VecZ& v) const {
    if (static_cast<int>(v.size()) != cols_) throw validation_error("matvec dims mismatch");
    VecZ r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Int s = 0;
        for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

MatZ MatZ::transposed() const {
    MatZ r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Int MatZ::det() const {
    if (rows_ != cols_) throw validation_error("det of non-square matrix");
    const int n = rows_;
    if (n == 0) return 1;
    MatZ w = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

MatZ MatZ::unimodular_inverse() const {
    Int d = det();
    if (d != 1 && d != -1) throw validation_error("matrix is not unimodular");
    const int n = rows_;
    // Adjugate via rational elimination would also work; for the small n we
    // see here, cofactor expansion through minors is fine and exact.
    MatZ inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MatZ minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc) = at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = minor.det();
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(i, j) = d == 1 ? cof : Int(-cof);
        }
    return inv;
}

MatZ MatZ::pow(unsigned k) const {
    MatZ r = identity(rows_);
    MatZ b = *this;
    while (k) {
        if (k & 1u) r = r * b;
        b = b * b;
        k >>= 1u;
    }
    return r;
}

std::string MatZ::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ";";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << at(i, j);
        }
    }
    return os.str();
}

MatZ parse_matrix(const std::string& text) {
    std::vector<VecZ> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        VecZ r;
        std::stringstream rs(row);
        std::string entry;
        while (std::getline(rs, entry, ',')) {
            std::string trimmed;
            for (char c : entry)
                if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
            if (trimmed.empty()) throw validation_error("empty matrix entry in: " + text);
            r.emplace_back(trimmed, 10);
        }
        if (!r.empty()) rows.push_back(std::move(r));
    }
    if (rows.empty()) throw validation_error("empty matrix literal");
    size_t w = rows[0].size();
    for (auto& r : rows)
        if (r.size() != w) throw validation_error("ragged matrix literal: " + text);
    return MatZ::from_rows(rows);
}

MatQ MatQ::from(const MatZ& m) {
    MatQ r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

MatQ MatQ::identity(int n) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (cols_ != o.rows_) throw validation_error("matrix dims mismatch in mul");
    MatQ r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

VecQ MatQ::apply(const VecQ& v) const {
    if (static_cast<int>(v.size()) != cols_) throw validation_error("matvec dims mismatch");
    VecQ r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rat s = 0;
        for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

std::vector<int> MatQ::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int i = row; i < rows_; ++i)
            if (at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        Rat inv = Rat(1) / at(row, col);
        for (int j = col; j < cols_; ++j) at(row, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || at(i, col) == 0) continue;
            Rat f = at(i, col);
            for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int MatQ::rank() const {
    MatQ w = *this;
    return static_cast<int>(w.rref().size());
}

std::vector<VecQ> MatQ::kernel() const {
    MatQ w = *this;
    std::vector<int> pivots = w.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<VecQ> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        VecQ v(cols_, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<VecQ> MatQ::solve(const VecQ& b) const {
    if (static_cast<int>(b.size()) != rows_) throw validation_error("solve dims mismatch");
    MatQ aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    for (int c : pivots)
        if (c == cols_) return std::nullopt;  // pivot in the constant column
    VecQ x(cols_, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
}

namespace {

// In-place row HNF of the matrix whose rows are `rows` (generators). Result
// rows are the canonical upper-triangular-ish Hermite basis.
std::vector<VecZ> row_hnf(std::vector<VecZ> rows) {
    if (rows.empty()) return rows;
    const int n = static_cast<int>(rows[0].size());
    int r = 0;
    for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
        // Euclid on the column below row r.
        while (true) {
            int p = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0 && (p < 0 || int_abs(rows[i][col]) < int_abs(rows[p][col])))
                    p = i;
            if (p < 0) break;
            std::swap(rows[r], rows[p]);
            bool reduced = true;
            for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[r][col];  // truncated division is fine here
                if (q != 0)
                    for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (rows[r][col] != 0) {
            if (rows[r][col] < 0)
                for (int j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
            // Reduce the rows above to make the HNF canonical.
            for (int i = 0; i < r; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
                if (q != 0)
                    for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
            }
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

}  // namespace

std::vector<VecZ> lattice_hnf_basis(const std::vector<VecZ>& generators) {
    return row_hnf(generators);
}

bool lattice_contains(const std::vector<VecZ>& hnf_basis, const VecZ& v) {
    VecZ w = v;
    const int n = static_cast<int>(w.size());
    size_t row = 0;
    for (int col = 0; col < n; ++col) {
        if (row < hnf_basis.size() && hnf_basis[row][col] != 0) {
            Int q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[col].get_mpz_t(),
                        hnf_basis[row][col].get_mpz_t());
            if (rem != 0) return false;
            for (int j = col; j < n; ++j) w[j] -= q * hnf_basis[row][j];
            ++row;
        } else if (w[col] != 0) {
            return false;
        }
    }
    return true;
}

SmithResult smith_normal_form(const MatZ& a) {
    const int m = a.rows(), n = a.cols();
    MatZ d = a;
    MatZ u = MatZ::identity(m), v = MatZ::identity(n);

    auto swap_rows = [&](int i, int j) {
        for (int c = 0; c < n; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < m; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    auto addmul_row = [&](int dst, int src, const Int& f) {
        for (int c = 0; c < n; ++c) d.at(dst, c) += f * d.at(src, c);
        for (int c = 0; c < m; ++c) u.at(dst, c) += f * u.at(src, c);
    };
    auto addmul_col = [&](int dst, int src, const Int& f) {
        for (int r = 0; r < m; ++r) d.at(r, dst) += f * d.at(r, src);
        for (int r = 0; r < n; ++r) v.at(r, dst) += f * v.at(r, src);
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < n; ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < m; ++c) u.at(i, c) = -u.at(i, c);
    };

    const int k = std::min(m, n);
    for (int t = 0; t < k; ++t) {
        while (true) {
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (d.at(i, j) != 0 &&
                        (pi < 0 || int_abs(d.at(i, j)) < int_abs(d.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                addmul_row(i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                addmul_col(j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility fix-up: fold any non-multiple into column t.
            bool fixed = true;
            for (int i = t + 1; i < m && fixed; ++i)
                for (int j = t + 1; j < n && fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        addmul_row(t, i, Int(1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d.at(t, t) < 0) negate_row(t);
    }

    SmithResult res;
    res.diag.resize(k);
    for (int t = 0; t < k; ++t) res.diag[t] = d.at(t, t);
    res.left = std::move(u);
    res.right = std::move(v);
    return res;
}

std::vector<VecZ> integer_kernel(const MatZ& a) {
    // A * v = 0 with v integral. With U A V = D diagonal, kernel is spanned by
    // the columns of V matching zero diagonal entries (and columns past rank).
    SmithResult s = smith_normal_form(a);
    const int n = a.cols();
    std::vector<VecZ> gens;
    for (int j = 0; j < n; ++j) {
        bool zero_diag = j >= static_cast<int>(s.diag.size()) || s.diag[j] == 0;
        if (!zero_diag) continue;
        VecZ col(n);
        for (int i = 0; i < n; ++i) col[i] = s.right.at(i, j);
        gens.push_back(std::move(col));
    }
    return lattice_hnf_basis(gens);
}

}  // namespace ggt
