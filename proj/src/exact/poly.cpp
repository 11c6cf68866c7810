#include "ggt/exact/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ggt {

Int PolyZ::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

Rat PolyZ::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + Rat(*it);
    return r;
}

std::complex<double> PolyZ::eval(std::complex<double> x) const {
    std::complex<double> r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + to_double(*it);
    return r;
}

PolyZ PolyZ::derivative() const {
    if (degree() <= 0) return {};
    std::vector<Int> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = Int(i) * c[i];
    return PolyZ(std::move(d));
}

PolyZ PolyZ::operator*(const PolyZ& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(c.size() + o.c.size() - 1);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    }
    return PolyZ(std::move(r));
}

PolyZ PolyZ::operator+(const PolyZ& o) const {
    std::vector<Int> r(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c.size()) r[i] += c[i];
        if (i < o.c.size()) r[i] += o.c[i];
    }
    return PolyZ(std::move(r));
}

PolyZ PolyZ::operator-(const PolyZ& o) const { return *this + o.negated(); }

PolyZ PolyZ::negated() const {
    std::vector<Int> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = -c[i];
    return PolyZ(std::move(r));
}

PolyZ PolyZ::divexact(const PolyZ& d) const {
    if (d.is_zero()) throw validation_error("polynomial division by zero");
    if (is_zero()) return {};
    if (degree() < d.degree()) throw validation_error("inexact polynomial division");
    std::vector<Int> rem = c;
    std::vector<Int> q(degree() - d.degree() + 1);
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Int& top = rem[k + d.degree()];
        if (top % d.leading() != 0) throw validation_error("inexact polynomial division");
        Int f = top / d.leading();
        q[k] = f;
        if (f == 0) continue;
        for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= f * d.c[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw validation_error("inexact polynomial division");
    return PolyZ(std::move(q));
}

Int PolyZ::content() const {
    Int g = 0;
    for (const auto& x : c) {
        Int ax = int_abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
    }
    return g;
}

PolyZ PolyZ::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    std::vector<Int> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) mpz_divexact(r[i].get_mpz_t(), c[i].get_mpz_t(), g.get_mpz_t());
    PolyZ p(std::move(r));
    if (p.leading() < 0) p = p.negated();
    return p;
}

std::string PolyZ::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (int i = degree(); i >= 0; --i) {
        if (c[i] == 0) continue;
        if (os.tellp() > 0) os << (c[i] > 0 ? " + " : " - ");
        else if (c[i] < 0) os << "-";
        Int a = int_abs(c[i]);
        if (a != 1 || i == 0) os << a;
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

namespace {

// Pseudo-remainder: lc(d)^(deg a - deg d + 1) * a mod d, kept integral.
PolyZ pseudo_rem(PolyZ a, const PolyZ& d) {
    const int dd = d.degree();
    while (!a.is_zero() && a.degree() >= dd) {
        int shift = a.degree() - dd;
        Int f = a.leading();
        std::vector<Int> r(a.c.size());
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i] * d.leading();
        for (int j = 0; j <= dd; ++j) r[j + shift] -= f * d.c[j];
        a = PolyZ(std::move(r));
    }
    return a;
}

}  // namespace

PolyZ poly_gcd(const PolyZ& a, const PolyZ& b) {
    PolyZ x = a.primitive_part();
    PolyZ y = b.primitive_part();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        PolyZ r = pseudo_rem(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x.primitive_part();
}

PolyZ square_free_part(const PolyZ& p) {
    if (p.degree() <= 0) return p.primitive_part();
    PolyZ g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive_part();
    return p.primitive_part().divexact(g).primitive_part();
}

std::vector<SquareFreeFactor> square_free_decomposition(const PolyZ& p) {
    // Yun's algorithm. The running c chain must NOT be re-normalized, or the
    // multiplicity bookkeeping breaks; only the emitted factors are primitive.
    std::vector<SquareFreeFactor> out;
    PolyZ f = p.primitive_part();
    if (f.degree() <= 0) return out;
    PolyZ fp = f.derivative();
    PolyZ a = poly_gcd(f, fp);
    PolyZ b = f.divexact(a);
    PolyZ c = fp.divexact(a);
    int mult = 1;
    while (b.degree() > 0) {
        PolyZ d_chain = c - b.derivative();
        PolyZ g = poly_gcd(b, d_chain);
        if (g.degree() > 0) out.push_back({g, mult});
        b = b.divexact(g);
        c = d_chain.is_zero() ? PolyZ{} : d_chain.divexact(g);
        ++mult;
    }
    return out;
}

PolyZ char_poly(const MatZ& a) {
    if (a.rows() != a.cols()) throw validation_error("char_poly of non-square matrix");
    const int n = a.rows();
    // Faddeev-LeVerrier: the interior divisions are exact over Z.
    std::vector<Int> coeff(n + 1);
    coeff[n] = 1;
    MatZ m = MatZ::identity(n);
    Int ck = 1;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            MatZ t = m;
            for (int i = 0; i < n; ++i) t.at(i, i) += ck;
            m = a * t;
        } else {
            m = a;
        }
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += m.at(i, i);
        Int num = -tr;
        mpz_divexact_ui(ck.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
        coeff[n - k] = ck;
    }
    return PolyZ(std::move(coeff));
}

namespace {

using PolyQ = std::vector<Rat>;  // low-to-high, trimmed

PolyQ to_polyq(const PolyZ& p) {
    PolyQ q(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) q[i] = Rat(p.c[i]);
    return q;
}

void trim(PolyQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Rat eval_q(const PolyQ& p, const Rat& x) {
    Rat r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

PolyQ deriv_q(const PolyQ& p) {
    if (p.size() <= 1) return {};
    PolyQ d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * p[i];
    return d;
}

// Rational polynomial remainder; the sign matters for Sturm, so no
// pseudo-division shortcuts here.
PolyQ rem_q(PolyQ a, const PolyQ& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[j + shift] -= f * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

// True Sturm chain of the square-free part of p, over Q.
struct SturmChain {
    std::vector<PolyQ> seq;

    explicit SturmChain(const PolyZ& p) {
        PolyZ f = square_free_part(p);
        if (f.degree() < 0) return;
        seq.push_back(to_polyq(f));
        if (f.degree() == 0) return;
        seq.push_back(deriv_q(seq[0]));
        while (seq.back().size() > 1) {
            PolyQ r = rem_q(seq[seq.size() - 2], seq.back());
            if (r.empty()) break;
            for (auto& x : r) x = -x;
            seq.push_back(std::move(r));
        }
    }

    int variations_at(const Rat& x) const {
        int v = 0, prev = 0;
        for (const auto& p : seq) {
            Rat val = eval_q(p, x);
            int s = mpq_sgn(val.get_mpq_t());
            if (s != 0) {
                if (prev != 0 && s != prev) ++v;
                prev = s;
            }
        }
        return v;
    }

    int variations_at_inf(bool positive) const {
        int v = 0, prev = 0;
        for (const auto& p : seq) {
            if (p.empty()) continue;
            int s = mpq_sgn(p.back().get_mpq_t());
            if (!positive && (p.size() - 1) % 2 == 1) s = -s;
            if (s != 0) {
                if (prev != 0 && s != prev) ++v;
                prev = s;
            }
        }
        return v;
    }
};

// Divides out every factor (qx - p) for the rational root r = p/q, so Sturm
// endpoints are never roots.
PolyZ strip_rational_root(PolyZ f, const Rat& r) {
    std::vector<Int> lin{Int(-r.get_num()), Int(r.get_den())};
    PolyZ factor{std::vector<Int>(lin)};
    while (f.degree() > 0 && f.eval(r) == 0) f = f.divexact(factor);
    return f;
}

}  // namespace

int sturm_count_open(const PolyZ& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw validation_error("sturm_count of zero polynomial");
    if (!(a < b)) return 0;
    PolyZ f = square_free_part(p);
    f = strip_rational_root(f, a);
    f = strip_rational_root(f, b);
    if (f.degree() <= 0) return 0;
    SturmChain ch(f);
    return ch.variations_at(a) - ch.variations_at(b);
}

int sturm_count_all(const PolyZ& p) {
    SturmChain ch(p);
    if (ch.seq.empty() || ch.seq[0].size() <= 1) return 0;
    return ch.variations_at_inf(false) - ch.variations_at_inf(true);
}

int sturm_count_positive(const PolyZ& p) {
    PolyZ f = square_free_part(p);
    f = strip_rational_root(f, Rat(0));
    if (f.degree() <= 0) return 0;
    SturmChain ch(f);
    return ch.variations_at(Rat(0)) - ch.variations_at_inf(true);
}

bool has_unit_circle_complex_root(const PolyZ& p) {
    // Reduce p modulo x^2 - yx + 1, tracking x^k = alpha_k(y) x + beta_k(y).
    // N(y) = A^2 + A B y + B^2 = p(x1) p(x2) with x1 x2 = 1 and x1 + x2 = y;
    // for y in (-2, 2), {x1, x2} is a conjugate pair on the unit circle.
    const int n = p.degree();
    if (n <= 0) return false;
    PolyZ alpha(std::vector<Int>{});       // alpha_0 = 0
    PolyZ beta(std::vector<Int>{Int(1)});  // beta_0 = 1
    PolyZ A, B;
    PolyZ y(std::vector<Int>{Int(0), Int(1)});
    for (int k = 0; k <= n; ++k) {
        if (p.c.size() > static_cast<size_t>(k) && p.c[k] != 0) {
            PolyZ ck(std::vector<Int>{p.c[k]});
            A = A + ck * alpha;
            B = B + ck * beta;
        }
        PolyZ next_alpha = alpha * y + beta;
        PolyZ next_beta = alpha.negated();
        alpha = std::move(next_alpha);
        beta = std::move(next_beta);
    }
    PolyZ N = A * A + A * B * y + B * B;
    if (N.is_zero()) return true;  // identically zero cannot happen for p != 0, guard anyway
    return sturm_count_open(N, Rat(-2), Rat(2)) > 0;
}

MatZ eval_at_matrix(const PolyZ& p, const MatZ& m) {
    const int n = m.rows();
    MatZ r(n, n);
    if (p.is_zero()) return r;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        r = r * m;
        for (int i = 0; i < n; ++i) r.at(i, i) += *it;
    }
    return r;
}

std::vector<CertifiedRoot> isolate_roots(const PolyZ& square_free) {
    const int n = square_free.degree();
    std::vector<CertifiedRoot> roots;
    if (n <= 0) return roots;
    if (n == 1) {
        // Exact rational root -a0/a1.
        double v = -to_double(square_free.c[0]) / to_double(square_free.c[1]);
        roots.push_back({{v, 0.0}, 1e-15 * (1.0 + std::abs(v)), true});
        return roots;
    }

    std::vector<std::complex<double>> z(n);
    const double lc = to_double(square_free.leading());
    double cauchy = 0.0;
    for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, std::abs(to_double(square_free.c[i]) / lc));
    const double r0 = 1.0 + cauchy;
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * M_PI * (i + 0.25) / n + 0.4;
        z[i] = std::polar(r0 * (0.5 + 0.5 * (i + 1.0) / n), th);
    }

    PolyZ dp = square_free.derivative();
    // Aberth-Ehrlich iteration.
    for (int iter = 0; iter < 400; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> p = square_free.eval(z[i]);
            std::complex<double> d = dp.eval(z[i]);
            if (std::abs(p) == 0.0) continue;
            std::complex<double> newton = p / d;
            std::complex<double> sum = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            std::complex<double> step = newton / (1.0 - newton * sum);
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-15 * r0) break;
    }

    // Weierstrass inclusion radii: the union of disks D(z_i, n |W_i|) with
    // W_i = p(z_i) / (lc prod_{j != i} (z_i - z_j)) contains all roots, and a
    // connected component of k disks contains exactly k of them.
    std::vector<double> rad(n);
    for (int i = 0; i < n; ++i) {
        std::complex<double> prod = lc;
        for (int j = 0; j < n; ++j)
            if (j != i) prod *= (z[i] - z[j]);
        double w = std::abs(square_free.eval(z[i])) / std::max(std::abs(prod), 1e-300);
        rad[i] = n * w + 1e-13 * (1.0 + std::abs(z[i]));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(z[i] - z[j]) <= rad[i] + rad[j])
                throw precision_error("root inclusion disks overlap; needs higher precision");

    // Exact real/complex classification, then conjugate pairing.
    int n_real = sturm_count_all(square_free);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::abs(z[a].imag()) < std::abs(z[b].imag());
    });
    std::vector<bool> real_flag(n, false);
    for (int k = 0; k < n_real; ++k) real_flag[order[k]] = true;

    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        if (real_flag[i]) {
            roots.push_back({{z[i].real(), 0.0}, rad[i] + std::abs(z[i].imag()), true});
            used[i] = true;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        int mate = -1;
        double best = 1e300;
        for (int j = 0; j < n; ++j) {
            if (j == i || used[j]) continue;
            double d = std::abs(z[j] - std::conj(z[i]));
            if (d < best) {
                best = d;
                mate = j;
            }
        }
        if (mate < 0) throw precision_error("unpaired complex root approximation");
        std::complex<double> avg = 0.5 * (z[i] + std::conj(z[mate]));
        double r = std::max(rad[i], rad[mate]) + best;
        roots.push_back({avg, r, false});
        roots.push_back({std::conj(avg), r, false});
        used[i] = used[mate] = true;
    }
    std::sort(roots.begin(), roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return roots;
}

}  // namespace ggt
