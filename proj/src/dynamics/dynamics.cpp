#include "ggt/dynamics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace ggt {

namespace {

Eigen::MatrixXd to_eigen(const MatD& m) {
    Eigen::MatrixXd e(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) e(i, j) = m.at(i, j);
    return e;
}

MatD from_eigen(const Eigen::MatrixXd& e) {
    MatD m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = e(i, j);
    return m;
}

}  // namespace

MatD MatD::from(const MatZ& m) {
    MatD r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = to_double(m.at(i, j));
    return r;
}

MatD MatD::identity(int n) {
    MatD r(n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = 1.0;
    return r;
}

MatD MatD::operator*(const MatD& o) const {
    return from_eigen(to_eigen(*this) * to_eigen(o));
}

std::vector<double> MatD::apply(const std::vector<double>& v) const {
    std::vector<double> r(rows, 0.0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
    return r;
}

MatD MatD::inverse() const {
    Eigen::MatrixXd e = to_eigen(*this);
    return from_eigen(e.inverse());
}

double MatD::operator_norm() const {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(*this));
    return svd.singularValues()(0);
}

IntAutomorphism::IntAutomorphism(MatZ m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() == 0)
        throw validation_error("automorphism matrix must be square and nonempty");
    det_ = mat_.det();
    if (det_ != 1 && det_ != -1)
        throw validation_error("matrix is not in GL_n(Z): determinant is " + det_.get_str());
    inv_ = mat_.unimodular_inverse();
    charpoly_ = char_poly(mat_);
}

MatZ IntAutomorphism::power(long k) const {
    if (k >= 0) return mat_.pow(static_cast<unsigned>(k));
    return inv_.pow(static_cast<unsigned>(-k));
}

VecZ IntAutomorphism::iterate(const VecZ& v, long k) const {
    VecZ r = v;
    const MatZ& step = k >= 0 ? mat_ : inv_;
    for (long i = 0; i < std::abs(k); ++i) r = step.apply(r);
    return r;
}

bool IntAutomorphism::has_eigenvalue_one() const {
    MatZ s = mat_ - MatZ::identity(dim());
    return s.det() == 0;
}

bool IntAutomorphism::has_eigenvalue_minus_one() const {
    MatZ s = mat_ + MatZ::identity(dim());
    return s.det() == 0;
}

bool IntAutomorphism::is_hyperbolic() const {
    if (has_eigenvalue_one() || has_eigenvalue_minus_one()) return false;
    return !has_unit_circle_complex_root(charpoly_);
}

bool IntAutomorphism::all_eigenvalues_real() const {
    PolyZ s = square_free_part(charpoly_);
    return sturm_count_all(s) == s.degree();
}

bool IntAutomorphism::all_eigenvalues_positive_real() const {
    PolyZ s = square_free_part(charpoly_);
    return sturm_count_positive(s) == s.degree();
}

bool IntAutomorphism::is_diagonalizable_over_r() const {
    if (!all_eigenvalues_real()) return false;
    PolyZ s = square_free_part(charpoly_);
    MatZ z = eval_at_matrix(s, mat_);
    MatZ zero(dim(), dim());
    return z == zero;
}

bool IntAutomorphism::is_positive_diagonal_action() const {
    return is_hyperbolic() && all_eigenvalues_positive_real() && is_diagonalizable_over_r();
}

Spectrum spectrum(const IntAutomorphism& m) {
    Spectrum out;
    const PolyZ& p = m.characteristic();
    for (const auto& [factor, mult] : square_free_decomposition(p)) {
        bool factor_has_circle = has_unit_circle_complex_root(factor);
        for (const CertifiedRoot& r : isolate_roots(factor)) {
            bool on_circle = false;
            if (r.is_real) {
                // Real roots of a unimodular char poly on the circle are +-1.
                on_circle = (factor.eval(Int(1)) == 0 && std::abs(r.value.real() - 1.0) <= r.radius) ||
                            (factor.eval(Int(-1)) == 0 && std::abs(r.value.real() + 1.0) <= r.radius);
            } else if (factor_has_circle) {
                on_circle = std::abs(std::abs(r.value) - 1.0) <= r.radius;
            }
            out.roots.push_back({r.value, r.radius, mult, r.is_real, on_circle});
        }
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    out.spectral_radius = 0.0;
    out.radius_error = 0.0;
    for (const auto& r : out.roots) {
        double mag = std::abs(r.value);
        if (mag > out.spectral_radius) {
            out.spectral_radius = mag;
            out.radius_error = r.radius;
        }
    }
    return out;
}

namespace {

// Numeric real basis of the root space of (M - lambda)^mult, lambda possibly
// complex; complex pairs contribute real+imaginary parts.
std::vector<std::vector<double>> numeric_root_space(const MatD& m, std::complex<double> lambda,
                                                    int mult, bool is_real) {
    const int n = m.rows;
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = std::complex<double>(m.at(i, j), 0.0);
    Eigen::MatrixXcd shifted = a;
    for (int i = 0; i < n; ++i) shifted(i, i) -= lambda;
    Eigen::MatrixXcd powed = Eigen::MatrixXcd::Identity(n, n);
    for (int k = 0; k < mult; ++k) powed = powed * shifted;

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(powed, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double tol = 1e-9 * std::max(1.0, sv.size() ? sv(0) : 1.0);
    std::vector<std::vector<double>> basis;
    for (int j = static_cast<int>(sv.size()) - 1; j >= 0; --j) {
        if (sv(j) > tol) break;
        Eigen::VectorXcd v = svd.matrixV().col(j);
        if (is_real) {
            std::vector<double> re(n);
            for (int i = 0; i < n; ++i) re[i] = v(i).real();
            basis.push_back(std::move(re));
        } else {
            std::vector<double> re(n), im(n);
            for (int i = 0; i < n; ++i) {
                re[i] = v(i).real();
                im[i] = v(i).imag();
            }
            basis.push_back(std::move(re));
            basis.push_back(std::move(im));
        }
    }
    return basis;
}

// Gram-Schmidt prune to the expected dimension (complex pairs can produce
// dependent real/imag parts).
std::vector<std::vector<double>> prune_independent(std::vector<std::vector<double>> vecs,
                                                   int want) {
    std::vector<std::vector<double>> kept;
    for (auto& v : vecs) {
        std::vector<double> w = v;
        for (const auto& k : kept) {
            double dot = 0, nk = 0;
            for (size_t i = 0; i < w.size(); ++i) {
                dot += w[i] * k[i];
                nk += k[i] * k[i];
            }
            for (size_t i = 0; i < w.size(); ++i) w[i] -= dot / nk * k[i];
        }
        double norm = 0;
        for (double x : w) norm += x * x;
        if (std::sqrt(norm) > 1e-8) {
            double inv = 1.0 / std::sqrt(norm);
            for (double& x : w) x *= inv;
            kept.push_back(std::move(w));
        }
        if (static_cast<int>(kept.size()) == want) break;
    }
    return kept;
}

std::vector<std::vector<double>> to_numeric(const std::vector<VecQ>& exact) {
    std::vector<std::vector<double>> out;
    for (const auto& v : exact) {
        std::vector<double> w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = to_double(v[i]);
        out.push_back(std::move(w));
    }
    return out;
}

// Rational basis of ker(f(M)^mult) as row vectors.
std::vector<VecQ> rational_kernel_power(const IntAutomorphism& m, const PolyZ& f, int mult) {
    MatZ fm = eval_at_matrix(f, m.mat());
    MatZ powed = MatZ::identity(m.dim());
    for (int i = 0; i < mult; ++i) powed = powed * fm;
    MatQ q = MatQ::from(powed);
    return q.kernel();
}

}  // namespace

SpectralSplitting spectral_splitting(const IntAutomorphism& m) {
    SpectralSplitting out;
    out.minus.rational = out.plus.rational = out.zero.rational = true;
    MatD md = MatD::from(m.mat());

    struct NumericChunk {
        std::complex<double> lambda;
        int mult;
        bool is_real;
        int which;  // -1, 0, +1
    };
    std::vector<NumericChunk> numeric_chunks;

    for (const auto& [whole_factor, mult] : square_free_decomposition(m.characteristic())) {
        // Peel the rational roots first (only +-1 can occur for a unimodular
        // char poly); their root spaces are exact regardless of the rest.
        PolyZ factor = whole_factor;
        for (int s : {1, -1}) {
            if (factor.degree() > 0 && factor.eval(Int(s)) == 0) {
                PolyZ lin{std::vector<Int>{Int(-s), Int(1)}};
                factor = factor.divexact(lin);
                for (auto& v : rational_kernel_power(m, lin, mult))
                    out.zero.exact.push_back(std::move(v));
            }
        }
        if (factor.degree() <= 0) continue;

        std::vector<CertifiedRoot> roots = isolate_roots(factor);
        bool circle_complex = has_unit_circle_complex_root(factor);

        // Classify each root: -1 (inside), +1 (outside), 0 (on circle).
        std::vector<int> cls(roots.size());
        for (size_t i = 0; i < roots.size(); ++i) {
            const auto& r = roots[i];
            double mag = std::abs(r.value);
            if (!r.is_real && circle_complex && std::abs(mag - 1.0) <= r.radius)
                cls[i] = 0;
            else if (mag + r.radius < 1.0)
                cls[i] = -1;
            else if (mag - r.radius > 1.0)
                cls[i] = 1;
            else
                throw precision_error("eigenvalue classification against the unit circle failed");
        }
        bool uniform = std::all_of(cls.begin(), cls.end(), [&](int c) { return c == cls[0]; });

        if (uniform) {
            // The remaining factor lives in one class: rational root space.
            std::vector<VecQ> basis = rational_kernel_power(m, factor, mult);
            SplitComponent& target = cls[0] < 0 ? out.minus : (cls[0] > 0 ? out.plus : out.zero);
            for (auto& v : basis) target.exact.push_back(std::move(v));
        } else {
            // Mixed factor (e.g. one root inside, one outside the circle):
            // classwise subspaces are irrational; fall back to numerics.
            for (size_t i = 0; i < roots.size(); ++i) {
                if (!roots[i].is_real && roots[i].value.imag() < 0) continue;  // one per pair
                numeric_chunks.push_back({roots[i].value, mult, roots[i].is_real, cls[i]});
            }
        }
    }

    for (const auto& ch : numeric_chunks) {
        SplitComponent& target = ch.which < 0 ? out.minus : (ch.which > 0 ? out.plus : out.zero);
        target.rational = false;
        int want = ch.is_real ? ch.mult : 2 * ch.mult;
        auto vecs = prune_independent(numeric_root_space(md, ch.lambda, ch.mult, ch.is_real), want);
        for (auto& v : vecs) target.basis.push_back(std::move(v));
    }

    for (SplitComponent* comp : {&out.minus, &out.plus, &out.zero}) {
        if (comp->rational) {
            comp->basis = to_numeric(comp->exact);
        } else {
            comp->exact.clear();
        }
    }
    return out;
}

namespace {

double spectral_radius_numeric(const Eigen::MatrixXd& a) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(a);
    double rho = 0.0;
    for (int i = 0; i < a.rows(); ++i) rho = std::max(rho, std::abs(es.eigenvalues()(i)));
    return rho;
}

// Real-ified eigenbasis: complex pairs contribute (Re v, Im v) columns, so a
// diagonalizable map becomes block diagonal with rotation-scaling blocks of
// operator norm |lambda|.
std::optional<Eigen::MatrixXd> realified_eigenbasis(const Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    Eigen::EigenSolver<Eigen::MatrixXd> es(a);
    Eigen::MatrixXd p(n, n);
    int col = 0;
    for (int i = 0; i < n && col < n; ++i) {
        std::complex<double> lam = es.eigenvalues()(i);
        if (lam.imag() > 0) {
            for (int r = 0; r < n; ++r) {
                p(r, col) = es.eigenvectors()(r, i).real();
                p(r, col + 1) = es.eigenvectors()(r, i).imag();
            }
            col += 2;
        } else if (lam.imag() == 0) {
            for (int r = 0; r < n; ++r) p(r, col) = es.eigenvectors()(r, i).real();
            col += 1;
        }
    }
    if (col != n) return std::nullopt;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(p);
    if (!lu.isInvertible() || lu.rcond() < 1e-10) return std::nullopt;
    return p;
}

std::optional<AdaptedNorm> try_basis(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                     double rho, double delta) {
    Eigen::MatrixXd conj = b * a * b.inverse();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(conj);
    double bound = svd.singularValues()(0);
    if (!(bound < rho + delta)) return std::nullopt;
    AdaptedNorm res;
    res.basis_change = from_eigen(b);
    res.delta = delta;
    res.certified_bound = bound;
    return res;
}

}  // namespace

AdaptedNorm adapted_norm(const MatD& m, double delta) {
    if (delta <= 0) throw validation_error("adapted_norm requires delta > 0");
    const int n = m.rows;
    Eigen::MatrixXd a = to_eigen(m);
    const double rho = spectral_radius_numeric(a);

    // Diagonalizable route: the realified eigenbasis already realizes the
    // spectral radius as the operator norm, up to roundoff.
    if (auto p = realified_eigenbasis(a)) {
        if (auto res = try_basis(a, p->inverse(), rho, delta)) return *res;
    }

    // Defective route: Schur basis with per-block diagonal scaling. The
    // epsilon geometric scaling crushes cross-block coupling; a short golden
    // search balances each 2x2 block.
    Eigen::RealSchur<Eigen::MatrixXd> schur(a);
    Eigen::MatrixXd t = schur.matrixT();
    Eigen::MatrixXd q = schur.matrixU();

    std::vector<double> block_scale(n, 1.0);
    std::vector<int> block_index(n, 0);
    int blocks = 0;
    for (int i = 0; i < n;) {
        if (i + 1 < n && std::abs(t(i + 1, i)) > 1e-14) {
            Eigen::Matrix2d blk = t.block<2, 2>(i, i);
            auto norm_scaled = [&](double s) {
                Eigen::Matrix2d sc;
                sc << blk(0, 0), blk(0, 1) / s, blk(1, 0) * s, blk(1, 1);
                Eigen::JacobiSVD<Eigen::Matrix2d> svd(sc);
                return svd.singularValues()(0);
            };
            double lo = 1e-4, hi = 1e4;
            for (int it = 0; it < 80; ++it) {
                double m1 = lo * std::pow(hi / lo, 1.0 / 3.0);
                double m2 = lo * std::pow(hi / lo, 2.0 / 3.0);
                if (norm_scaled(m1) < norm_scaled(m2))
                    hi = m2;
                else
                    lo = m1;
            }
            block_scale[i] = 1.0;
            block_scale[i + 1] = 1.0 / std::sqrt(lo * hi);
            block_index[i] = block_index[i + 1] = blocks++;
            i += 2;
        } else {
            block_index[i] = blocks++;
            i += 1;
        }
    }

    for (double eps = std::min(0.5, delta); eps > 1e-12; eps *= 0.5) {
        Eigen::VectorXd d(n);
        for (int i = 0; i < n; ++i) d(i) = std::pow(eps, block_index[i]) * block_scale[i];
        Eigen::MatrixXd b = d.cwiseInverse().asDiagonal() * q.transpose();
        if (auto res = try_basis(a, b, rho, delta)) return *res;
    }
    throw precision_error("adapted norm certification failed; request higher precision");
}

AdaptedNorm adapted_norm(const IntAutomorphism& m, double delta) {
    return adapted_norm(MatD::from(m.mat()), delta);
}

OrbitWindow orbit(const VecZ& z, const IntAutomorphism& m, long lo, long hi) {
    if (lo > 0 || hi < 0) throw validation_error("orbit window must contain 0");
    if (static_cast<int>(z.size()) != m.dim()) throw validation_error("orbit vector dim mismatch");
    OrbitWindow w;
    w.base = z;
    w.lo = lo;
    w.hi = hi;
    w.points.resize(static_cast<size_t>(hi - lo + 1));
    w.points[static_cast<size_t>(-lo)] = z;
    VecZ cur = z;
    for (long i = 1; i <= hi; ++i) {
        cur = m.mat().apply(cur);
        w.points[static_cast<size_t>(i - lo)] = cur;
    }
    cur = z;
    for (long i = -1; i >= lo; --i) {
        cur = m.inv().apply(cur);
        w.points[static_cast<size_t>(i - lo)] = cur;
    }
    return w;
}

namespace {

bool is_zero_vec(const VecZ& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

void require_positive_diagonal(const IntAutomorphism& m, const char* where) {
    if (!m.is_positive_diagonal_action())
        throw hypothesis_error(std::string(where) +
                               ": matrix must be hyperbolic, diagonalizable over R, with positive "
                               "eigenvalues");
}

}  // namespace

IntersectionReport orbit_intersection_count(const VecZ& z, const VecZ& w, const VecZ& a,
                                            const IntAutomorphism& m, long window) {
    require_positive_diagonal(m, "orbit_intersection_count");
    if (is_zero_vec(z) || is_zero_vec(w) || is_zero_vec(a))
        throw hypothesis_error("orbit_intersection_count: z, w, a must be nonzero");

    OrbitWindow oz = orbit(z, m, -window, window);
    OrbitWindow ow = orbit(w, m, -window, window);
    std::unordered_map<VecZ, std::vector<long>, VecZHash> index;
    for (long i = -window; i <= window; ++i) index[oz.at(i)].push_back(i);

    IntersectionReport rep;
    for (long j = -window; j <= window; ++j) {
        VecZ target = ow.at(j);
        for (size_t k = 0; k < target.size(); ++k) target[k] += a[k];
        auto it = index.find(target);
        if (it == index.end()) continue;
        for (long i : it->second) {
            ++rep.count;
            rep.witnesses.emplace_back(i, j);
        }
    }
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
    return rep;
}

std::optional<std::pair<std::size_t, std::size_t>> separated_pair(
    const std::vector<VecZ>& points, const Rat& d_bound, const IntAutomorphism& m, long window) {
    require_positive_diagonal(m, "separated_pair");
    {
        std::unordered_map<VecZ, int, VecZHash> seen;
        for (const auto& p : points)
            if (++seen[p] > 1)
                throw hypothesis_error("separated_pair: points must be pairwise distinct");
    }

    Rat d2 = d_bound * d_bound;
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = i + 1; j < points.size(); ++j) {
            VecZ u(points[i].size());
            for (size_t k = 0; k < u.size(); ++k) u[k] = points[i][k] - points[j][k];
            bool ok = Rat(norm2(u)) > d2;
            if (ok) {
                VecZ fwd = u, bwd = u;
                for (long k = 1; k <= window && ok; ++k) {
                    fwd = m.mat().apply(fwd);
                    bwd = m.inv().apply(bwd);
                    if (Rat(norm2(fwd)) <= d2 || Rat(norm2(bwd)) <= d2) ok = false;
                }
            }
            if (ok) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

namespace {

// Visits every lattice point of the box [-b, b]^dim.
template <typename F>
void scan_box(int dim, long b, F&& visit) {
    std::vector<long> idx(dim, -b);
    VecZ v(dim, Int(0));
    while (true) {
        for (int i = 0; i < dim; ++i) v[i] = idx[i];
        visit(v);
        int p = dim - 1;
        while (p >= 0 && idx[p] == b) {
            idx[p] = -b;
            --p;
        }
        if (p < 0) break;
        ++idx[p];
    }
}

}  // namespace

long long lattice_ball_count(const Rat& d_bound, int dim) {
    if (d_bound < 0) throw validation_error("lattice_ball_count requires D >= 0");
    Rat d2 = d_bound * d_bound;
    long box = static_cast<long>(std::floor(to_double(d_bound))) + 1;
    long long count = 0;
    scan_box(dim, box, [&](const VecZ& v) {
        if (Rat(norm2(v)) <= d2) ++count;
    });
    return count;
}

long long packing_bound_estimate(const Rat& d_bound, const IntAutomorphism& m) {
    if (d_bound <= 0) throw validation_error("packing bound requires D > 0");
    long long s = lattice_ball_count(d_bound, m.dim());
    return 2 * s * s;
}

WindowCertificate certified_window(const IntAutomorphism& m, const Rat& d_bound, long buffer,
                                   long max_k) {
    require_positive_diagonal(m, "certified_window");
    Rat two_d = d_bound * 2;
    Rat d2 = d_bound * d_bound;
    long box = static_cast<long>(std::floor(to_double(two_d))) + 1;
    const int n = m.dim();

    std::vector<VecZ> shell;
    scan_box(n, box, [&](const VecZ& v) {
        if (!is_zero_vec(v) && Rat(norm2(v)) <= two_d * two_d) shell.push_back(v);
    });

    // Phase 1: per-vector escape index with a growth-streak stop rule.
    long k_cand = 0;
    for (const VecZ& v : shell) {
        for (int dir = 0; dir < 2; ++dir) {
            const MatZ& step = dir == 0 ? m.mat() : m.inv();
            VecZ cur = v;
            long last_low = 0, k = 0, streak = 0;
            Int prev_norm = norm2(cur);
            while (k < max_k) {
                cur = step.apply(cur);
                ++k;
                Int n2 = norm2(cur);
                if (Rat(n2) <= d2) {
                    last_low = k;
                    streak = 0;
                } else if (n2 >= prev_norm) {
                    if (++streak >= buffer) break;
                } else {
                    streak = 0;
                }
                prev_norm = n2;
            }
            if (k >= max_k) throw precision_error("certified_window: escape not reached within max_k");
            k_cand = std::max(k_cand, last_low);
        }
    }

    // Phase 2: verify that every shell vector stays above D across
    // (k_cand, k_cand + buffer] in both directions; bump and repeat if not.
    bool stable = false;
    while (!stable) {
        stable = true;
        for (const VecZ& v : shell) {
            for (int dir = 0; dir < 2 && stable; ++dir) {
                const MatZ& step = dir == 0 ? m.mat() : m.inv();
                VecZ cur = v;
                for (long k = 1; k <= k_cand + buffer; ++k) {
                    cur = step.apply(cur);
                    if (k > k_cand && Rat(norm2(cur)) <= d2) {
                        k_cand = k;
                        stable = false;
                        break;
                    }
                }
            }
            if (!stable) break;
        }
        if (k_cand > max_k) throw precision_error("certified_window: window exceeded max_k");
    }
    return {k_cand, buffer};
}

std::vector<VecZ> invariant_lattice(const IntAutomorphism& m) {
    if (!m.all_eigenvalues_positive_real())
        throw hypothesis_error("invariant_lattice: all eigenvalues must be real and positive");
    PolyZ p = m.characteristic();
    PolyZ x_minus_one{std::vector<Int>{Int(-1), Int(1)}};
    PolyZ q = p;
    while (q.degree() > 0 && q.eval(Int(1)) == 0) q = q.divexact(x_minus_one);
    MatZ qm = eval_at_matrix(q, m.mat());
    return integer_kernel(qm);
}

}  // namespace ggt
