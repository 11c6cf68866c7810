#include "ggt/hull/hull.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace ggt {

ConvStepResult conv_step(const std::vector<ProductPoint>& points, int samples_per_pair,
                         std::size_t max_points) {
    if (samples_per_pair < 2) throw validation_error("conv_step requires samples_per_pair >= 2");
    ConvStepResult res;
    std::unordered_set<std::string> seen;
    auto push = [&](const ProductPoint& p) {
        if (res.budget_exceeded) return;
        std::string k = product_point_key(p);
        if (seen.count(k)) return;
        if (res.points.size() >= max_points) {
            res.budget_exceeded = true;
            return;
        }
        seen.insert(k);
        res.points.push_back(p);
    };

    for (const auto& p : points) push(p);

    // Parameter grid: j/(spp-1) plus the midpoint.
    std::vector<Rat> params;
    for (int j = 0; j < samples_per_pair; ++j) params.push_back(frac(j, samples_per_pair - 1));
    params.push_back(frac(1, 2));
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());

    for (std::size_t i = 0; i < points.size() && !res.budget_exceeded; ++i) {
        for (std::size_t j = i + 1; j < points.size() && !res.budget_exceeded; ++j) {
            GeodesicPath g = product_geodesic(points[i], points[j]);
            for (const Rat& t : params) push(g.at(t));
        }
    }
    return res;
}

namespace {

// Dense exact phase-1 simplex for { w >= 0 : A w = b }, minimizing the sum
// of artificial variables, Bland's rule. Returns a feasible basic solution
// or the separating dual certificate.
struct SimplexResult {
    bool feasible;
    std::vector<Rat> w;    // length = #columns of A
    VecQ dual;             // length = #rows, when infeasible
};

SimplexResult phase1_simplex(const std::vector<VecQ>& cols, const VecQ& b) {
    const int m = static_cast<int>(b.size());
    const int n = static_cast<int>(cols.size());

    // Tableau over columns [w_0..w_{n-1} | a_0..a_{m-1}], rows = constraints.
    // Flip signs so b >= 0 and start with the artificial basis.
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n + m, Rat(0)));
    VecQ rhs = b;
    for (int i = 0; i < m; ++i) {
        int sign = rhs[i] < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j) a[i][j] = sign * cols[j][i];
        a[i][n + i] = 1;
        if (sign < 0) rhs[i] = -rhs[i];
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced costs for minimizing sum of artificials: z_j - c_j where the
    // objective row is the sum of artificial rows.
    auto reduced_cost = [&](int j) {
        Rat s(0);
        for (int i = 0; i < m; ++i)
            if (basis[i] >= n) s += a[i][j];
        Rat cj = j >= n ? Rat(1) : Rat(0);
        return s - cj;  // entering when > 0
    };

    while (true) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j) {
            bool in_basis = std::find(basis.begin(), basis.end(), j) != basis.end();
            if (in_basis) continue;
            if (reduced_cost(j) > 0) {
                enter = j;  // Bland: smallest index
                break;
            }
        }
        if (enter < 0) break;
        int leave = -1;
        Rat best_ratio(0);
        for (int i = 0; i < m; ++i) {
            if (a[i][enter] <= 0) continue;
            Rat ratio = rhs[i] / a[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw precision_error("phase-1 simplex: unbounded (cannot happen)");
        // Pivot.
        Rat piv = a[leave][enter];
        for (int j = 0; j < n + m; ++j) a[leave][j] /= piv;
        rhs[leave] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || a[i][enter] == 0) continue;
            Rat f = a[i][enter];
            for (int j = 0; j < n + m; ++j) a[i][j] -= f * a[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        basis[leave] = enter;
    }

    Rat objective(0);
    for (int i = 0; i < m; ++i)
        if (basis[i] >= n) objective += rhs[i];

    SimplexResult res;
    if (objective == 0) {
        res.feasible = true;
        res.w.assign(n, Rat(0));
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) res.w[basis[i]] = rhs[i];
        return res;
    }
    // Infeasible: dual y with y . b > 0 and y . A_j <= 0. The multipliers are
    // the objective-row entries over the artificial columns, adjusted for the
    // initial sign flips.
    res.feasible = false;
    res.dual.assign(m, Rat(0));
    for (int k = 0; k < m; ++k) {
        Rat s(0);
        for (int i = 0; i < m; ++i)
            if (basis[i] >= n) s += a[i][n + k];
        // Undo the row sign flip.
        res.dual[k] = (b[k] < 0 ? -s : s);
    }
    return res;
}

}  // namespace

ConvexCombination caratheodory_decompose(const VecQ& x, const std::vector<VecQ>& s,
                                         std::size_t enumeration_cap) {
    if (s.empty()) throw validation_error("caratheodory_decompose: empty point set");
    const int n = static_cast<int>(x.size());
    for (const auto& p : s)
        if (static_cast<int>(p.size()) != n) throw validation_error("point dimension mismatch");

    // Exact x in S short-circuit: weight 1 on the first match.
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == x) return {{i}, {Rat(1)}};

    auto solve_subset = [&](const std::vector<std::size_t>& idx)
        -> std::optional<std::vector<Rat>> {
        // Solve sum w_i s_i = x, sum w_i = 1 for the affinely independent
        // subset; reject non-unique or negative solutions.
        const int k = static_cast<int>(idx.size());
        MatQ a(n + 1, k);
        VecQ b(n + 1);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < k; ++c) a.at(r, c) = s[idx[c]][r];
            b[r] = x[r];
        }
        for (int c = 0; c < k; ++c) a.at(n, c) = 1;
        b[n] = 1;
        if (a.rank() < k) return std::nullopt;  // affinely dependent
        auto w = a.solve(b);
        if (!w) return std::nullopt;
        for (const auto& v : *w)
            if (v < 0) return std::nullopt;
        return w;
    };

    if (s.size() <= enumeration_cap) {
        // Lexicographic-first subset enumeration by size.
        for (int k = 1; k <= std::min<int>(n + 1, static_cast<int>(s.size())); ++k) {
            std::vector<std::size_t> idx(k);
            for (int i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                if (auto w = solve_subset(idx)) {
                    ConvexCombination out;
                    for (int i = 0; i < k; ++i) {
                        if ((*w)[i] == 0) continue;
                        out.support.push_back(idx[i]);
                        out.weights.push_back((*w)[i]);
                    }
                    return out;
                }
                // Next k-subset.
                int pos = k - 1;
                while (pos >= 0 && idx[pos] == s.size() - k + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
            }
        }
        // Nothing found: certify via the LP to produce the separator.
    }

    // Exact LP route.
    std::vector<VecQ> cols;
    for (const auto& p : s) {
        VecQ c(n + 1);
        for (int r = 0; r < n; ++r) c[r] = p[r];
        c[n] = 1;
        cols.push_back(std::move(c));
    }
    VecQ b(n + 1);
    for (int r = 0; r < n; ++r) b[r] = x[r];
    b[n] = 1;
    SimplexResult lp = phase1_simplex(cols, b);
    if (!lp.feasible) {
        VecQ c(n);
        for (int r = 0; r < n; ++r) c[r] = lp.dual[r];
        // y.(s,1) <= 0, y.(x,1) > 0: split off the affine part.
        throw not_in_hull_error(std::move(c), lp.dual[n]);
    }
    ConvexCombination out;
    for (std::size_t i = 0; i < lp.w.size(); ++i) {
        if (lp.w[i] == 0) continue;
        out.support.push_back(i);
        out.weights.push_back(lp.w[i]);
    }
    return out;
}

VecQ BrunnWitness::evaluate() const {
    if (root < 0) throw validation_error("empty witness");
    std::vector<VecQ> value(nodes.size());
    // Nodes are stored so children precede parents.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& nd = nodes[i];
        if (nd.leaf) {
            value[i] = nd.point;
        } else {
            const VecQ& l = value[nd.left];
            const VecQ& r = value[nd.right];
            VecQ v(l.size());
            for (std::size_t c = 0; c < l.size(); ++c)
                v[c] = (Rat(1) - nd.t) * l[c] + nd.t * r[c];
            value[i] = std::move(v);
        }
    }
    return value[root];
}

BrunnWitness brunn_witness(const VecQ& x, const std::vector<VecQ>& s) {
    ConvexCombination comb = caratheodory_decompose(x, s);
    BrunnWitness w;
    // Chain peeling: one barycentric coordinate per level, deepest first.
    // y_last = s_last; y_k = (1 - t_k) s_k + t_k y_{k+1},
    // t_k = (sum of weights after k) / (sum of weights from k).
    const int k = static_cast<int>(comb.support.size());
    std::vector<Rat> suffix(k + 1, Rat(0));
    for (int i = k - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + comb.weights[i];

    int prev = -1;
    for (int i = k - 1; i >= 0; --i) {
        BrunnWitness::Node leaf;
        leaf.leaf = true;
        leaf.point = s[comb.support[i]];
        w.nodes.push_back(leaf);
        int leaf_id = static_cast<int>(w.nodes.size()) - 1;
        if (prev < 0) {
            prev = leaf_id;
            continue;
        }
        BrunnWitness::Node inner;
        inner.leaf = false;
        inner.left = leaf_id;
        inner.right = prev;
        inner.t = suffix[i + 1] / suffix[i];
        w.nodes.push_back(inner);
        prev = static_cast<int>(w.nodes.size()) - 1;
    }
    w.root = prev;
    w.depth = std::max(0, k - 1);
    return w;
}

bool HullRegion::contains_tree(const TreePoint& p) const {
    if (p.is_vertex())
        return std::binary_search(vertices.begin(), vertices.end(), p.base().str());
    auto it = edges.find({p.base().str(), p.letter()});
    if (it == edges.end()) return false;
    return p.offset() <= it->second;
}

bool hull_membership(const ProductPoint& p, const HullRegion& region) {
    if (!region.contains_tree(p.tree)) return false;
    // (vec - anchor) must lie in span(V), exactly.
    const std::size_t n = p.vec.size();
    VecQ rhs(n);
    for (std::size_t i = 0; i < n; ++i)
        rhs[i] = p.vec[i] - (i < region.anchor.size() ? region.anchor[i] : Rat(0));
    if (region.v_basis.empty())
        return std::all_of(rhs.begin(), rhs.end(), [](const Rat& r) { return r == 0; });
    MatQ a(static_cast<int>(n), static_cast<int>(region.v_basis.size()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < region.v_basis.size(); ++j)
            a.at(static_cast<int>(i), static_cast<int>(j)) = region.v_basis[j][i];
    return a.solve(rhs).has_value();
}

}  // namespace ggt
