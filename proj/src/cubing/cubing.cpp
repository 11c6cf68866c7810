#include "ggt/cubing/cubing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "ggt/packing/clique.hpp"

namespace ggt {

bool Bitset::subset_of(const Bitset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~o.words_[w]) return false;
    return true;
}

bool Bitset::intersects(const Bitset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & o.words_[w]) return true;
    return false;
}

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

Bitset Bitset::complement_within(const Bitset& universe) const {
    Bitset r = universe;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~words_[w];
    return r;
}

std::uint64_t Bitset::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

// Cayley-graph adjacency restricted to the ball: neighbors[id][gi] or -1.
std::vector<std::vector<long>> ball_adjacency(const DistanceBall& ball) {
    const auto& gens = ball.generators();
    std::vector<std::vector<long>> adj(ball.size(), std::vector<long>(gens.size(), -1));
    for (std::size_t id = 0; id < ball.size(); ++id)
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            Elem w = mul(ball.group(), ball.element(id), gens[gi].g);
            if (auto t = ball.find(w)) adj[id][gi] = static_cast<long>(*t);
        }
    return adj;
}

// Membership of a ball element in the subgroup, per coset scheme.
bool subgroup_member(const DistanceBall& ball, const Subgroup& h, std::size_t id,
                     const std::unordered_set<std::string>* h_keys) {
    const Elem& e = ball.element(id);
    if (h.trivial) return is_identity(e);
    switch (h.scheme) {
        case CosetScheme::PolyT: {
            const auto& p = std::get<PolyElem>(e);
            bool z_zero = std::all_of(p.z.begin(), p.z.end(), [](long x) { return x == 0; });
            return z_zero && p.k % h.t_modulus == 0;
        }
        case CosetScheme::PolyFullLattice: {
            const auto& p = std::get<PolyElem>(e);
            return p.k == 0;
        }
        case CosetScheme::Lattice: {
            const auto& z = std::get<ZnElem>(e);
            auto res = lattice_residue(h.lattice, z.v);
            return std::all_of(res.begin(), res.end(), [](long x) { return x == 0; });
        }
        case CosetScheme::Generic:
            return h_keys && h_keys->count(elem_key(e)) > 0;
    }
    return false;
}

}  // namespace

AlmostInvariantSet almost_invariant_set(const DistanceBall& ball, const Subgroup& h, int nu) {
    if (nu < 0) throw validation_error("almost_invariant_set requires nu >= 0");
    const std::size_t n = ball.size();
    auto adj = ball_adjacency(ball);

    // Subgroup membership (Generic scheme: via an H-ball key set).
    std::unordered_set<std::string> h_keys;
    if (h.scheme == CosetScheme::Generic && !h.trivial) {
        BallOptions opt;
        opt.element_cap = 500000;
        DistanceBall hball = word_metric_ball(ball.group(), h.gens, 2 * ball.radius(), opt);
        for (std::size_t i = 0; i < hball.size(); ++i) h_keys.insert(elem_key(hball.element(i)));
    }

    // Multi-source BFS distance to the H-vertices.
    AlmostInvariantSet out;
    out.nu = nu;
    out.h_distance.assign(n, -1);
    std::queue<std::size_t> q;
    for (std::size_t id = 0; id < n; ++id)
        if (subgroup_member(ball, h, id, &h_keys)) {
            out.h_distance[id] = 0;
            q.push(id);
        }
    if (q.empty()) throw hypothesis_error("almost_invariant_set: subgroup misses the ball");
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        for (long t : adj[v]) {
            if (t < 0 || out.h_distance[t] >= 0) continue;
            out.h_distance[t] = out.h_distance[v] + 1;
            q.push(static_cast<std::size_t>(t));
        }
    }

    // Components of { dist > nu }, in BFS-least order.
    std::vector<int> comp(n, -1);
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0 || out.h_distance[s] <= nu) continue;
        int c = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<std::size_t> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comps[c].push_back(v);
            for (long t : adj[v]) {
                if (t < 0 || comp[t] >= 0) continue;
                if (out.h_distance[t] <= nu) continue;
                comp[t] = c;
                stack.push_back(static_cast<std::size_t>(t));
            }
        }
        std::sort(comps[c].begin(), comps[c].end());
    }

    for (auto& verts : comps) {
        int deep = 0;
        for (auto v : verts) deep = std::max(deep, out.h_distance[v]);
        if (deep > nu + 2) out.deep.push_back({verts, deep});
    }
    if (out.deep.size() < 2)
        throw hypothesis_error("no codimension-1 evidence at this truncation: fewer than two deep "
                               "components");

    // A = component of the BFS-least deep vertex (deep = distance > nu + 2).
    std::size_t least = n;
    for (std::size_t id = 0; id < n && least == n; ++id)
        if (out.h_distance[id] > nu + 2) least = id;
    out.base = Bitset(n);
    for (const auto& d : out.deep)
        if (std::binary_search(d.vertex_ids.begin(), d.vertex_ids.end(), least)) {
            for (auto v : d.vertex_ids) out.base.set(v);
            break;
        }
    return out;
}

SigmaSystem::SigmaSystem(const DistanceBall& ball, const AlmostInvariantSet& a,
                         const SigmaOptions& opt)
    : SigmaSystem(ball, std::vector<AlmostInvariantSet>{a}, opt) {}

SigmaSystem::SigmaSystem(const DistanceBall& ball, const std::vector<AlmostInvariantSet>& as,
                         const SigmaOptions& opt)
    : ball_(&ball) {
    build(as, opt);
}

void SigmaSystem::build(const std::vector<AlmostInvariantSet>& as, const SigmaOptions& opt) {
    const DistanceBall& ball = *ball_;
    const std::size_t n = ball.size();
    int nu_max = 0;
    for (const auto& a : as) nu_max = std::max(nu_max, a.nu);
    margin_ = opt.margin >= 0 ? opt.margin : 2 * nu_max + 2;

    // A is only known on the full ball, and x in gA is decided by probing
    // g^-1 x, so the bitset universe (radius R2) and the translate ball
    // (radius R1) must satisfy R1 + R2 <= full radius, R2 >= R1 + margin.
    const int full = ball.achieved_radius();
    translate_radius_ =
        opt.translate_radius >= 0 ? opt.translate_radius : (full - margin_) / 2;
    universe_radius_ = full - translate_radius_;
    if (translate_radius_ < 0 || universe_radius_ < translate_radius_ + margin_)
        throw validation_error("sigma system: ball radius too small for the margin");

    universe_ = Bitset(n);
    margin_universe_ = Bitset(n);
    for (std::size_t id = 0; id < n; ++id) {
        if (ball.distance(id) <= universe_radius_) universe_.set(id);
        if (ball.distance(id) <= universe_radius_ - 1) margin_universe_.set(id);
    }

    std::map<std::vector<std::uint64_t>, std::size_t> dedupe;
    auto key_of = [&](const Bitset& b) {
        std::vector<std::uint64_t> k;
        for (std::size_t id = 0; id < n; ++id)
            if (b.test(id)) k.push_back(id);
        return k;
    };

    auto add_pair = [&](const Bitset& members, std::size_t translate) {
        Bitset co = members.complement_within(universe_);
        if (members.count() == 0 || co.count() == 0) return;  // degenerate on the ball
        auto mk = key_of(members);
        if (dedupe.count(mk)) return;
        auto ck = key_of(co);

        auto restrict_margin = [&](const Bitset& b) {
            Bitset r(n);
            for (std::size_t id = 0; id < n; ++id)
                if (b.test(id) && margin_universe_.test(id)) r.set(id);
            return r;
        };
        HalfSpace hs{translate, false, members, restrict_margin(members)};
        HalfSpace hc{translate, true, co, restrict_margin(co)};
        std::size_t i = half_spaces_.size();
        half_spaces_.push_back(std::move(hs));
        half_spaces_.push_back(std::move(hc));
        pair_.push_back(i + 1);
        pair_.push_back(i);
        dedupe.emplace(std::move(mk), i);
        dedupe.emplace(std::move(ck), i + 1);
    };

    for (const auto& a : as) {
        for (std::size_t g = 0; g < n; ++g) {
            if (ball.distance(g) > translate_radius_) continue;
            Elem ginv = inv(ball.group(), ball.element(g));
            // x in gA iff g^-1 x in A; the probe stays inside the full ball.
            Bitset members(n);
            for (std::size_t x = 0; x < n; ++x) {
                if (!universe_.test(x)) continue;
                Elem probe = mul(ball.group(), ginv, ball.element(x));
                auto t = ball.find(probe);
                if (t && a.base.test(*t)) members.set(x);
            }
            add_pair(members, g);
            if (half_spaces_.size() >= opt.max_half_spaces)
                throw budget_error("sigma system exceeded the half-space cap");
        }
    }
    if (half_spaces_.empty()) throw hypothesis_error("sigma system is empty after truncation");
}

Nesting is_nested(const SigmaSystem& sys, std::size_t i, std::size_t j) {
    auto verdict = [&](bool margin) {
        const Bitset& a = margin ? sys.half_space(i).members_margin : sys.half_space(i).members;
        const Bitset& ac = margin ? sys.half_space(sys.pair_of(i)).members_margin
                                  : sys.half_space(sys.pair_of(i)).members;
        const Bitset& b = margin ? sys.half_space(j).members_margin : sys.half_space(j).members;
        const Bitset& bc = margin ? sys.half_space(sys.pair_of(j)).members_margin
                                  : sys.half_space(sys.pair_of(j)).members;
        return a.subset_of(b) || a.subset_of(bc) || ac.subset_of(b) || ac.subset_of(bc);
    };
    bool full = verdict(false);
    bool shrunk = verdict(true);
    if (full != shrunk) return Nesting::TruncationAmbiguous;
    return full ? Nesting::Nested : Nesting::Crossing;
}

WidthEstimate width_estimate(const SigmaSystem& sys, int cap) {
    // One vertex per complement pair; crossing is invariant under taking
    // complements on either side.
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (i < sys.pair_of(i)) reps.push_back(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a + 1; b < reps.size(); ++b)
            if (is_nested(sys, reps[a], reps[b]) == Nesting::Crossing)
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    Graph g = Graph::from_edges(static_cast<int>(reps.size()), edges);
    CliqueResult clique = max_clique(g, cap);
    WidthEstimate w;
    w.width = std::max(1, static_cast<int>(clique.vertices.size()));
    w.exact = clique.exact;
    for (int v : clique.vertices) w.witness.push_back(reps[static_cast<std::size_t>(v)]);
    return w;
}

std::vector<CubeVertex> basic_vertices(const SigmaSystem& sys) {
    std::vector<std::size_t> pair_reps;
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (i < sys.pair_of(i)) pair_reps.push_back(i);

    std::vector<CubeVertex> out;
    std::map<std::vector<std::size_t>, bool> seen;
    for (std::size_t g = 0; g < sys.ball().size(); ++g) {
        if (!sys.universe().test(g)) continue;
        CubeVertex v;
        v.side.resize(pair_reps.size());
        for (std::size_t p = 0; p < pair_reps.size(); ++p) {
            std::size_t i = pair_reps[p];
            v.side[p] = sys.half_space(i).members.test(g) ? i : sys.pair_of(i);
        }
        if (!seen.emplace(v.side, true).second) continue;
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

// Minimality of v.side[p] within the orientation, with a witness when not.
std::optional<std::size_t> minimality_witness(const SigmaSystem& sys, const CubeVertex& v,
                                              std::size_t p) {
    const Bitset& a = sys.half_space(v.side[p]).members;
    for (std::size_t q = 0; q < v.side.size(); ++q) {
        if (q == p) continue;
        const Bitset& b = sys.half_space(v.side[q]).members;
        if (b.subset_of(a) && !(b == a)) return v.side[q];
    }
    return std::nullopt;
}

}  // namespace

CubeVertex vertex_flip(const SigmaSystem& sys, const CubeVertex& v, std::size_t half_space_id) {
    std::size_t p = v.side.size();
    for (std::size_t q = 0; q < v.side.size(); ++q)
        if (v.side[q] == half_space_id) p = q;
    if (p == v.side.size())
        throw validation_error("vertex_flip: half-space is not chosen by the orientation");
    if (auto w = minimality_witness(sys, v, p))
        throw hypothesis_error("vertex_flip: not minimal; witness half-space " +
                               std::to_string(*w) + " is strictly below " +
                               std::to_string(half_space_id));
    CubeVertex r = v;
    r.side[p] = sys.pair_of(half_space_id);
    return r;
}

std::optional<std::size_t> CubeComplex::find_vertex(const CubeVertex& v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v) return i;
    return std::nullopt;
}

CubeComplex build_cubing(const SigmaSystem& sys, const CubeComplexOptions& opt) {
    CubeComplex cx;
    std::map<std::vector<std::size_t>, int> index;

    std::vector<CubeVertex> basics = basic_vertices(sys);
    cx.basic_count = basics.size();
    for (auto& b : basics) {
        if (index.count(b.side)) continue;
        index.emplace(b.side, static_cast<int>(cx.vertices.size()));
        cx.vertices.push_back(b);
    }

    // Flip-graph BFS.
    for (std::size_t qi = 0; qi < cx.vertices.size(); ++qi) {
        if (cx.vertices.size() > opt.vertex_cap) {
            cx.vertex_cap_hit = true;
            break;
        }
        CubeVertex v = cx.vertices[qi];
        for (std::size_t p = 0; p < v.side.size(); ++p) {
            if (minimality_witness(sys, v, p)) continue;
            CubeVertex w = v;
            w.side[p] = sys.pair_of(v.side[p]);
            auto [it, fresh] = index.emplace(w.side, static_cast<int>(cx.vertices.size()));
            if (fresh) cx.vertices.push_back(w);
            int a = static_cast<int>(qi), b = it->second;
            if (a < b)
                cx.edges.emplace_back(a, b);
            else if (b < a)
                cx.edges.emplace_back(b, a);
        }
    }
    std::sort(cx.edges.begin(), cx.edges.end());
    cx.edges.erase(std::unique(cx.edges.begin(), cx.edges.end()), cx.edges.end());
    cx.dimension = cx.edges.empty() ? 0 : 1;

    // Cube filling by ascending dimension: cliques of the compatibility
    // relation on the minimal set of each vertex.
    std::map<std::vector<int>, bool> cube_seen;
    cx.cubes_by_dim.assign(std::max(2, opt.dimension_cap + 1), {});
    for (std::size_t vi = 0; vi < cx.vertices.size(); ++vi) {
        const CubeVertex& v = cx.vertices[vi];
        std::vector<std::size_t> minimal;
        for (std::size_t p = 0; p < v.side.size(); ++p)
            if (!minimality_witness(sys, v, p)) minimal.push_back(v.side[p]);

        auto compatible = [&](std::size_t a, std::size_t b) {
            const Bitset& ac = sys.half_space(sys.pair_of(a)).members;
            const Bitset& bc = sys.half_space(sys.pair_of(b)).members;
            const Bitset& am = sys.half_space(a).members;
            const Bitset& bm = sys.half_space(b).members;
            return !(ac.subset_of(bm)) && !(bc.subset_of(am));
        };

        // Grow cliques up to the cap.
        std::vector<std::vector<std::size_t>> cliques;
        for (std::size_t i = 0; i < minimal.size(); ++i) cliques.push_back({minimal[i]});
        for (int dim = 2; dim <= opt.dimension_cap; ++dim) {
            std::vector<std::vector<std::size_t>> next;
            for (const auto& cl : cliques) {
                if (static_cast<int>(cl.size()) != dim - 1) continue;
                for (std::size_t cand : minimal) {
                    if (cand <= cl.back()) continue;
                    bool ok = true;
                    for (std::size_t x : cl)
                        if (!compatible(x, cand)) {
                            ok = false;
                            break;
                        }
                    if (ok) {
                        auto ext = cl;
                        ext.push_back(cand);
                        next.push_back(ext);
                    }
                }
            }
            if (next.empty()) break;
            // Materialize the dim-cubes from these flip sets.
            for (const auto& fl : next) {
                std::vector<int> corners(1ull << fl.size(), -1);
                bool complete = true;
                for (std::size_t mask = 0; mask < corners.size() && complete; ++mask) {
                    CubeVertex w = v;
                    for (std::size_t b = 0; b < fl.size(); ++b)
                        if (mask & (1ull << b)) {
                            for (std::size_t p = 0; p < w.side.size(); ++p)
                                if (w.side[p] == fl[b]) w.side[p] = sys.pair_of(fl[b]);
                        }
                    auto it = index.find(w.side);
                    if (it == index.end()) {
                        complete = false;  // corner lost to the vertex cap
                        break;
                    }
                    corners[mask] = it->second;
                }
                if (!complete) continue;
                std::vector<int> sorted = corners;
                std::sort(sorted.begin(), sorted.end());
                if (!cube_seen.emplace(sorted, true).second) continue;
                Cube cube;
                cube.corner_vertex_ids = corners;
                cube.flip_set = fl;
                cx.cubes_by_dim[dim].push_back(std::move(cube));
                cx.dimension = std::max(cx.dimension, dim);
            }
            cliques = std::move(next);
        }
    }
    return cx;
}

HyperplaneCut hyperplane_components(const SigmaSystem& sys, const CubeComplex& cx,
                                    std::size_t half_space_id) {
    std::size_t p_target = sys.pair_of(half_space_id);
    HyperplaneCut cut;
    // Edge is dual iff its endpoints differ exactly on this pair.
    std::vector<int> parent(cx.vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : cx.edges) {
        const CubeVertex& va = cx.vertices[a];
        const CubeVertex& vb = cx.vertices[b];
        bool dual = false;
        for (std::size_t p = 0; p < va.side.size(); ++p) {
            if (va.side[p] == vb.side[p]) continue;
            if (va.side[p] == half_space_id || va.side[p] == p_target) dual = true;
            break;  // vertices differ in exactly one pair
        }
        if (dual) {
            ++cut.dual_edges;
            continue;
        }
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[rb] = ra;
    }
    if (cut.dual_edges == 0)
        throw hypothesis_error("hyperplane has no dual edges in the truncated complex");
    std::set<int> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    cut.components = static_cast<int>(roots.size());
    const auto& hs = sys.half_space(half_space_id);
    cut.boundary_flagged =
        sys.ball().distance(hs.translate_id) >= sys.translate_radius() - 1;
    return cut;
}

SeparationReport separation_to_nestedness_check(const SigmaSystem& sys,
                                                const AlmostInvariantSet& a, const Subgroup& h,
                                                int nu) {
    (void)h;
    const DistanceBall& ball = sys.ball();
    const std::size_t n = ball.size();
    Bitset n_nu(n);
    for (std::size_t id = 0; id < n; ++id)
        if (a.h_distance[id] >= 0 && a.h_distance[id] <= nu) n_nu.set(id);

    // Base half-space: the identity translate, non-complement.
    std::size_t base_id = sys.size();
    auto ident = ball.find(identity(ball.group()));
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (!sys.half_space(i).complement && ident && sys.half_space(i).translate_id == *ident) {
            base_id = i;
            break;
        }
    if (base_id == sys.size())
        throw validation_error("separation check: base half-space not in the system");

    SeparationReport rep;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const HalfSpace& hs = sys.half_space(i);
        if (hs.complement || i == base_id) continue;
        // g N_nu(H) within the ball.
        Bitset gn(n);
        for (std::size_t id = 0; id < n; ++id) {
            if (!n_nu.test(id)) continue;
            Elem moved = mul(ball.group(), ball.element(hs.translate_id), ball.element(id));
            if (auto t = ball.find(moved)) gn.set(*t);
        }
        if (gn.intersects(n_nu)) continue;  // no assertion when neighborhoods meet
        ++rep.checked;
        Nesting v = is_nested(sys, i, base_id);
        if (v == Nesting::Crossing) ++rep.hard_violations;
        if (v == Nesting::TruncationAmbiguous) ++rep.ambiguous;
    }
    return rep;
}

}  // namespace ggt
