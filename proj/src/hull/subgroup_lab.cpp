#include "ggt/hull/subgroup_lab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ggt {

OrbitSample::OrbitSample(const ProdGroup& g, const std::vector<Generator>& h_gens, int radius,
                         std::size_t cap)
    : group_(g),
      radius_(radius),
      hball_([&] {
          BallOptions opt;
          opt.element_cap = cap;
          return word_metric_ball(Group{g}, h_gens, radius, opt);
      }()) {
    // Orbit points within space distance R of the basepoint, discovered
    // within H-word radius R: the orbit is a subset of Tree x R^n, so the
    // truncation lives in the space metric, not the subgroup word metric.
    const long r2 = static_cast<long>(radius) * radius;
    words_.reserve(hball_.size());
    for (std::size_t i = 0; i < hball_.size(); ++i) {
        const auto& e = std::get<ProdElem>(hball_.element(i));
        long d2 = static_cast<long>(e.w.length()) * static_cast<long>(e.w.length());
        for (long x : e.v) d2 += x * x;
        if (d2 > r2) continue;
        words_.push_back(e.w);
        zs_.push_back(e.v);
        std::vector<double> zd(e.v.size());
        for (std::size_t c = 0; c < e.v.size(); ++c) zd[c] = static_cast<double>(e.v[c]);
        zd_.push_back(std::move(zd));
        lens_.push_back(static_cast<int>(e.w.length()));
    }
}

ProductPoint OrbitSample::point(std::size_t i) const {
    ProductPoint p;
    p.tree = TreePoint::vertex(words_[i]);
    p.vec.resize(zs_[i].size());
    for (std::size_t c = 0; c < zs_[i].size(); ++c) p.vec[c] = Rat(zs_[i][c]);
    return p;
}

double OrbitSample::nearest_distance(const ProductPoint& q) const {
    // Anchors of the query tree point (vertex: one; edge point: both ends).
    struct Anchor {
        std::vector<int> letters;
        double off;
    };
    std::vector<Anchor> anchors;
    {
        const FreeWord& base = q.tree.base();
        anchors.push_back({base.letters(), to_double(q.tree.offset())});
        if (!q.tree.is_vertex()) {
            FreeWord other = base * FreeWord::from_letters({q.tree.letter()});
            anchors.push_back({other.letters(), 1.0 - to_double(q.tree.offset())});
        }
        if (anchors.size() == 2 && anchors[0].off == 0.0) anchors.pop_back();
    }
    std::vector<double> qv(q.vec.size());
    for (std::size_t c = 0; c < q.vec.size(); ++c) qv[c] = to_double(q.vec[c]);
    double qdepth = static_cast<double>(anchors[0].letters.size()) + anchors[0].off;

    double best2 = 1e300;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        // Euclidean part first (cheap rejection).
        double e2 = 0;
        for (std::size_t c = 0; c < qv.size(); ++c) {
            double d = qv[c] - zd_[i][c];
            e2 += d * d;
        }
        if (e2 >= best2) continue;
        // Depth-difference lower bound for the tree distance.
        double lb = std::abs(static_cast<double>(lens_[i]) - qdepth);
        if (e2 + lb * lb >= best2) continue;
        // Exact tree distance via anchors.
        const auto& wl = words_[i].letters();
        double dt = 1e300;
        for (const Anchor& a : anchors) {
            std::size_t c = 0;
            std::size_t lim = std::min(a.letters.size(), wl.size());
            while (c < lim && a.letters[c] == wl[c]) ++c;
            double d = a.off + static_cast<double>(a.letters.size() - c) +
                       static_cast<double>(wl.size() - c);
            dt = std::min(dt, d);
        }
        double tot = e2 + dt * dt;
        if (tot < best2) best2 = tot;
    }
    return std::sqrt(best2);
}

namespace {

// Deterministic endpoint subset: a stride subset for breadth plus the tail
// of the BFS order, which holds the deepest orbit points of the several
// branches (those drive the hull extremes).
std::vector<std::size_t> endpoint_subset(std::size_t n, std::size_t cap) {
    std::vector<std::size_t> out;
    if (n == 0) return out;
    std::size_t tail = std::min<std::size_t>(n, std::max<std::size_t>(8, cap / 4));
    std::size_t stride = std::max<std::size_t>(1, (n + cap - 1) / cap);
    for (std::size_t i = 0; i < n; i += stride) out.push_back(i);
    for (std::size_t i = n - tail; i < n; ++i) out.push_back(i);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Geodesic endpoints for the quasiconvexity scan. Small orbits are scanned
// exhaustively; otherwise endpoints are stratified by (word length, z) class
// so the z-extreme pairs that drive the hull gaps are always present.
std::vector<std::size_t> quasi_endpoints(const OrbitSample& orbit, std::size_t pair_cap) {
    std::vector<std::size_t> ends;
    std::size_t exhaustive = static_cast<std::size_t>(std::sqrt(2.0 * pair_cap));
    if (orbit.size() <= std::max<std::size_t>(exhaustive, 650)) {
        ends.resize(orbit.size());
        for (std::size_t i = 0; i < orbit.size(); ++i) ends[i] = i;
        return ends;
    }
    std::map<std::string, int> classes;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        std::string key = std::to_string(orbit.word(i).length());
        for (long z : orbit.zvec(i)) key += "," + std::to_string(z);
        if (classes[key]++ < 2) ends.push_back(i);
    }
    for (std::size_t i : endpoint_subset(orbit.size(), 64)) ends.push_back(i);
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    if (ends.size() > 460) {
        std::vector<std::size_t> trimmed;
        std::size_t stride = (ends.size() + 459) / 460;
        for (std::size_t i = 0; i < ends.size(); i += stride) trimmed.push_back(ends[i]);
        ends = std::move(trimmed);
    }
    return ends;
}

QuasiconvexityEstimate quasi_impl(const OrbitSample& orbit, const SampleOptions& opt,
                                  bool parallel) {
    QuasiconvexityEstimate est;
    est.orbit_size = orbit.size();
    if (orbit.size() <= 1) return est;

    std::vector<std::size_t> ends = quasi_endpoints(orbit, opt.pair_cap);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < ends.size(); ++i)
        for (std::size_t j = i + 1; j < ends.size(); ++j) pairs.emplace_back(ends[i], ends[j]);
    est.geodesics = pairs.size();

    std::vector<Rat> params;
    for (int j = 0; j < opt.samples_per_geodesic; ++j)
        params.push_back(frac(j, opt.samples_per_geodesic - 1));
    params.push_back(frac(1, 2));
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());

    double global = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(max : global) if (parallel)
#endif
    for (std::ptrdiff_t ti = 0; ti < static_cast<std::ptrdiff_t>(pairs.size()); ++ti) {
        GeodesicPath geo =
            product_geodesic(orbit.point(pairs[ti].first), orbit.point(pairs[ti].second));
        double local = 0;
        for (const Rat& t : params) {
            ProductPoint pt = geo.at(t);
            local = std::max(local, orbit.nearest_distance(pt));
        }
        global = std::max(global, local);
    }
    est.nu_hat = global;
    est.samples = pairs.size() * params.size();
    return est;
}

}  // namespace

QuasiconvexityEstimate quasiconvexity_estimate(const OrbitSample& orbit,
                                               const SampleOptions& opt) {
    return quasi_impl(orbit, opt, opt.parallel);
}

QuasiconvexityEstimate quasiconvexity_estimate_serial(const OrbitSample& orbit,
                                                      const SampleOptions& opt) {
    return quasi_impl(orbit, opt, false);
}

namespace {

std::vector<std::size_t> stride_subset(std::size_t n, std::size_t cap) {
    std::vector<std::size_t> out;
    if (n == 0) return out;
    std::size_t stride = std::max<std::size_t>(1, (n + cap - 1) / cap);
    for (std::size_t i = 0; i < n; i += stride) out.push_back(i);
    return out;
}

}  // namespace

std::vector<ProductPoint> hull_sample_cloud(const OrbitSample& orbit, const SampleOptions& opt) {
    // Breadth subset plus the BFS tail (the deepest points across branches).
    std::vector<ProductPoint> base;
    for (std::size_t i : endpoint_subset(orbit.size(), opt.hull_base_cap))
        base.push_back(orbit.point(i));

    ConvStepResult c1 = conv_step(base, 5, 200000);
    std::vector<ProductPoint> c1sub;
    for (std::size_t i : stride_subset(c1.points.size(), opt.conv1_cap))
        c1sub.push_back(c1.points[i]);
    ConvStepResult c2 = conv_step(c1sub, 3, 400000);
    std::vector<ProductPoint> cloud;
    for (std::size_t i : stride_subset(c2.points.size(), opt.point_cap))
        cloud.push_back(c2.points[i]);
    return cloud;
}

namespace {

CocompactnessEstimate cocompact_impl(const OrbitSample& orbit, const SampleOptions& opt,
                                     bool parallel) {
    CocompactnessEstimate est;
    est.orbit_size = orbit.size();
    std::vector<ProductPoint> cloud = hull_sample_cloud(orbit, opt);
    est.hull_points = cloud.size();

    double global = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 32) reduction(max : global) if (parallel)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cloud.size()); ++i)
        global = std::max(global, orbit.nearest_distance(cloud[i]));
    est.c_hat = global;
    return est;
}

}  // namespace

CocompactnessEstimate cocompactness_radius(const OrbitSample& orbit, const SampleOptions& opt) {
    return cocompact_impl(orbit, opt, opt.parallel);
}

CocompactnessEstimate cocompactness_radius_serial(const OrbitSample& orbit,
                                                  const SampleOptions& opt) {
    return cocompact_impl(orbit, opt, false);
}

EuclideanPowers euclidean_powers_in_subgroup(const ProdGroup& g, const std::vector<Elem>& h_gens,
                                             int radius) {
    // Hypothesis: not all nontrivial tree parts on one axis.
    std::vector<std::size_t> nontrivial;
    for (std::size_t i = 0; i < h_gens.size(); ++i) {
        const auto& e = std::get<ProdElem>(h_gens[i]);
        if (!e.w.is_identity()) nontrivial.push_back(i);
    }
    if (nontrivial.size() >= 2) {
        bool all_same = true;
        for (std::size_t i = 1; i < nontrivial.size() && all_same; ++i) {
            const auto& f0 = std::get<ProdElem>(h_gens[nontrivial[0]]).w;
            const auto& fi = std::get<ProdElem>(h_gens[nontrivial[i]]).w;
            if (!same_axis(f0, fi)) all_same = false;
        }
        if (all_same) {
            std::string names;
            for (std::size_t i : nontrivial) names += (names.empty() ? "" : ", ") + std::to_string(i);
            throw hypothesis_error("euclidean_powers: generators {" + names +
                                   "} share a translation axis");
        }
    }

    EuclideanPowers out;
    out.search_radius = radius;

    // Collect pure translations from the H-ball.
    std::vector<Generator> gens = symmetrized_generators(Group{g}, h_gens);
    DistanceBall hball = word_metric_ball(Group{g}, gens, radius);
    std::vector<VecZ> translations;
    for (std::size_t i = 0; i < hball.size(); ++i) {
        const auto& e = std::get<ProdElem>(hball.element(i));
        if (!e.w.is_identity()) continue;
        bool zero = std::all_of(e.v.begin(), e.v.end(), [](long x) { return x == 0; });
        if (zero) continue;
        VecZ v(e.v.size());
        for (std::size_t c = 0; c < e.v.size(); ++c) v[c] = e.v[c];
        translations.push_back(std::move(v));
    }
    out.translation_lattice = lattice_hnf_basis(translations);

    // Per generator: least k >= 1 with k z_i inside the found lattice.
    for (const auto& ge : h_gens) {
        const auto& e = std::get<ProdElem>(ge);
        bool zero = std::all_of(e.v.begin(), e.v.end(), [](long x) { return x == 0; });
        if (zero) {
            out.exponents.emplace_back(1);
            continue;
        }
        std::optional<long> found;
        if (!out.translation_lattice.empty()) {
            // Solve z_i = sum c_j b_j over Q; k = lcm of denominators if the
            // solve succeeds and k z_i is integral in the lattice.
            const auto& basis = out.translation_lattice;
            MatQ a(static_cast<int>(e.v.size()), static_cast<int>(basis.size()));
            VecQ rhs(e.v.size());
            for (std::size_t r = 0; r < e.v.size(); ++r) {
                rhs[r] = Rat(e.v[r]);
                for (std::size_t c = 0; c < basis.size(); ++c)
                    a.at(static_cast<int>(r), static_cast<int>(c)) = Rat(basis[c][r]);
            }
            if (auto sol = a.solve(rhs)) {
                // Consistency: residual must vanish (solve() guarantees it).
                Int l(1);
                for (const auto& cq : *sol) {
                    Int den = cq.get_den();
                    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
                }
                if (l.fits_slong_p()) found = l.get_si();
            }
        }
        out.exponents.push_back(found);
        if (!found) out.all_found = false;
    }
    return out;
}

OrbitHull orbit_hull(const ProdGroup& g, const std::vector<Elem>& h_gens, int radius) {
    OrbitHull out;
    out.powers = euclidean_powers_in_subgroup(g, h_gens, radius);

    std::vector<Generator> gens = symmetrized_generators(Group{g}, h_gens);
    OrbitSample orbit(g, gens, radius);
    out.orbit_size = orbit.size();

    // Spanned subtree = prefix closure of the orbit words (x0 is the root, so
    // the union of the geodesics [x0, w] is exactly the prefix closure).
    std::set<std::string> verts;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        const auto& letters = orbit.word(i).letters();
        std::vector<int> prefix;
        verts.insert(FreeWord{}.str());
        for (int l : letters) {
            FreeWord base = FreeWord::from_letters(prefix);
            out.region.edges[{base.str(), l}] = Rat(1);
            prefix.push_back(l);
            verts.insert(FreeWord::from_letters(prefix).str());
        }
    }
    out.region.vertices.assign(verts.begin(), verts.end());
    std::sort(out.region.vertices.begin(), out.region.vertices.end());

    out.region.anchor.assign(g.n, Rat(0));
    for (const auto& row : out.powers.translation_lattice) {
        VecQ v(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) v[c] = Rat(row[c]);
        out.region.v_basis.push_back(std::move(v));
    }
    return out;
}

StallingsGraph::StallingsGraph(const std::vector<FreeWord>& generators) {
    for (const auto& w : generators) m_ = std::max(m_, w.max_generator());
    if (m_ == 0) m_ = 1;

    // Bouquet: one fresh path per generator word, both loop ends at state 0.
    // Multi-edges allowed; folding below resolves them.
    std::vector<std::vector<std::pair<int, int>>> adj(1);  // state -> (letter, target)
    auto add_edge = [&](int a, int l, int b) {
        adj[a].emplace_back(l, b);
        adj[b].emplace_back(-l, a);
    };
    for (const auto& w : generators) {
        if (w.is_identity()) continue;
        int cur = 0;
        const auto& letters = w.letters();
        for (std::size_t i = 0; i < letters.size(); ++i) {
            int next = (i + 1 == letters.size()) ? 0 : [&] {
                adj.emplace_back();
                return static_cast<int>(adj.size()) - 1;
            }();
            add_edge(cur, letters[i], next);
            cur = next;
        }
    }

    // Fold: while some state has two like-labelled edges to different
    // classes, merge the targets.
    std::vector<int> parent(adj.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    // Worklist folding: a merge only ever creates new conflicts at the state
    // that absorbed edges, so rechecking the merged root (and the state being
    // scanned) is enough.
    std::vector<int> dirty;
    for (std::size_t s = 0; s < adj.size(); ++s) dirty.push_back(static_cast<int>(s));
    while (!dirty.empty()) {
        int s = find(dirty.back());
        dirty.pop_back();
        std::unordered_map<int, int> first;  // letter -> target root
        for (std::size_t ei = 0; ei < adj[s].size(); ++ei) {
            int l = adj[s][ei].first;
            int tr = find(adj[s][ei].second);
            adj[s][ei].second = tr;
            auto [it, fresh] = first.emplace(l, tr);
            if (fresh || it->second == tr) continue;
            // Conflict: merge the two targets (keep the base state as root),
            // then restart from the worklist.
            int a = it->second, b = tr;
            if (b == 0 || (a != 0 && b < a)) std::swap(a, b);
            parent[b] = a;
            adj[a].insert(adj[a].end(), adj[b].begin(), adj[b].end());
            adj[b].clear();
            dirty.push_back(a);
            dirty.push_back(find(s));
            break;
        }
    }

    // Deterministic transition table over root states.
    std::vector<int> remap(adj.size(), -1);
    int count = 0;
    remap[find(0)] = count++;
    for (std::size_t s = 0; s < adj.size(); ++s)
        if (find(static_cast<int>(s)) == static_cast<int>(s) && remap[s] == -1) remap[s] = count++;
    trans_.assign(count, std::vector<int>(2 * m_, -1));
    for (std::size_t s = 0; s < adj.size(); ++s) {
        int rs = find(static_cast<int>(s));
        if (rs != static_cast<int>(s)) continue;
        for (auto [l, t] : adj[s]) trans_[remap[rs]][offset(l)] = remap[find(t)];
    }
}

bool StallingsGraph::contains(const FreeWord& w) const {
    if (w.is_identity()) return true;
    if (w.max_generator() > m_) return false;
    int cur = 0;
    for (int l : w.letters()) {
        if (std::abs(l) > m_) return false;
        int t = trans_[cur][offset(l)];
        if (t == -1) return false;
        cur = t;
    }
    return cur == 0;
}

VirtualProduct virtual_product_decomposition(const ProdGroup& g, const std::vector<Elem>& h_gens,
                                             int radius) {
    VirtualProduct out;
    std::vector<Generator> gens = symmetrized_generators(Group{g}, h_gens);
    DistanceBall hball = word_metric_ball(Group{g}, gens, radius);
    out.hball_size = hball.size();

    std::vector<VecZ> translations;
    for (std::size_t i = 0; i < hball.size(); ++i) {
        const auto& e = std::get<ProdElem>(hball.element(i));
        bool zero = std::all_of(e.v.begin(), e.v.end(), [](long x) { return x == 0; });
        if (e.w.is_identity() && !zero) {
            VecZ v(e.v.size());
            for (std::size_t c = 0; c < e.v.size(); ++c) v[c] = e.v[c];
            translations.push_back(std::move(v));
        } else if (!e.w.is_identity() && zero) {
            out.f_words.push_back(e.w);
        }
    }
    out.a_basis = lattice_hnf_basis(translations);
    StallingsGraph f_graph(out.f_words);

    // Coset count of A.F among ball elements: h1 ~ h2 iff w2^-1 w1 in F and
    // v1 - v2 in A.
    struct Rep {
        FreeWord w;
        std::vector<long> v;
    };
    std::vector<Rep> reps;
    for (std::size_t i = 0; i < hball.size(); ++i) {
        const auto& e = std::get<ProdElem>(hball.element(i));
        bool fresh = true;
        for (const Rep& r : reps) {
            FreeWord d = r.w.inverse() * e.w;
            if (!f_graph.contains(d)) continue;
            VecZ dv(e.v.size());
            for (std::size_t c = 0; c < e.v.size(); ++c) dv[c] = e.v[c] - r.v[c];
            if (lattice_contains(out.a_basis, dv)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back({e.w, e.v});
    }
    out.index_bound = static_cast<long>(reps.size());
    return out;
}

}  // namespace ggt
