#include "ggt/groups/cosets.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace ggt {

namespace {

void append_long(std::string& s, long x) {
    char buf[sizeof(long)];
    std::memcpy(buf, &x, sizeof(long));
    s.append(buf, sizeof(long));
}

std::string key_of_longs(char tag, const std::vector<long>& v, long extra, bool with_extra) {
    std::string s(1, tag);
    for (long x : v) append_long(s, x);
    if (with_extra) append_long(s, extra);
    return s;
}

long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::vector<long> lattice_residue(const std::vector<VecZ>& hnf_basis, const std::vector<long>& v) {
    std::vector<long> w = v;
    const int n = static_cast<int>(w.size());
    std::size_t row = 0;
    for (int col = 0; col < n && row < hnf_basis.size(); ++col) {
        if (hnf_basis[row][col] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), Int(w[col]).get_mpz_t(), hnf_basis[row][col].get_mpz_t());
        long ql = q.get_si();
        if (ql != 0)
            for (int j = col; j < n; ++j) w[j] -= ql * hnf_basis[row][j].get_si();
        ++row;
    }
    return w;
}

Subgroup resolve_subgroup(const Group& g, const std::vector<Elem>& gens) {
    Subgroup sub;
    for (const auto& e : gens)
        if (!is_identity(e)) sub.raw_gens.push_back(e);
    sub.trivial = sub.raw_gens.empty();
    if (!sub.trivial) sub.gens = symmetrized_generators(g, sub.raw_gens);

    if (std::holds_alternative<ZnGroup>(g)) {
        sub.scheme = CosetScheme::Lattice;
        std::vector<VecZ> rows;
        for (const auto& e : sub.raw_gens) {
            const auto& v = std::get<ZnElem>(e).v;
            VecZ r(v.size());
            for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
            rows.push_back(std::move(r));
        }
        sub.lattice = lattice_hnf_basis(rows);
        return sub;
    }

    if (const auto* pg = std::get_if<PolyGroup>(&g)) {
        if (sub.trivial) {
            sub.scheme = CosetScheme::Lattice;  // trivial lattice: every element its own coset
            return sub;
        }
        bool all_pure_t = true, all_k_zero = true;
        long gcd_k = 0;
        std::vector<VecZ> rows;
        for (const auto& e : sub.raw_gens) {
            const auto& p = std::get<PolyElem>(e);
            bool z_zero = std::all_of(p.z.begin(), p.z.end(), [](long x) { return x == 0; });
            if (!z_zero || p.k == 0) all_pure_t = false;
            if (p.k != 0) all_k_zero = false;
            gcd_k = std::gcd(gcd_k, std::labs(p.k));
            VecZ r(p.z.size());
            for (size_t i = 0; i < p.z.size(); ++i) r[i] = p.z[i];
            rows.push_back(std::move(r));
        }
        if (all_pure_t) {
            sub.scheme = CosetScheme::PolyT;
            sub.t_modulus = gcd_k;
            return sub;
        }
        if (all_k_zero) {
            auto basis = lattice_hnf_basis(rows);
            bool full = static_cast<int>(basis.size()) == pg->n;
            if (full) {
                MatZ b = MatZ::from_rows(basis);
                full = b.det() == 1 || b.det() == -1;
            }
            if (full) {
                sub.scheme = CosetScheme::PolyFullLattice;
                return sub;
            }
        }
        sub.scheme = CosetScheme::Generic;
        return sub;
    }

    sub.scheme = CosetScheme::Generic;
    return sub;
}

std::string CosetIndex::coset_key(const Elem& e) const {
    switch (sub_.scheme) {
        case CosetScheme::PolyT: {
            const auto& p = std::get<PolyElem>(e);
            return key_of_longs('t', p.z, mod_floor(p.k, sub_.t_modulus), true);
        }
        case CosetScheme::PolyFullLattice: {
            const auto& p = std::get<PolyElem>(e);
            return key_of_longs('f', {}, p.k, true);
        }
        case CosetScheme::Lattice: {
            const auto& z = std::get<ZnElem>(e);
            return key_of_longs('l', lattice_residue(sub_.lattice, z.v), 0, false);
        }
        case CosetScheme::Generic:
            break;
    }
    throw validation_error("coset_key: generic scheme has no normal-form key");
}

CosetIndex::CosetIndex(const DistanceBall& ball, Subgroup sub, CosetOptions opt)
    : ball_(&ball), sub_(std::move(sub)), opt_(opt) {
    const std::size_t n = ball.size();

    if (sub_.scheme == CosetScheme::Generic) {
        // Subgroup element keys up to the certificate bound (in H-generator
        // word length).
        certificate_bound_ = opt_.certificate_factor * ball.radius();
        if (sub_.trivial) {
            for (std::size_t id = 0; id < n; ++id) {
                rep_ids_.push_back(id);
                rep_confirmed_.push_back(true);
            }
            h_keys_.insert(elem_key(identity(ball.group())));
            return;
        }
        BallOptions hopt;
        hopt.element_cap = opt_.h_ball_cap;
        hopt.parallel = opt_.parallel;
        DistanceBall hball = word_metric_ball(ball.group(), sub_.gens, certificate_bound_, hopt);
        h_ball_truncated_ = hball.truncated();
        for (std::size_t i = 0; i < hball.size(); ++i) h_keys_.insert(elem_key(hball.element(i)));

        for (std::size_t id = 0; id < n; ++id) {
            const Elem& g = ball.element(id);
            bool fresh = true;
            for (std::size_t rid : rep_ids_) {
                Elem m = mul(ball.group(), inv(ball.group(), ball.element(rid)), g);
                if (h_keys_.count(elem_key(m))) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) {
                rep_ids_.push_back(id);
                // Distinctness is only certified up to the bounded search.
                rep_confirmed_.push_back(false);
            }
        }
        return;
    }

    // Exact schemes: class tables + representative dedupe by normal form.
    if (sub_.scheme == CosetScheme::PolyT || sub_.scheme == CosetScheme::PolyFullLattice) {
        const auto& pg = std::get<PolyGroup>(ball.group());
        box_.assign(pg.n, 0);
    }
    for (std::size_t id = 0; id < n; ++id) {
        const Elem& e = ball.element(id);
        if (!box_.empty()) {
            const auto& p = std::get<PolyElem>(e);
            for (int i = 0; i < static_cast<int>(box_.size()); ++i)
                box_[i] = std::max(box_[i], std::labs(p.z[i]));
        }
        std::string ck;
        if (sub_.scheme == CosetScheme::PolyT) {
            const auto& p = std::get<PolyElem>(e);
            ck = key_of_longs('z', p.z, mod_floor(p.k, sub_.t_modulus), true);
            auto [it, fresh] = class_min_.emplace(ck, ball.distance(id));
            if (!fresh) it->second = std::min(it->second, ball.distance(id));
        } else {
            ck = coset_key(e);
            auto [it, fresh] = class_min_.emplace(ck, ball.distance(id));
            if (!fresh) it->second = std::min(it->second, ball.distance(id));
        }
        std::string rk = coset_key(e);
        if (!rep_of_key_.count(rk)) {
            rep_of_key_.emplace(rk, id);
            rep_ids_.push_back(id);
            rep_confirmed_.push_back(true);
        }
    }
    certificate_bound_ = ball.radius();
}

// Minimum ball distance over the double coset of (u, kappa) under <t^g>:
// elements (phi^{-gi} u, kappa + g Z). Scans i both ways with an escape
// streak once the iterate leaves the coordinate box of the ball.
CosetDistance CosetIndex::poly_t_distance(const std::vector<long>& u, long kappa) const {
    const auto& pg = std::get<PolyGroup>(ball_->group());
    const long g = sub_.t_modulus;
    int best = ball_->radius() + 1;
    bool found = false;

    auto probe = [&](const std::vector<long>& v) {
        std::string ck = key_of_longs('z', v, mod_floor(kappa, g), true);
        auto it = class_min_.find(ck);
        if (it != class_min_.end()) {
            best = std::min(best, it->second);
            found = true;
        }
    };
    auto in_box = [&](const std::vector<long>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (std::labs(v[i]) > box_[i]) return false;
        return true;
    };
    auto inf_norm = [](const std::vector<long>& v) {
        long m = 0;
        for (long x : v) m = std::max(m, std::labs(x));
        return m;
    };

    for (int dir = 0; dir < 2; ++dir) {
        std::vector<long> v = u;
        long streak = 0;
        long prev = inf_norm(v);
        for (long step = 0; step < 100000; ++step) {
            if (step > 0 || dir == 0) probe(v);
            bool outside = !in_box(v);
            long norm = inf_norm(v);
            if (outside && norm >= prev && step > 0) {
                if (++streak >= opt_.escape_buffer) break;
            } else {
                streak = 0;
            }
            prev = norm;
            try {
                v = poly_phi_pow(pg, v, dir == 0 ? -g : g);
            } catch (const budget_error&) {
                break;  // overflow: far outside any ball coordinate box
            }
            if (v == u) break;  // periodic orbit fully scanned
        }
    }
    return {best, found};
}

CosetDistance CosetIndex::coset_distance(std::size_t id_a, std::size_t id_b) const {
    const Group& g = ball_->group();
    switch (sub_.scheme) {
        case CosetScheme::PolyT: {
            const auto& a = std::get<PolyElem>(ball_->element(id_a));
            const auto& b = std::get<PolyElem>(ball_->element(id_b));
            const auto& pg = std::get<PolyGroup>(g);
            // a^-1 b = (phi^{-k_a}(z_b - z_a), k_b - k_a)
            std::vector<long> diff(a.z.size());
            for (size_t i = 0; i < diff.size(); ++i) diff[i] = b.z[i] - a.z[i];
            std::vector<long> u = poly_phi_pow(pg, diff, -a.k);
            return poly_t_distance(u, b.k - a.k);
        }
        case CosetScheme::PolyFullLattice: {
            const auto& a = std::get<PolyElem>(ball_->element(id_a));
            const auto& b = std::get<PolyElem>(ball_->element(id_b));
            std::string ck = key_of_longs('f', {}, b.k - a.k, true);
            auto it = class_min_.find(ck);
            if (it == class_min_.end()) return {ball_->radius() + 1, false};
            return {it->second, true};
        }
        case CosetScheme::Lattice: {
            const auto& a = std::get<ZnElem>(ball_->element(id_a));
            const auto& b = std::get<ZnElem>(ball_->element(id_b));
            std::vector<long> diff(a.v.size());
            for (size_t i = 0; i < diff.size(); ++i) diff[i] = b.v[i] - a.v[i];
            std::string ck = key_of_longs('l', lattice_residue(sub_.lattice, diff), 0, false);
            auto it = class_min_.find(ck);
            if (it == class_min_.end()) return {ball_->radius() + 1, false};
            return {it->second, true};
        }
        case CosetScheme::Generic: {
            // Bounded double-coset search inside the ball.
            Elem c = mul(g, inv(g, ball_->element(id_a)), ball_->element(id_b));
            auto c_id = ball_->find(c);
            std::unordered_set<std::string> visited;
            std::vector<Elem> queue;
            int best = ball_->radius() + 1;
            bool witnessed = false;
            auto push = [&](const Elem& e) {
                auto id = ball_->find(e);
                if (!id) return;  // prune outside the ball
                std::string k = elem_key(e);
                if (visited.count(k)) return;
                visited.insert(k);
                queue.push_back(e);
                if (ball_->distance(*id) < best) {
                    best = ball_->distance(*id);
                    witnessed = true;
                }
            };
            if (c_id) push(c);
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                Elem cur = queue[qi];
                for (const auto& hgen : sub_.gens) {
                    push(mul(g, hgen.g, cur));
                    push(mul(g, cur, hgen.g));
                }
            }
            return {best, witnessed};
        }
    }
    throw validation_error("unreachable coset scheme");
}

CosetDistance CosetIndex::distance_from_base(std::size_t id) const {
    auto base = ball_->find(identity(ball_->group()));
    return coset_distance(*base, id);
}

std::vector<std::pair<int, int>> CosetIndex::proximity_edges(double r,
                                                             std::size_t* unwitnessed_pairs) const {
    std::vector<std::pair<int, int>> edges;
    std::size_t unwitnessed = 0;
    const std::size_t nreps = rep_ids_.size();

    if (sub_.scheme == CosetScheme::PolyT && sub_.t_modulus == 1) {
        // Translation-invariance: d(z_a H, z_b H) depends only on the
        // phi-orbit of z_b - z_a. Enumerate the difference set
        // U_r = {u : D(u) < r} from the ball classes, then probe translates
        // z_a + u instead of running a per-pair orbit scan.
        const auto& pg = std::get<PolyGroup>(ball_->group());
        long diff_box = 0;
        for (long b : box_) diff_box = std::max(diff_box, 2 * b);

        struct RepInfo {
            std::vector<long> z;
            long kmod;
        };
        std::vector<RepInfo> reps(nreps);
        std::unordered_map<std::string, int> rep_index;
        for (std::size_t i = 0; i < nreps; ++i) {
            const auto& p = std::get<PolyElem>(ball_->element(rep_ids_[i]));
            reps[i] = {p.z, mod_floor(p.k, sub_.t_modulus)};
            rep_index.emplace(key_of_longs('r', p.z, reps[i].kmod, true), static_cast<int>(i));
        }

        // Seeds: ball classes with min distance < r, one per (z, kmod).
        struct Seed {
            std::vector<long> z;
            long kmod;
        };
        std::vector<Seed> seeds;
        for (std::size_t id = 0; id < ball_->size(); ++id) {
            const auto& p = std::get<PolyElem>(ball_->element(id));
            if (ball_->distance(id) < r) seeds.push_back({p.z, mod_floor(p.k, sub_.t_modulus)});
        }
        std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
            if (a.z != b.z) return a.z < b.z;
            return a.kmod < b.kmod;
        });
        seeds.erase(std::unique(seeds.begin(), seeds.end(),
                                [](const Seed& a, const Seed& b) {
                                    return a.z == b.z && a.kmod == b.kmod;
                                }),
                    seeds.end());

        // U_r per kappa-class: all phi^{i}v within the difference box.
        auto inf_norm = [](const std::vector<long>& v) {
            long m = 0;
            for (long x : v) m = std::max(m, std::labs(x));
            return m;
        };
        std::vector<std::pair<std::vector<long>, long>> u_set;  // (u, kmod of c)
        std::unordered_set<std::string> u_seen;
        for (const auto& s : seeds) {
            for (int dir = 0; dir < 2; ++dir) {
                std::vector<long> v = s.z;
                long streak = 0;
                long prev = inf_norm(v);
                for (long step = 0; step < 100000; ++step) {
                    if (dir == 1 && step == 0) {
                        // forward direction already visited step 0
                    } else {
                        bool zero = std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
                        if (!zero) {
                            std::string k = key_of_longs('u', v, s.kmod, true);
                            if (!u_seen.count(k)) {
                                u_seen.insert(k);
                                u_set.push_back({v, s.kmod});
                            }
                        }
                    }
                    long norm = inf_norm(v);
                    bool outside = norm > diff_box;
                    if (outside && norm >= prev && step > 0) {
                        if (++streak >= opt_.escape_buffer) break;
                    } else {
                        streak = 0;
                    }
                    prev = norm;
                    try {
                        v = poly_phi_pow(pg, v, dir == 0 ? sub_.t_modulus : -sub_.t_modulus);
                    } catch (const budget_error&) {
                        break;
                    }
                    if (v == s.z) break;  // periodic orbit fully scanned
                }
            }
        }

        // Edge (a, b) iff z_b - z_a lies in U_r (with g = 1 the kappa class
        // is trivial and the whole orbit of the difference is in U_r).
        for (std::size_t a = 0; a < nreps; ++a) {
            const auto& pa = std::get<PolyElem>(ball_->element(rep_ids_[a]));
            for (const auto& [u, ckmod] : u_set) {
                (void)ckmod;
                std::vector<long> zb(pa.z.size());
                bool over = false;
                for (size_t i = 0; i < zb.size(); ++i) {
                    if (__builtin_add_overflow(pa.z[i], u[i], &zb[i])) over = true;
                }
                if (over) continue;
                auto it = rep_index.find(key_of_longs('r', zb, 0, true));
                if (it == rep_index.end()) continue;
                int b = it->second;
                if (b > static_cast<int>(a)) edges.emplace_back(static_cast<int>(a), b);
            }
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        if (unwitnessed_pairs) *unwitnessed_pairs = 0;
        return edges;
    }

    // Small rep sets: direct pairwise distances.
    for (std::size_t a = 0; a < nreps; ++a) {
        for (std::size_t b = a + 1; b < nreps; ++b) {
            CosetDistance d = coset_distance(rep_ids_[a], rep_ids_[b]);
            if (sub_.scheme == CosetScheme::Generic && !d.exact) {
                ++unwitnessed;
                continue;  // treated as separated at scale r
            }
            if (d.exact && d.value < r) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    if (unwitnessed_pairs) *unwitnessed_pairs = unwitnessed;
    return edges;
}

}  // namespace ggt
