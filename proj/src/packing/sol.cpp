#include "ggt/packing/sol.hpp"

#include <algorithm>
#include <cmath>

namespace ggt {

double sol_lower_bound(const SolPoint& a, const SolPoint& b) {
    if (a.z != 0.0 || b.z != 0.0)
        throw validation_error("sol_lower_bound applies to points in the z = 0 plane");
    double dx = std::abs(b.x - a.x), dy = std::abs(b.y - a.y);
    double bound = 0.0;
    if (dx > 0) bound = std::max(bound, 2.0 * std::log(dx));
    if (dy > 0) bound = std::max(bound, 2.0 * std::log(dy));
    return bound;
}

namespace {

// Pessimistic segment cost: the metric coefficients are evaluated at the
// endpoint where they are largest, which dominates the true line integral.
double seg_cost(const SolPoint& p, const SolPoint& q) {
    double zmax = std::max(p.z, q.z), zmin = std::min(p.z, q.z);
    double dx = q.x - p.x, dy = q.y - p.y, dz = q.z - p.z;
    double ex = std::exp(2.0 * zmax), ey = std::exp(-2.0 * zmin);
    return std::sqrt(ex * dx * dx + ey * dy * dy + dz * dz);
}

double path_cost(const std::vector<SolPoint>& path) {
    double s = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) s += seg_cost(path[i], path[i + 1]);
    return s;
}

// 1-D refinement of a single coordinate by parabolic probing.
template <typename Getter, typename Setter>
double refine_coord(std::vector<SolPoint>& path, std::size_t i, Getter get, Setter set,
                    double scale) {
    double base = seg_cost(path[i - 1], path[i]) + seg_cost(path[i], path[i + 1]);
    double v0 = get(path[i]);
    double best = base, bestv = v0;
    for (double step = scale; step > 1e-7 * (1.0 + std::abs(v0)); step *= 0.25) {
        for (double cand : {bestv - step, bestv + step}) {
            set(path[i], cand);
            double c = seg_cost(path[i - 1], path[i]) + seg_cost(path[i], path[i + 1]);
            if (c < best) {
                best = c;
                bestv = cand;
            }
        }
    }
    set(path[i], bestv);
    return base - best;
}

}  // namespace

SolPathResult sol_distance_upper(const SolPoint& a, const SolPoint& b, int segments,
                                 int max_sweeps) {
    if (segments < 1) throw validation_error("sol_distance_upper requires segments >= 1");
    double dx = b.x - a.x, dy = b.y - a.y;

    // Initial profile: drop vertically, translate x at the bottom, climb,
    // translate y at the top, then close. Coordinate descent refines from
    // there.
    double zdip = std::min({a.z, b.z, -std::log1p(std::abs(dx))});
    double zpeak = std::max({a.z, b.z, std::log1p(std::abs(dy))});
    std::vector<SolPoint> ctrl;
    ctrl.push_back(a);
    if (std::abs(dx) > 0) {
        ctrl.push_back({a.x, a.y, zdip});
        ctrl.push_back({b.x, a.y, zdip});
    }
    if (std::abs(dy) > 0) {
        ctrl.push_back({b.x, a.y, zpeak});
        ctrl.push_back({b.x, b.y, zpeak});
    }
    ctrl.push_back(b);

    // Sample the control polyline into `segments` pieces.
    std::vector<SolPoint> path;
    path.reserve(segments + 1);
    int pieces = static_cast<int>(ctrl.size()) - 1;
    for (int s = 0; s <= segments; ++s) {
        double t = static_cast<double>(s) / segments * pieces;
        int leg = std::min(pieces - 1, static_cast<int>(t));
        double u = t - leg;
        const SolPoint& p = ctrl[leg];
        const SolPoint& q = ctrl[leg + 1];
        path.push_back({p.x + u * (q.x - p.x), p.y + u * (q.y - p.y), p.z + u * (q.z - p.z)});
    }

    double scale = 1.0 + std::max({std::abs(dx), std::abs(dy), zpeak - zdip});
    SolPathResult res;
    res.converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double gain = 0;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            gain += refine_coord(
                path, i, [](const SolPoint& p) { return p.z; },
                [](SolPoint& p, double v) { p.z = v; }, scale);
            gain += refine_coord(
                path, i, [](const SolPoint& p) { return p.x; },
                [](SolPoint& p, double v) { p.x = v; }, scale);
            gain += refine_coord(
                path, i, [](const SolPoint& p) { return p.y; },
                [](SolPoint& p, double v) { p.y = v; }, scale);
        }
        if (gain < 1e-10 * (1.0 + path_cost(path))) {
            res.converged = true;
            break;
        }
    }
    res.length = path_cost(path);
    res.path = std::move(path);
    return res;
}

SolEmbedding sol_embedding(const IntAutomorphism& phi) {
    if (phi.dim() != 2) throw hypothesis_error("sol_embedding requires a 2x2 automorphism");
    if (phi.det() != 1)
        throw hypothesis_error("sol_embedding requires det +1 (eigenvalues lambda, 1/lambda)");
    Int tr = phi.mat().at(0, 0) + phi.mat().at(1, 1);
    if (tr <= 2)
        throw hypothesis_error("sol_embedding requires trace > 2 (0 < 1/lambda < 1 < lambda)");

    double a = to_double(phi.mat().at(0, 0)), bb = to_double(phi.mat().at(0, 1));
    double c = to_double(phi.mat().at(1, 0)), d = to_double(phi.mat().at(1, 1));
    double t = a + d;
    double disc = std::sqrt(t * t - 4.0);
    double lambda = (t + disc) / 2.0;
    double mu = (t - disc) / 2.0;  // = 1/lambda

    auto eigvec = [&](double lam, double out[2]) {
        // (A - lam) v = 0; pick the numerically larger row construction.
        double v1[2] = {bb, lam - a};
        double v2[2] = {lam - d, c};
        double n1 = std::hypot(v1[0], v1[1]), n2 = std::hypot(v2[0], v2[1]);
        double* v = n1 >= n2 ? v1 : v2;
        double n = std::hypot(v[0], v[1]);
        out[0] = v[0] / n;
        out[1] = v[1] / n;
        if (out[0] < 0 || (out[0] == 0 && out[1] < 0)) {
            out[0] = -out[0];
            out[1] = -out[1];
        }
    };

    SolEmbedding emb;
    emb.lambda = lambda;
    emb.log_lambda = std::log(lambda);
    eigvec(mu, emb.v_minus);
    eigvec(lambda, emb.v_plus);
    // f = [v_- v_+]^{-1}: sends v_- to e1, v_+ to e2.
    double p00 = emb.v_minus[0], p01 = emb.v_plus[0];
    double p10 = emb.v_minus[1], p11 = emb.v_plus[1];
    double det = p00 * p11 - p01 * p10;
    emb.f[0] = p11 / det;
    emb.f[1] = -p01 / det;
    emb.f[2] = -p10 / det;
    emb.f[3] = p00 / det;
    return emb;
}

SolPoint sol_embed(long k, long l, long q, const SolEmbedding& emb) {
    double kx = static_cast<double>(k), ly = static_cast<double>(l);
    return {emb.f[0] * kx + emb.f[1] * ly, emb.f[2] * kx + emb.f[3] * ly,
            static_cast<double>(q) * emb.log_lambda};
}

DistortionReport distortion_check(const IntAutomorphism& phi, int samples, std::uint64_t seed,
                                  const DistanceBall* poly_ball) {
    DistortionReport rep;
    rep.samples = samples;
    Rng rng(seed);

    for (int s = 0; s < samples; ++s) {
        long x1 = rng.next_int(-50, 50), y1 = rng.next_int(-50, 50);
        long x2 = rng.next_int(-50, 50), y2 = rng.next_int(-50, 50);
        if (x1 == x2 && y1 == y2) continue;
        double dx = std::abs(static_cast<double>(x2 - x1));
        double dy = std::abs(static_cast<double>(y2 - y1));
        double d = std::hypot(dx, dy);
        double mx = std::max(dx, dy);
        if (d > std::sqrt(2.0) * mx + 1e-12) ++rep.eq_sqrt2_violations;
        if (mx >= 1 && std::log(d) > std::log(mx) + 0.5 * std::log(2.0) + 1e-12)
            ++rep.eq_log_violations;

        SolPoint p1{static_cast<double>(x1), static_cast<double>(y1), 0};
        SolPoint p2{static_cast<double>(x2), static_cast<double>(y2), 0};
        double lower = sol_lower_bound(p1, p2);
        if (d >= 1 && 2.0 * std::log(d) - std::log(2.0) > lower + 1e-9) ++rep.sol_chain_violations;

        SolPathResult up = sol_distance_upper(p1, p2, 16, 30);
        if (lower > 0) rep.max_ratio_upper_lower = std::max(rep.max_ratio_upper_lower, up.length / lower);
        if (d >= 1 && up.length < 2.0 * std::log(d) + std::log(2.0)) ++rep.upper_below_strong_form;
    }

    if (poly_ball != nullptr) {
        // Regress d_P((z1,0),(z2,0)) against log d_Z2 on ball pairs.
        const auto& pg = std::get<PolyGroup>(poly_ball->group());
        if (!(pg.phi->mat() == phi.mat()))
            throw validation_error("distortion_check: ball was built for a different automorphism");
        std::vector<std::size_t> lattice_ids;
        for (std::size_t id = 0; id < poly_ball->size(); ++id) {
            const auto& e = std::get<PolyElem>(poly_ball->element(id));
            if (e.k == 0 && !is_identity(poly_ball->element(id))) lattice_ids.push_back(id);
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (int t = 0; t < 4 * samples && n < samples; ++t) {
            if (lattice_ids.size() < 2) break;
            std::size_t i = lattice_ids[static_cast<std::size_t>(
                rng.next_int(0, static_cast<long>(lattice_ids.size()) - 1))];
            std::size_t j = lattice_ids[static_cast<std::size_t>(
                rng.next_int(0, static_cast<long>(lattice_ids.size()) - 1))];
            if (i == j) continue;
            const auto& a = std::get<PolyElem>(poly_ball->element(i));
            const auto& b = std::get<PolyElem>(poly_ball->element(j));
            long l1 = 0;
            for (size_t c = 0; c < a.z.size(); ++c) l1 += std::labs(b.z[c] - a.z[c]);
            if (l1 < 2) continue;
            Elem diff = mul(poly_ball->group(), inv(poly_ball->group(), poly_ball->element(i)),
                            poly_ball->element(j));
            auto dist = poly_ball->distance_of(diff);
            if (!dist) continue;
            double x = std::log(static_cast<double>(l1));
            double y = static_cast<double>(*dist);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++n;
        }
        if (n >= 8) {
            double denom = n * sxx - sx * sx;
            if (std::abs(denom) > 1e-12) {
                rep.fitted_c = (n * sxy - sx * sy) / denom;
                rep.fitted_a = (sy - rep.fitted_c * sx) / n;
                rep.fit_pairs = n;
            }
        }
    }
    return rep;
}

}  // namespace ggt
