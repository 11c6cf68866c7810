#include "ggt/hull/metric_checks.hpp"

#include <algorithm>
#include <cmath>

namespace ggt {

ComparisonCheck cat0_comparison_check(const ProductPoint& a, const ProductPoint& b,
                                      const ProductPoint& c, int samples_per_side) {
    if (samples_per_side < 2) throw validation_error("need at least 2 samples per side");
    GeodesicPath sides[3] = {product_geodesic(a, b), product_geodesic(b, c),
                             product_geodesic(a, c)};
    double len_ab = sides[0].length();
    double len_bc = sides[1].length();
    double len_ac = sides[2].length();

    // Comparison triangle: a at origin, b on the x-axis, c above.
    double bx = len_ab;
    double cx = len_ab > 0 ? (len_ab * len_ab + len_ac * len_ac - len_bc * len_bc) / (2 * len_ab)
                           : 0.0;
    double cy2 = len_ac * len_ac - cx * cx;
    double cy = cy2 > 0 ? std::sqrt(cy2) : 0.0;
    double corners[3][2] = {{0, 0}, {bx, 0}, {cx, cy}};
    int ends[3][2] = {{0, 1}, {1, 2}, {0, 2}};

    // Sample points on each side with their comparison images.
    struct Sample {
        ProductPoint p;
        double cx, cy;
    };
    std::vector<Sample> samples;
    for (int s = 0; s < 3; ++s) {
        for (int j = 0; j <= samples_per_side; ++j) {
            Rat t = frac(j, samples_per_side);
            double td = to_double(t);
            Sample smp;
            smp.p = sides[s].at(t);
            smp.cx = corners[ends[s][0]][0] + td * (corners[ends[s][1]][0] - corners[ends[s][0]][0]);
            smp.cy = corners[ends[s][0]][1] + td * (corners[ends[s][1]][1] - corners[ends[s][0]][1]);
            samples.push_back(std::move(smp));
        }
    }

    ComparisonCheck out;
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            double dx = product_distance(samples[i].p, samples[j].p);
            double de = std::hypot(samples[i].cx - samples[j].cx, samples[i].cy - samples[j].cy);
            out.max_violation = std::max(out.max_violation, dx - de);
            ++out.pairs;
        }
    return out;
}

double metric_convexity_check(const GeodesicPath& g1, const GeodesicPath& g2, int samples) {
    if (!(g1.from == g2.from)) throw validation_error("geodesics must share their start point");
    double end_dist = product_distance(g1.to, g2.to);
    double worst = 0;
    for (int j = 0; j <= samples; ++j) {
        Rat t = frac(j, samples);
        double d = product_distance(g1.at(t), g2.at(t));
        worst = std::max(worst, d - to_double(t) * end_dist);
    }
    return worst;
}

double comparison_angle(double d_ab, double d_ac, double d_bc) {
    if (d_ab <= 0 || d_ac <= 0) throw validation_error("comparison_angle needs positive sides");
    if (d_bc > d_ab + d_ac || d_ab > d_ac + d_bc || d_ac > d_ab + d_bc)
        throw validation_error("triangle inequality violated");
    double cosv = (d_ab * d_ab + d_ac * d_ac - d_bc * d_bc) / (2 * d_ab * d_ac);
    cosv = std::clamp(cosv, -1.0, 1.0);
    return std::acos(cosv);
}

namespace {

Rat cross(const VecQ& o, const VecQ& a, const VecQ& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

double hilbert_distance(const std::vector<VecQ>& polygon, const VecQ& a1, const VecQ& a2) {
    const std::size_t n = polygon.size();
    if (n < 3) throw validation_error("hilbert_distance needs a polygon");
    for (const auto& p : polygon)
        if (p.size() != 2) throw validation_error("hilbert_distance is planar");

    // Convexity and orientation: all turns must have the same sign.
    int orient = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Rat c = cross(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]);
        int s = c > 0 ? 1 : (c < 0 ? -1 : 0);
        if (s == 0) continue;  // collinear chain is fine
        if (orient == 0) orient = s;
        else if (orient != s) throw validation_error("polygon is not convex");
    }
    if (orient == 0) throw validation_error("degenerate polygon");

    // Strict interiority.
    for (const VecQ* a : {&a1, &a2})
        for (std::size_t i = 0; i < n; ++i) {
            Rat c = cross(polygon[i], polygon[(i + 1) % n], *a);
            if (orient > 0 ? c <= 0 : c >= 0)
                throw validation_error("hilbert_distance: point not strictly interior");
        }

    if (a1 == a2) return 0.0;

    // Intersect the line a1 + t (a2 - a1) with the boundary; exact rational
    // parameters, deduped (a vertex hit shows up on two edges).
    VecQ dir{a2[0] - a1[0], a2[1] - a1[1]};
    std::vector<Rat> hits;
    for (std::size_t i = 0; i < n; ++i) {
        const VecQ& u = polygon[i];
        const VecQ& v = polygon[(i + 1) % n];
        // Solve a1 + t dir = u + s (v - u), s in [0, 1].
        Rat ex = v[0] - u[0], ey = v[1] - u[1];
        Rat det = dir[0] * (-ey) - dir[1] * (-ex);
        if (det == 0) continue;  // parallel
        Rat bx = u[0] - a1[0], by = u[1] - a1[1];
        Rat t = (bx * (-ey) - by * (-ex)) / det;
        Rat s = (dir[0] * by - dir[1] * bx) / det;
        if (s < 0 || s > 1) continue;
        hits.push_back(t);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.size() != 2) throw validation_error("line does not cross the boundary twice");

    // Order b1, a1, a2, b2 along the line: t(b1) < 0 < 1 < t(b2).
    Rat t_b1 = hits.front(), t_b2 = hits.back();
    if (!(t_b1 < 0 && t_b2 > 1))
        throw validation_error("hilbert_distance: interior assumption failed");
    // Cross ratio in line parameters:
    //   (d(a2,b1) d(a1,b2)) / (d(a1,b1) d(a2,b2))
    // = ((1 - t_b1) t_b2) / ((-t_b1)(t_b2 - 1)).
    Rat ratio = ((Rat(1) - t_b1) * t_b2) / ((-t_b1) * (t_b2 - Rat(1)));
    return std::log(to_double(ratio));
}

}  // namespace ggt
