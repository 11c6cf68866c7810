#include "ggt/packing/packing.hpp"

#include <algorithm>
#include <cmath>

namespace ggt {

PackingEntry packing_profile(const CosetIndex& idx, double r, int clique_exact_cap) {
    if (r <= 0) throw validation_error("packing_profile requires r > 0");
    if (r > idx.ball().achieved_radius())
        throw validation_error("packing_profile requires r <= ball radius");

    PackingEntry entry;
    entry.r = r;
    entry.ball_radius = idx.ball().achieved_radius();
    entry.coset_count = idx.rep_ids().size();
    for (bool c : idx.rep_confirmed())
        if (!c) ++entry.unconfirmed_reps;

    std::size_t unwitnessed = 0;
    auto edges = idx.proximity_edges(r, &unwitnessed);
    entry.truncated_pairs = unwitnessed;

    Graph g = Graph::from_edges(static_cast<int>(idx.rep_ids().size()), edges);
    CliqueResult clique = max_clique(g, clique_exact_cap);
    entry.n_hat = std::max<int>(1, static_cast<int>(clique.vertices.size()));
    entry.exact = clique.exact;
    entry.witness = clique.vertices;
    return entry;
}

GrowthSeries coset_growth(const CosetIndex& idx, int radius_cap, bool parallel) {
    if (radius_cap < 1) throw validation_error("coset_growth requires R >= 1");
    const int cap = std::min(radius_cap, idx.ball().achieved_radius());

    GrowthSeries series;
    series.truncated = idx.ball().truncated();

    const auto& reps = idx.rep_ids();
    std::vector<int> base_dist(reps.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (parallel && reps.size() > 512)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(reps.size()); ++i) {
        CosetDistance d = idx.distance_from_base(reps[i]);
        base_dist[i] = d.exact ? d.value : idx.ball().radius() + 1;
    }

    for (int r = 1; r <= cap; ++r) {
        long long count = 0;
        for (int d : base_dist)
            if (d < r) ++count;
        series.radii.push_back(r);
        series.counts.push_back(count);
    }
    series.fit = growth_rate_fit(series.radii, series.counts);
    return series;
}

GrowthFit growth_rate_fit(const std::vector<int>& radii, const std::vector<long long>& counts,
                          int fit_lo) {
    if (radii.size() != counts.size()) throw validation_error("growth fit: ragged series");
    GrowthFit fit;
    fit.fit_lo = fit_lo;

    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] < fit_lo || counts[i] <= 0) continue;
        xs.push_back(radii[i]);
        ys.push_back(std::log(static_cast<double>(counts[i])));
    }

    bool constant = true;
    for (std::size_t i = 1; i < ys.size(); ++i)
        if (ys[i] != ys[0]) constant = false;
    if (ys.size() < 2 || constant) {
        fit.degenerate = true;
        fit.alpha = 1.0;
        fit.log_b = ys.empty() ? 0.0 : ys[0];
        return fit;
    }
    if (xs.size() < 4) throw validation_error("growth fit needs >= 4 positive data points");

    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
        syy += ys[i] * ys[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double intercept = (sy - slope * sx) / n;
    fit.alpha = std::exp(slope);
    fit.log_b = intercept;

    double ss_res = 0, ss_tot = 0, ybar = sy / n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - (slope * xs[i] + intercept);
        ss_res += e * e;
        ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
    }
    fit.residual = std::sqrt(ss_res / n);
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;

    // Least integer C with B alpha^(r/C) <= f(r) <= B alpha^(Cr) on the window.
    fit.equivalence_c = 0;
    for (int c = 1; c <= 64; ++c) {
        bool ok = true;
        for (std::size_t i = 0; i < xs.size() && ok; ++i) {
            double lo = intercept + slope * xs[i] / c;
            double hi = intercept + slope * xs[i] * c;
            if (slope < 0) std::swap(lo, hi);
            if (ys[i] < lo - 1e-12 || ys[i] > hi + 1e-12) ok = false;
        }
        if (ok) {
            fit.equivalence_c = c;
            break;
        }
    }
    return fit;
}

}  // namespace ggt
