#pragma once

#include "ggt/groups/cosets.hpp"
#include "ggt/packing/clique.hpp"

namespace ggt {

// One packing-profile measurement: N_hat(r) at truncation radius R.
struct PackingEntry {
    double r = 0;
    int ball_radius = 0;
    int n_hat = 0;
    bool exact = true;               // clique search proved maximality
    std::size_t truncated_pairs = 0; // pairs without a bounded-search witness
    std::size_t unconfirmed_reps = 0;
    std::size_t coset_count = 0;
    std::vector<int> witness;        // rep indices of the found family
};

// Max observed family of distinct cosets pairwise closer than r.
PackingEntry packing_profile(const CosetIndex& idx, double r, int clique_exact_cap = 25);

struct GrowthFit {
    double alpha = 1.0;
    double log_b = 0.0;      // intercept of the log-linear fit
    double residual = 0.0;   // RMS residual of log counts
    double r_squared = 1.0;
    double equivalence_c = 1.0;  // least C >= 1 with B a^(r/C) <= f(r) <= B a^(Cr)
    bool degenerate = false;
    int fit_lo = 3;
};

struct GrowthSeries {
    std::vector<int> radii;          // r = 1..R
    std::vector<long long> counts;   // cosets gH with d(H, gH) < r
    bool truncated = false;
    GrowthFit fit;
};

// Coset growth series measured inside the index's ball; counts are monotone
// and count(1) == 1 exactly (the base coset).
GrowthSeries coset_growth(const CosetIndex& idx, int radius_cap, bool parallel = true);

// Least-squares log-linear fit over radii >= fit_lo (small-ball effects are
// excluded); requires >= 4 positive data points unless the series is
// degenerate (constant -> alpha = 1, flagged).
GrowthFit growth_rate_fit(const std::vector<int>& radii, const std::vector<long long>& counts,
                          int fit_lo = 3);

}  // namespace ggt
