#pragma once

#include "ggt/dynamics.hpp"
#include "ggt/groups/ball.hpp"

namespace ggt {

// Point of Sol = R^2 x R with left-invariant metric e^{2z}dx^2 + e^{-2z}dy^2 + dz^2.
struct SolPoint {
    double x = 0, y = 0, z = 0;
};

// max(2 log|dx|, 2 log|dy|, 0) for two points in the z = 0 plane; the bound
// is vacuous (clamped to 0) below separation 1.
double sol_lower_bound(const SolPoint& a, const SolPoint& b);

struct SolPathResult {
    double length = 0;        // length of a feasible path: an upper bound on d_S
    bool converged = true;
    std::vector<SolPoint> path;
};

// Coordinate-descent over a discretized path. Segment costs use the
// pessimistic endpoint metric (max of e^{2z} over the segment), so the
// reported value dominates the true length of the polyline and hence d_S.
SolPathResult sol_distance_upper(const SolPoint& a, const SolPoint& b, int segments = 24,
                                 int max_sweeps = 60);

struct SolEmbedding {
    double f[4];        // 2x2 row-major: sends v_- to e1 and v_+ to e2
    double lambda;      // the expanding eigenvalue, > 1
    double log_lambda;
    double v_minus[2], v_plus[2];
};

// Requires phi in GL_2(Z) with det +1 and eigenvalues 0 < 1/lambda < 1 < lambda.
SolEmbedding sol_embedding(const IntAutomorphism& phi);

// psi(e1^k e2^l t^q) = (f(k, l), q log lambda).
SolPoint sol_embed(long k, long l, long q, const SolEmbedding& emb);

struct DistortionReport {
    int samples = 0;
    int eq_sqrt2_violations = 0;    // d_R2 <= sqrt(2) max(|dx|, |dy|)
    int eq_log_violations = 0;      // log d_R2 <= max(log|dx|, log|dy|) + log sqrt(2)
    int sol_chain_violations = 0;   // 2 log d_R2 - log 2 <= sol_lower_bound
    int upper_below_strong_form = 0;  // pairs with path upper < 2 log d + log 2
    double fitted_c = 0, fitted_a = 0;   // word metric vs C log d_Z2 + A
    int fit_pairs = 0;
    double max_ratio_upper_lower = 0;
};

// Samples lattice pairs, validates the inequality chain, and regresses the
// P_{2,phi} word metric against C log d_Z2 + A using the supplied ball.
DistortionReport distortion_check(const IntAutomorphism& phi, int samples, std::uint64_t seed,
                                  const DistanceBall* poly_ball);

}  // namespace ggt
