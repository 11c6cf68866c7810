#pragma once

#include "ggt/hull/tree_space.hpp"

namespace ggt {

struct ComparisonCheck {
    double max_violation = 0;  // d_X(p, q) - d_E2(comparison points), maximized
    std::size_t pairs = 0;
};

// CAT(0) comparison inequality on one triangle: builds the Euclidean
// comparison triangle from the side lengths and samples point pairs on the
// sides. Nonpositive (up to roundoff) in Tree x R^n.
ComparisonCheck cat0_comparison_check(const ProductPoint& a, const ProductPoint& b,
                                      const ProductPoint& c, int samples_per_side);

// Convexity of the metric along two geodesics with a common start:
// max over t of d(g1(t), g2(t)) - t d(g1(1), g2(1)).
double metric_convexity_check(const GeodesicPath& g1, const GeodesicPath& g2, int samples);

// Euclidean comparison angle at the first vertex from the three distances.
double comparison_angle(double d_ab, double d_ac, double d_bc);

// Hilbert metric of a convex polygon: ln of the boundary cross ratio.
// Vertices must be in convex position (any orientation); a1, a2 strictly
// interior.
double hilbert_distance(const std::vector<VecQ>& polygon, const VecQ& a1, const VecQ& a2);

}  // namespace ggt
