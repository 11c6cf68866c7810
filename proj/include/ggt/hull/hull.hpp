#pragma once

#include <map>
#include <optional>

#include "ggt/exact/matrix.hpp"
#include "ggt/hull/tree_space.hpp"

namespace ggt {

// One convexification step: evenly parametrized samples along all pairwise
// geodesics. Exact points (rational parameters). The sample grid always
// contains the endpoints and the midpoint.
struct ConvStepResult {
    std::vector<ProductPoint> points;
    bool budget_exceeded = false;
};

ConvStepResult conv_step(const std::vector<ProductPoint>& points, int samples_per_pair,
                         std::size_t max_points = 500000);

// Thrown when a Caratheodory query point is outside the hull; carries an
// exact separating functional: c . s + c0 <= 0 for all s in S, c . x + c0 > 0.
struct not_in_hull_error : hypothesis_error {
    VecQ certificate_c;
    Rat certificate_c0;
    explicit not_in_hull_error(VecQ c, Rat c0)
        : hypothesis_error("point is not in the convex hull"),
          certificate_c(std::move(c)),
          certificate_c0(std::move(c0)) {}
};

struct ConvexCombination {
    std::vector<std::size_t> support;  // indices into S, at most dim+1 of them
    std::vector<Rat> weights;          // positive, sum to 1
};

// Exact convex decomposition of x over S with at most n+1 support points.
// Subset enumeration (lexicographic-first) for small S, exact rational
// phase-1 simplex with Bland's rule beyond.
ConvexCombination caratheodory_decompose(const VecQ& x, const std::vector<VecQ>& s,
                                         std::size_t enumeration_cap = 12);

// Depth-bounded convex-combination certificate: a binary tree whose leaves
// are points of S and whose internal nodes mix left and right with rational
// parameter t: value = (1 - t) * left + t * right.
struct BrunnWitness {
    struct Node {
        bool leaf = false;
        VecQ point;           // leaves
        int left = -1, right = -1;
        Rat t;                // internal
    };
    std::vector<Node> nodes;
    int root = -1;
    int depth = 0;

    VecQ evaluate() const;  // exact
};

BrunnWitness brunn_witness(const VecQ& x, const std::vector<VecQ>& s);

// Closed-form hull description: a subtree (edges with covered fractions)
// crossed with an affine subspace anchor + span(V).
struct HullRegion {
    // Edge (base word, outward letter) -> covered fraction in (0, 1].
    std::map<std::pair<std::string, int>, Rat> edges;
    std::vector<std::string> vertices;  // reduced words in the subtree
    std::vector<VecQ> v_basis;          // rows spanning V
    VecQ anchor;

    bool contains_tree(const TreePoint& p) const;
};

bool hull_membership(const ProductPoint& p, const HullRegion& region);

}  // namespace ggt
