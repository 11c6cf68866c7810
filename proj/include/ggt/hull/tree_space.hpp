#pragma once

#include "ggt/groups/words.hpp"

namespace ggt {

// Point of the 2m-valent tree (universal cover of the m-rose, unit edges).
// Canonical form: a vertex (reduced word, no edge) or an interior edge point
// (base, letter, offset in (0,1)) with base*letter reduced, oriented so the
// base is the shortlex-smaller endpoint (the one closer to the root).
class TreePoint {
  public:
    TreePoint() = default;  // root vertex
    static TreePoint vertex(const FreeWord& w) { return TreePoint(w, 0, Rat(0)); }
    static TreePoint on_edge(const FreeWord& base, int letter, const Rat& offset);

    const FreeWord& base() const { return base_; }
    int letter() const { return letter_; }
    const Rat& offset() const { return offset_; }
    bool is_vertex() const { return letter_ == 0; }

    // Distance from the root vertex, as a rational.
    Rat depth() const { return Rat(static_cast<long>(base_.length())) + offset_; }

    bool operator==(const TreePoint& o) const = default;

    std::string str() const;

  private:
    TreePoint(FreeWord base, int letter, Rat offset)
        : base_(std::move(base)), letter_(letter), offset_(std::move(offset)) {}

    FreeWord base_;
    int letter_ = 0;  // 0 = vertex
    Rat offset_ = Rat(0);
};

// Exact tree distance.
Rat tree_distance(const TreePoint& p, const TreePoint& q);

// The point at (rational) distance s from p along the unique geodesic [p, q];
// requires 0 <= s <= d(p, q).
TreePoint tree_point_at(const TreePoint& p, const TreePoint& q, const Rat& s);

// Product Tree x R^n with the l2 product metric.
struct ProductPoint {
    TreePoint tree;
    VecQ vec;

    bool operator==(const ProductPoint& o) const = default;
    std::string str() const;
};

// Exact squared distance (the distance itself is usually irrational).
Rat product_distance2(const ProductPoint& p, const ProductPoint& q);
double product_distance(const ProductPoint& p, const ProductPoint& q);

// Geodesic [p, q]: both factors travel proportionally to arc length, so the
// point at parameter t has tree part at t*d_T along the tree leg and
// Euclidean part lerped by t. Exact for rational t.
struct GeodesicPath {
    ProductPoint from, to;
    Rat tree_length;   // d_T
    Rat euclid_len2;   // d_E^2
    double length() const;

    ProductPoint at(const Rat& t) const;  // t in [0, 1]
};

GeodesicPath product_geodesic(const ProductPoint& p, const ProductPoint& q);

std::string tree_point_key(const TreePoint& p);
std::string product_point_key(const ProductPoint& p);

}  // namespace ggt
