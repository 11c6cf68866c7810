#pragma once

#include <optional>

#include "ggt/groups/ball.hpp"
#include "ggt/hull/hull.hpp"

namespace ggt {

// Orbit H.x0 of a subgroup of F_m x Z^n acting on Tree x R^n, with x0 the
// (root vertex, 0) basepoint. Points are vertices with integer Euclidean
// parts; doubles are cached for the nearest-point scans.
class OrbitSample {
  public:
    OrbitSample(const ProdGroup& g, const std::vector<Generator>& h_gens, int radius,
                std::size_t cap = 2'000'000);

    const ProdGroup& group() const { return group_; }
    int radius() const { return radius_; }
    std::size_t size() const { return words_.size(); }
    const FreeWord& word(std::size_t i) const { return words_[i]; }
    const std::vector<long>& zvec(std::size_t i) const { return zs_[i]; }
    ProductPoint point(std::size_t i) const;
    const DistanceBall& hball() const { return hball_; }

    // Exact-in-double distance from q to the nearest orbit point.
    double nearest_distance(const ProductPoint& q) const;

  private:
    ProdGroup group_;
    int radius_;
    DistanceBall hball_;
    std::vector<FreeWord> words_;
    std::vector<std::vector<long>> zs_;
    std::vector<std::vector<double>> zd_;
    std::vector<int> lens_;
};

struct QuasiconvexityEstimate {
    double nu_hat = 0;
    std::size_t geodesics = 0;
    std::size_t samples = 0;
    std::size_t orbit_size = 0;
};

struct SampleOptions {
    int samples_per_geodesic = 32;   // endpoint grid; the midpoint is always added
    std::size_t pair_cap = 20000;    // geodesics measured per estimate
    std::size_t hull_base_cap = 48;  // orbit subset feeding conv_step
    std::size_t conv1_cap = 400;     // conv^1 subset feeding the second step
    std::size_t point_cap = 4000;    // hull points scanned
    bool parallel = true;
};

// nu with hat: max over sampled geodesics [x0, h x0] and sample parameters of
// the distance to the nearest orbit point. Growth with R signals
// non-quasiconvexity. Parallel (OpenMP) and serial variants agree exactly.
QuasiconvexityEstimate quasiconvexity_estimate(const OrbitSample& orbit,
                                               const SampleOptions& opt = {});
QuasiconvexityEstimate quasiconvexity_estimate_serial(const OrbitSample& orbit,
                                                      const SampleOptions& opt = {});

struct EuclideanPowers {
    std::vector<std::optional<long>> exponents;  // per generator: least k with (e, k z_i) in H
    std::vector<VecZ> translation_lattice;       // HNF basis of found pure translations
    int search_radius = 0;
    bool all_found = true;
};

// Ball search for pure-translation elements and per-generator exponents.
// Throws hypothesis_error naming the generators when all nontrivial tree
// parts share one axis.
EuclideanPowers euclidean_powers_in_subgroup(const ProdGroup& g, const std::vector<Elem>& h_gens,
                                             int radius);

struct OrbitHull {
    HullRegion region;
    EuclideanPowers powers;
    std::size_t orbit_size = 0;
};

// Closed-form truncated hull: spanned subtree of the orbit words crossed
// with the span of the found translations (anchor 0).
OrbitHull orbit_hull(const ProdGroup& g, const std::vector<Elem>& h_gens, int radius);

struct CocompactnessEstimate {
    double c_hat = 0;
    std::size_t hull_points = 0;
    std::size_t orbit_size = 0;
};

// c with hat: max over sampled hull points (conv^2 samples of an orbit
// subset) of the distance to the nearest orbit point.
CocompactnessEstimate cocompactness_radius(const OrbitSample& orbit,
                                           const SampleOptions& opt = {});
CocompactnessEstimate cocompactness_radius_serial(const OrbitSample& orbit,
                                                  const SampleOptions& opt = {});

// Deterministic conv^2 sample cloud of the orbit (shared by the
// cocompactness estimate and the hull-membership checks).
std::vector<ProductPoint> hull_sample_cloud(const OrbitSample& orbit, const SampleOptions& opt);

// Folded Stallings core graph for a finitely generated subgroup of F_m;
// membership is exact.
class StallingsGraph {
  public:
    explicit StallingsGraph(const std::vector<FreeWord>& generators);
    bool contains(const FreeWord& w) const;
    std::size_t states() const { return trans_.size(); }

  private:
    // trans_[state][letter + m] = target (letters -m..-1, 1..m shifted).
    std::vector<std::vector<int>> trans_;
    int m_ = 0;
    int offset(int letter) const { return letter > 0 ? m_ + letter - 1 : m_ + letter; }
};

struct VirtualProduct {
    std::vector<VecZ> a_basis;          // lattice basis of H cap ({e} x Z^n)
    std::vector<FreeWord> f_words;      // found generators of H cap (F_m x {0})
    long index_bound = 0;               // cosets of A.F met by the H-ball
    std::size_t hball_size = 0;
};

VirtualProduct virtual_product_decomposition(const ProdGroup& g, const std::vector<Elem>& h_gens,
                                             int radius);

}  // namespace ggt
