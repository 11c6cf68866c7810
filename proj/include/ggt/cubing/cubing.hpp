#pragma once

#include <cstdint>
#include <optional>

#include "ggt/groups/cosets.hpp"

namespace ggt {

// Fixed-width bitset over the truncated ball's vertex list.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    void set(std::size_t i) { words_[i >> 6] |= (1ull << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ull; }

    bool subset_of(const Bitset& o) const;
    bool intersects(const Bitset& o) const;
    std::size_t count() const;
    Bitset complement_within(const Bitset& universe) const;
    bool operator==(const Bitset& o) const = default;
    std::uint64_t hash() const;

  private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

// A half-space of the truncated system: a translate g A or g A^c recorded as
// a membership bitset over the ball.
struct HalfSpace {
    std::size_t translate_id = 0;  // ball id of g
    bool complement = false;
    Bitset members;                // truncated to the ball
    Bitset members_margin;         // truncated to the shrunken ball (margin - 1)
};

struct DeepComponent {
    std::vector<std::size_t> vertex_ids;  // ball ids, sorted
    int max_depth = 0;                    // max distance to the H-neighborhood
};

struct AlmostInvariantSet {
    Bitset base;                       // the chosen component A
    std::vector<DeepComponent> deep;   // all deep components, deterministic order
    std::vector<int> h_distance;       // per ball vertex: graph distance to N_0(H)
    int nu = 0;
};

// Vertex set of one deep component of (ball minus the nu-neighborhood of H);
// deterministic choice: the component containing the BFS-least deep vertex.
// Throws hypothesis_error when fewer than two deep components exist.
AlmostInvariantSet almost_invariant_set(const DistanceBall& ball, const Subgroup& h, int nu);

struct SigmaOptions {
    int translate_radius = -1;  // R1; default ball radius - margin
    int margin = -1;            // default 2 nu + 2
    std::size_t max_half_spaces = 4096;
};

// Deduplicated half-space system Sigma = {gA, gA^c} over the truncated ball.
class SigmaSystem {
  public:
    SigmaSystem(const DistanceBall& ball, const AlmostInvariantSet& a, const SigmaOptions& opt);
    // Combined system from several base sets (e.g. transverse families).
    SigmaSystem(const DistanceBall& ball, const std::vector<AlmostInvariantSet>& as,
                const SigmaOptions& opt);

    const DistanceBall& ball() const { return *ball_; }
    std::size_t size() const { return half_spaces_.size(); }
    const HalfSpace& half_space(std::size_t i) const { return half_spaces_[i]; }
    std::size_t pair_of(std::size_t i) const { return pair_[i]; }
    const Bitset& universe() const { return universe_; }
    const Bitset& margin_universe() const { return margin_universe_; }
    int margin() const { return margin_; }
    int translate_radius() const { return translate_radius_; }
    int universe_radius() const { return universe_radius_; }

  private:
    void build(const std::vector<AlmostInvariantSet>& as, const SigmaOptions& opt);
    const DistanceBall* ball_;
    std::vector<HalfSpace> half_spaces_;
    std::vector<std::size_t> pair_;
    Bitset universe_, margin_universe_;
    int margin_ = 0, translate_radius_ = 0, universe_radius_ = 0;
};

enum class Nesting { Nested, Crossing, TruncationAmbiguous };

// The four inclusions on bitsets; verdicts that flip on the shrunken ball are
// flagged ambiguous.
Nesting is_nested(const SigmaSystem& sys, std::size_t i, std::size_t j);

struct WidthEstimate {
    int width = 1;
    bool exact = true;                  // branch-and-bound completed
    std::vector<std::size_t> witness;   // pairwise-crossing half-spaces
};

WidthEstimate width_estimate(const SigmaSystem& sys, int cap = 64);

// Orientation: for each complement pair, which side is chosen (half-space id).
struct CubeVertex {
    std::vector<std::size_t> side;  // indexed by pair id
    bool operator==(const CubeVertex& o) const = default;
};

// Principal orientations V_g for ball elements; duplicates merged,
// deterministic (BFS) order.
std::vector<CubeVertex> basic_vertices(const SigmaSystem& sys);

// (V; A): flip the minimal element A; throws hypothesis_error naming a
// witness B strictly below A when A is not minimal.
CubeVertex vertex_flip(const SigmaSystem& sys, const CubeVertex& v, std::size_t half_space_id);

struct CubeComplexOptions {
    std::size_t vertex_cap = 100000;
    int dimension_cap = 8;
};

struct Cube {
    std::vector<int> corner_vertex_ids;  // 2^k corners, bit i flips pair i of the flip set
    std::vector<std::size_t> flip_set;   // the half-spaces spanning the cube
};

struct CubeComplex {
    std::vector<CubeVertex> vertices;              // flip-graph component of the basic vertices
    std::vector<std::pair<int, int>> edges;        // vertex ids differing in one pair
    std::vector<std::vector<Cube>> cubes_by_dim;   // [k] holds the k-cubes, k >= 2
    int dimension = 0;                             // max filled cube dimension (>=1 if edges)
    bool vertex_cap_hit = false;
    std::size_t basic_count = 0;

    std::optional<std::size_t> find_vertex(const CubeVertex& v) const;
};

// 1-skeleton = flip-graph component of the basic vertices; cubes filled in
// ascending dimension by the pairwise minimal/compatible criterion.
CubeComplex build_cubing(const SigmaSystem& sys, const CubeComplexOptions& opt = {});

// Components of the complex after removing all edges dual to the pair.
struct HyperplaneCut {
    int components = 0;
    std::size_t dual_edges = 0;
    bool boundary_flagged = false;  // translate within one step of the truncation edge
};
HyperplaneCut hyperplane_components(const SigmaSystem& sys, const CubeComplex& cx,
                                    std::size_t half_space_id);

struct SeparationReport {
    std::size_t checked = 0;
    std::size_t hard_violations = 0;       // disjoint neighborhoods but crossing verdict
    std::size_t ambiguous = 0;             // truncation-ambiguous verdicts skipped
};

// Disjoint translates g N_nu(H) and N_nu(H) must give nested gA, A;
// crossings there are hard violations.
SeparationReport separation_to_nestedness_check(const SigmaSystem& sys,
                                                const AlmostInvariantSet& a,
                                                const Subgroup& h, int nu);

}  // namespace ggt
