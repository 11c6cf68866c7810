#pragma once

#include <unordered_set>

#include "ggt/groups/ball.hpp"

namespace ggt {

// Left-coset machinery over a truncated ball. Exact schemes exist where the
// family has a clean normal-form coset test; everything else falls back to a
// bounded search with explicit certificates.
enum class CosetScheme {
    PolyT,            // H = <t^g> inside P_{n,phi}; key = (z, k mod g)
    PolyFullLattice,  // H = Z^n inside P_{n,phi}; key = k
    Lattice,          // H a sublattice of Z^n (possibly trivial); key = residue
    Generic           // bounded membership search
};

struct Subgroup {
    std::vector<Elem> raw_gens;          // as given (identity entries dropped)
    std::vector<Generator> gens;         // symmetrized
    CosetScheme scheme = CosetScheme::Generic;
    long t_modulus = 1;                  // PolyT: subgroup is <t^modulus>
    std::vector<VecZ> lattice;           // Lattice: HNF basis rows
    bool trivial = false;                // no generators
};

Subgroup resolve_subgroup(const Group& g, const std::vector<Elem>& gens);

struct CosetOptions {
    int certificate_factor = 2;     // generic membership searched to factor * R
    std::size_t h_ball_cap = 200'000;
    long escape_buffer = 40;        // orbit-scan escape streak (PolyT)
    bool parallel = true;
};

struct CosetDistance {
    int value;   // exact distance, certified lower bound, or best-effort bound
    bool exact;  // true: value is d(aH, bH); false: d >= value (exact schemes)
                 // or value is an upper bound from a bounded search (Generic)
};

class CosetIndex {
  public:
    CosetIndex(const DistanceBall& ball, Subgroup sub, CosetOptions opt = {});

    const DistanceBall& ball() const { return *ball_; }
    const Subgroup& subgroup() const { return sub_; }
    const CosetOptions& options() const { return opt_; }

    // One representative per coset meeting the ball, in BFS order.
    const std::vector<std::size_t>& rep_ids() const { return rep_ids_; }
    const std::vector<bool>& rep_confirmed() const { return rep_confirmed_; }
    int certificate_bound() const { return certificate_bound_; }

    // d(aH, bH) for two ball elements.
    CosetDistance coset_distance(std::size_t id_a, std::size_t id_b) const;
    // d(H, gH).
    CosetDistance distance_from_base(std::size_t id) const;

    // Pairs (i, j) of rep indices with certified d < r. For exact schemes the
    // edge set is exact; for Generic, pairs lacking a bounded-search witness
    // are counted in *unwitnessed_pairs.
    std::vector<std::pair<int, int>> proximity_edges(double r, std::size_t* unwitnessed_pairs) const;

  private:
    const DistanceBall* ball_;
    Subgroup sub_;
    CosetOptions opt_;

    std::vector<std::size_t> rep_ids_;
    std::vector<bool> rep_confirmed_;
    int certificate_bound_ = 0;

    // PolyT: min ball distance per (z, k mod g); PolyFullLattice: per k;
    // Lattice: per residue.
    std::unordered_map<std::string, int> class_min_;
    std::unordered_map<std::string, std::size_t> rep_of_key_;
    std::vector<long> box_;  // per-coordinate max |z| over the ball (poly schemes)

    // Generic: subgroup element keys within the certificate ball.
    std::unordered_set<std::string> h_keys_;
    bool h_ball_truncated_ = false;

    std::string coset_key(const Elem& e) const;
    CosetDistance poly_t_distance(const std::vector<long>& u, long kappa) const;
    friend struct CosetIndexTestHook;
};

// Canonical residue of v modulo the lattice with the given HNF basis rows.
std::vector<long> lattice_residue(const std::vector<VecZ>& hnf_basis, const std::vector<long>& v);

}  // namespace ggt
