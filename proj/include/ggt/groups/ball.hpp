#pragma once

#include <optional>
#include <string>
#include <unordered_map>

#include "ggt/groups/groups.hpp"

namespace ggt {

struct BallOptions {
    std::size_t element_cap = 10'000'000;
    bool parallel = true;  // level-parallel expansion with deterministic merge
};

// Exact word-metric ball of radius R: every element at distance <= R with its
// distance, in deterministic BFS order (frontier expanded in generator-list
// order). Immutable once built.
class DistanceBall {
  public:
    const Group& group() const { return group_; }
    const std::vector<Generator>& generators() const { return gens_; }
    int radius() const { return radius_; }
    int achieved_radius() const { return achieved_; }
    bool truncated() const { return truncated_; }

    std::size_t size() const { return elems_.size(); }
    const Elem& element(std::size_t id) const { return elems_[id]; }
    int distance(std::size_t id) const { return dist_[id]; }

    std::optional<std::size_t> find(const Elem& e) const {
        auto it = index_.find(elem_key(e));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<int> distance_of(const Elem& e) const {
        auto id = find(e);
        if (!id) return std::nullopt;
        return dist_[*id];
    }

    std::size_t count_at_distance(int d) const;

    // Order- and content-sensitive digest; equal balls hash equal.
    std::uint64_t digest() const;

    friend DistanceBall ball_bfs(const Group&, const std::vector<Generator>&, int,
                                 const BallOptions&, bool);

  private:
    Group group_{ZnGroup{1}};
    std::vector<Generator> gens_;
    int radius_ = 0;
    int achieved_ = 0;
    bool truncated_ = false;
    std::vector<Elem> elems_;
    std::vector<int> dist_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Throws validation_error unless the generator list is symmetric (closed
// under inverses) and identity-free.
void require_symmetric(const Group& g, const std::vector<Generator>& gens);

// Parallel (OpenMP) construction; falls back to serial without OpenMP.
DistanceBall word_metric_ball(const Group& g, const std::vector<Generator>& gens, int radius,
                              const BallOptions& opt = {});
// Serial reference implementation; byte-identical output to the parallel one.
DistanceBall word_metric_ball_serial(const Group& g, const std::vector<Generator>& gens, int radius,
                                     const BallOptions& opt = {});

inline DistanceBall word_metric_ball(const Group& g, int radius, const BallOptions& opt = {}) {
    return word_metric_ball(g, default_generators(g), radius, opt);
}

// Wraps plain elements as generators, appending missing inverses, labelled
// g0, g0', g1, ...
std::vector<Generator> symmetrized_generators(const Group& g, const std::vector<Elem>& gens);

}  // namespace ggt
