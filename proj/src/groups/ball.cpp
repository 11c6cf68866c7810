#include "ggt/groups/ball.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ggt {

void require_symmetric(const Group& g, const std::vector<Generator>& gens) {
    if (gens.empty()) throw validation_error("generating set is empty");
    std::unordered_map<std::string, int> keys;
    for (const auto& gen : gens) {
        if (is_identity(gen.g)) throw validation_error("identity in generating set");
        keys[elem_key(gen.g)] = 1;
    }
    for (const auto& gen : gens)
        if (!keys.count(elem_key(inv(g, gen.g))))
            throw validation_error("generating set is not symmetric: missing inverse of " +
                                   elem_str(gen.g));
}

std::vector<Generator> symmetrized_generators(const Group& g, const std::vector<Elem>& gens) {
    std::vector<Generator> out;
    std::unordered_map<std::string, int> seen;
    int idx = 0;
    for (const auto& e : gens) {
        if (is_identity(e)) continue;
        std::string k = elem_key(e);
        if (!seen.count(k)) {
            seen[k] = 1;
            out.push_back({e, "g" + std::to_string(idx)});
        }
        Elem ei = inv(g, e);
        std::string ki = elem_key(ei);
        if (!seen.count(ki)) {
            seen[ki] = 1;
            out.push_back({ei, "g" + std::to_string(idx) + "'"});
        }
        ++idx;
    }
    if (out.empty()) throw validation_error("generating set is empty");
    return out;
}

DistanceBall ball_bfs(const Group& g, const std::vector<Generator>& gens, int radius,
                      const BallOptions& opt, bool parallel) {
    require_symmetric(g, gens);
    if (radius < 0) throw validation_error("ball radius must be >= 0");

    DistanceBall ball;
    ball.group_ = g;
    ball.gens_ = gens;
    ball.radius_ = radius;

    Elem id = identity(g);
    ball.elems_.push_back(id);
    ball.dist_.push_back(0);
    ball.index_.emplace(elem_key(id), 0);

    std::vector<std::size_t> frontier{0};
    const std::size_t ng = gens.size();

    for (int level = 0; level < radius && !frontier.empty(); ++level) {
        const std::size_t base = ball.elems_.size();
        std::vector<Elem> cand(frontier.size() * ng);
        std::vector<std::string> cand_key(frontier.size() * ng);

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && frontier.size() > 256)
#endif
        for (std::ptrdiff_t fi = 0; fi < static_cast<std::ptrdiff_t>(frontier.size()); ++fi) {
            for (std::size_t gi = 0; gi < ng; ++gi) {
                Elem w = mul(g, ball.elems_[frontier[fi]], gens[gi].g);
                cand_key[fi * ng + gi] = elem_key(w);
                cand[fi * ng + gi] = std::move(w);
            }
        }

        // Deterministic merge: scan candidates in (frontier, generator) order.
        std::vector<std::size_t> next;
        bool capped = false;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            auto [it, fresh] = ball.index_.emplace(cand_key[i], ball.elems_.size());
            if (!fresh) continue;
            if (ball.elems_.size() >= opt.element_cap) {
                ball.index_.erase(it);
                capped = true;
                break;
            }
            ball.elems_.push_back(std::move(cand[i]));
            ball.dist_.push_back(level + 1);
            next.push_back(ball.elems_.size() - 1);
        }

        if (capped) {
            // Roll back the partial level so the ball is exact at `level`.
            for (std::size_t id2 = base; id2 < ball.elems_.size(); ++id2)
                ball.index_.erase(elem_key(ball.elems_[id2]));
            ball.elems_.resize(base);
            ball.dist_.resize(base);
            ball.truncated_ = true;
            ball.achieved_ = level;
            return ball;
        }
        frontier = std::move(next);
        ball.achieved_ = level + 1;
    }
    if (frontier.empty() && ball.achieved_ < radius) ball.achieved_ = radius;  // finite group
    return ball;
}

DistanceBall word_metric_ball(const Group& g, const std::vector<Generator>& gens, int radius,
                              const BallOptions& opt) {
    return ball_bfs(g, gens, radius, opt, opt.parallel);
}

DistanceBall word_metric_ball_serial(const Group& g, const std::vector<Generator>& gens, int radius,
                                     const BallOptions& opt) {
    return ball_bfs(g, gens, radius, opt, false);
}

std::size_t DistanceBall::count_at_distance(int d) const {
    std::size_t c = 0;
    for (int x : dist_)
        if (x == d) ++c;
    return c;
}

std::uint64_t DistanceBall::digest() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* data, std::size_t len) {
        const unsigned char* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    };
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        std::string k = elem_key(elems_[i]);
        mix(k.data(), k.size());
        mix(&dist_[i], sizeof(int));
    }
    return h;
}

}  // namespace ggt
