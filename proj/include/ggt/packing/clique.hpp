#pragma once

#include <cstddef>
#include <vector>

#include "ggt/base.hpp"

namespace ggt {

// Undirected graph on vertices 0..n-1, adjacency by sorted edge list.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit Graph(int n_ = 0) : n(n_), adj(n_) {}
    void add_edge(int a, int b);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

struct CliqueResult {
    std::vector<int> vertices;  // one maximum (or best-found) clique
    bool exact;                 // true iff proven maximum
};

// Exact branch and bound with greedy colouring bounds. Intended for graphs
// (or components) up to the configured vertex cap.
CliqueResult max_clique_exact(const Graph& g);

// Greedy seed plus 3-swap local improvement; lower bound only.
CliqueResult max_clique_greedy(const Graph& g);

// Per-component dispatch: exact branch and bound on components of size at
// most exact_cap, greedy beyond. `exact` is true iff every component was
// solved exactly.
CliqueResult max_clique(const Graph& g, int exact_cap = 25);

}  // namespace ggt
