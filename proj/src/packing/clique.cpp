#include "ggt/packing/clique.hpp"

#include <algorithm>

namespace ggt {

void Graph::add_edge(int a, int b) {
    if (a == b) return;
    adj[a].push_back(b);
    adj[b].push_back(a);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    for (auto& lst : g.adj) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    return g;
}

namespace {

bool adjacent(const Graph& g, int a, int b) {
    const auto& lst = g.adj[a];
    return std::binary_search(lst.begin(), lst.end(), b);
}

// Greedy colouring upper bound; candidates ordered for the branch.
int colour_bound(const Graph& g, const std::vector<int>& cand, std::vector<int>& order,
                 std::vector<int>& colour_of) {
    order.clear();
    colour_of.clear();
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
        bool placed = false;
        for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
            bool fits = true;
            for (int u : classes[c])
                if (adjacent(g, u, v)) {
                    fits = false;
                    break;
                }
            if (fits) {
                classes[c].push_back(v);
                placed = true;
            }
        }
        if (!placed) classes.push_back({v});
    }
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) {
            order.push_back(v);
            colour_of.push_back(static_cast<int>(c) + 1);
        }
    return static_cast<int>(classes.size());
}

void expand(const Graph& g, std::vector<int>& current, std::vector<int>& cand,
            std::vector<int>& best) {
    std::vector<int> order, colour_of;
    colour_bound(g, cand, order, colour_of);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        if (current.size() + colour_of[i] <= best.size()) return;
        int v = order[i];
        current.push_back(v);
        std::vector<int> next;
        for (int j = 0; j < i; ++j)
            if (adjacent(g, order[j], v)) next.push_back(order[j]);
        if (current.size() + next.size() > best.size()) {
            if (next.empty()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(g, current, next, best);
            }
        }
        current.pop_back();
    }
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, verts;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int u : g.adj[v])
                if (comp[u] < 0) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

Graph induced(const Graph& g, const std::vector<int>& verts, std::vector<int>& back) {
    back = verts;
    std::vector<int> local(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(verts.size()));
    for (int v : verts)
        for (int u : g.adj[v])
            if (u > v && local[u] >= 0) h.add_edge(local[v], local[u]);
    for (auto& lst : h.adj) std::sort(lst.begin(), lst.end());
    return h;
}

}  // namespace

CliqueResult max_clique_exact(const Graph& g) {
    std::vector<int> cand(g.n);
    for (int i = 0; i < g.n; ++i) cand[i] = i;
    // Degeneracy-ish order: descending degree, stable.
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
        return g.adj[a].size() > g.adj[b].size();
    });
    std::vector<int> current, best;
    expand(g, current, cand, best);
    std::sort(best.begin(), best.end());
    return {best, true};
}

CliqueResult max_clique_greedy(const Graph& g) {
    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.adj[a].size() > g.adj[b].size();
    });
    std::vector<int> best;
    for (int seed : order) {
        std::vector<int> clique{seed};
        for (int v : order) {
            if (v == seed) continue;
            bool ok = true;
            for (int u : clique)
                if (!adjacent(g, u, v)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        if (clique.size() > best.size()) best = clique;
    }
    // 3-swap improvement: try removing one vertex and adding two.
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t drop = 0; drop < best.size() && !improved; ++drop) {
            std::vector<int> base;
            for (std::size_t i = 0; i < best.size(); ++i)
                if (i != drop) base.push_back(best[i]);
            std::vector<int> ext;
            for (int v = 0; v < g.n; ++v) {
                if (std::find(base.begin(), base.end(), v) != base.end()) continue;
                bool ok = true;
                for (int u : base)
                    if (!adjacent(g, u, v)) {
                        ok = false;
                        break;
                    }
                if (ok) ext.push_back(v);
            }
            for (std::size_t i = 0; i < ext.size() && !improved; ++i)
                for (std::size_t j = i + 1; j < ext.size() && !improved; ++j)
                    if (adjacent(g, ext[i], ext[j])) {
                        base.push_back(ext[i]);
                        base.push_back(ext[j]);
                        best = base;
                        improved = true;
                    }
        }
    }
    std::sort(best.begin(), best.end());
    return {best, false};
}

CliqueResult max_clique(const Graph& g, int exact_cap) {
    if (g.n == 0) return {{}, true};
    CliqueResult best{{}, true};
    for (const auto& comp : components(g)) {
        std::vector<int> back;
        Graph h = induced(g, comp, back);
        CliqueResult r =
            h.n <= exact_cap ? max_clique_exact(h) : max_clique_greedy(h);
        if (!r.exact) best.exact = false;
        if (r.vertices.size() > best.vertices.size()) {
            best.vertices.clear();
            for (int v : r.vertices) best.vertices.push_back(back[v]);
            std::sort(best.vertices.begin(), best.vertices.end());
        }
    }
    return best;
}

}  // namespace ggt
