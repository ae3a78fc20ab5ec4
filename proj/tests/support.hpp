#pragma once

// Reference implementations used only by tests. They deliberately avoid the
// library's rooted-tree and per-edge machinery so they can serve as oracles.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "optidx/coloring.hpp"
#include "optidx/tree.hpp"

namespace optidx::testing {

/// Edges of the x-y path, found by BFS from x.
inline std::set<Edge> naive_path_edges(const Tree& t, Vertex x, Vertex y) {
    std::vector<Vertex> parent(static_cast<std::size_t>(t.order()), -1);
    std::vector<Vertex> queue{x};
    parent[x] = x;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : t.neighbors(queue[head])) {
            if (parent[w] < 0) {
                parent[w] = queue[head];
                queue.push_back(w);
            }
        }
    }
    std::set<Edge> out;
    for (Vertex v = y; v != x; v = parent[v]) out.insert(make_edge(v, parent[v]));
    return out;
}

inline bool naive_share_edge(const std::set<Edge>& a, const std::set<Edge>& b) {
    return std::any_of(a.begin(), a.end(), [&](const Edge& e) { return b.count(e) > 0; });
}

/// Load of every edge by counting the pairs whose BFS path contains it.
inline std::vector<std::int64_t> naive_loads(const Tree& t) {
    std::vector<std::int64_t> loads(t.edges().size(), 0);
    for (Vertex x = 0; x < t.order(); ++x) {
        for (Vertex y = x + 1; y < t.order(); ++y) {
            for (const Edge& e : naive_path_edges(t, x, y)) ++loads[*t.edge_index(e)];
        }
    }
    return loads;
}

/// Pairwise check: every two same-colored paths must be edge-disjoint.
inline bool naive_proper(const Tree& t, const PathColoring& c) {
    struct Item {
        Color color;
        std::set<Edge> edges;
    };
    std::vector<Item> items;
    for (Vertex x = 0; x < t.order(); ++x) {
        for (Vertex y = x + 1; y < t.order(); ++y) {
            if (c.color(x, y) == kUncolored) return false;
            items.push_back({c.color(x, y), naive_path_edges(t, x, y)});
        }
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            if (items[i].color == items[j].color && naive_share_edge(items[i].edges, items[j].edges)) return false;
        }
    }
    return true;
}

/// Chromatic number of the conflict graph by plain backtracking (tiny n only).
inline int naive_chromatic(const Tree& t) {
    std::vector<std::set<Edge>> paths;
    for (Vertex x = 0; x < t.order(); ++x) {
        for (Vertex y = x + 1; y < t.order(); ++y) paths.push_back(naive_path_edges(t, x, y));
    }
    const auto m = paths.size();
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) adj[i][j] = adj[j][i] = naive_share_edge(paths[i], paths[j]);
    }
    std::vector<int> color(m, -1);
    for (int k = 1;; ++k) {
        // A path may open at most one new color beyond those already used.
        auto place = [&](auto&& self, std::size_t i, int used) -> bool {
            if (i == m) return true;
            for (int c = 0; c < std::min(k, used + 1); ++c) {
                bool ok = true;
                for (std::size_t j = 0; j < i && ok; ++j) ok = !(adj[i][j] && color[j] == c);
                if (!ok) continue;
                color[i] = c;
                if (self(self, i + 1, std::max(used, c + 1))) return true;
            }
            color[i] = -1;
            return false;
        };
        if (m == 0 || place(place, 0, 0)) return m == 0 ? 0 : k;
    }
}

/// Root 0 joined to the first vertex of one random subtree per entry of sizes.
inline Tree rooted_branches(const std::vector<int>& sizes, std::uint64_t seed) {
    std::vector<Edge> edges;
    Vertex next = 1;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const Tree branch = random_tree(sizes[i], seed * 1'000'003 + i);
        edges.push_back(make_edge(0, next));
        for (Edge e : branch.edges()) edges.push_back(make_edge(next + e.u, next + e.v));
        next += sizes[i];
    }
    return Tree(next, std::move(edges));
}

/// Root 0 joined to one path per entry of sizes (attached at a path end).
inline Tree rooted_paths(const std::vector<int>& sizes) {
    std::vector<Edge> edges;
    Vertex next = 1;
    for (int size : sizes) {
        edges.push_back(make_edge(0, next));
        for (int j = 1; j < size; ++j) edges.push_back(make_edge(next + j - 1, next + j));
        next += size;
    }
    return Tree(next, std::move(edges));
}

/// Prüfer sequence of a labeled tree (n >= 2) by repeated smallest-leaf removal.
inline std::vector<Vertex> pruefer_encode(const Tree& t) {
    const Vertex n = t.order();
    std::vector<int> degree(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) degree[v] = static_cast<int>(t.degree(v));
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    std::vector<Vertex> seq;
    for (int step = 0; step < n - 2; ++step) {
        Vertex leaf = 0;
        while (gone[leaf] || degree[leaf] != 1) ++leaf;
        for (Vertex w : t.neighbors(leaf)) {
            if (!gone[w]) {
                seq.push_back(w);
                --degree[w];
            }
        }
        gone[leaf] = true;
    }
    return seq;
}

}  // namespace optidx::testing
