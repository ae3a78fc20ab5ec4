#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "optidx/tree.hpp"

namespace optidx {

/// The unique tree path between two distinct vertices, min endpoint first.
struct PathId {
    Vertex x = 0;
    Vertex y = 0;

    friend auto operator<=>(const PathId&, const PathId&) = default;
};

/// Normalizes {a, b}; throws std::invalid_argument when a == b.
PathId make_path(Vertex a, Vertex b);

constexpr std::size_t path_count(Vertex n) noexcept {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Position of p in the lexicographic order of all pairs over 0..n-1.
constexpr std::size_t path_index(Vertex n, PathId p) noexcept {
    const auto x = static_cast<std::size_t>(p.x);
    const auto nn = static_cast<std::size_t>(n);
    return x * (2 * nn - x - 1) / 2 + static_cast<std::size_t>(p.y - p.x - 1);
}

/// All pairs over 0..n-1 in lexicographic order.
std::vector<PathId> all_paths(Vertex n);

/// Tree rooted at vertex 0 with parent pointers and depths for LCA queries.
class RootedTree {
public:
    explicit RootedTree(const Tree& t);

    const Tree& tree() const noexcept { return *tree_; }
    Vertex parent(Vertex v) const { return parent_[v]; }
    std::int32_t depth(Vertex v) const { return depth_[v]; }
    /// Index into Tree::edges() of {v, parent(v)}; v must not be the root.
    std::size_t parent_edge(Vertex v) const { return parent_edge_[v]; }

    Vertex lca(Vertex a, Vertex b) const;
    std::int32_t distance(Vertex a, Vertex b) const {
        return depth_[a] + depth_[b] - 2 * depth_[lca(a, b)];
    }

    /// Calls visit(edge_index) for every edge of the a-b path, in no fixed order.
    template <class Visit>
    void for_each_path_edge(Vertex a, Vertex b, Visit&& visit) const {
        while (depth_[a] > depth_[b]) {
            visit(parent_edge_[a]);
            a = parent_[a];
        }
        while (depth_[b] > depth_[a]) {
            visit(parent_edge_[b]);
            b = parent_[b];
        }
        while (a != b) {
            visit(parent_edge_[a]);
            visit(parent_edge_[b]);
            a = parent_[a];
            b = parent_[b];
        }
    }

private:
    const Tree* tree_;
    std::vector<Vertex> parent_;
    std::vector<std::int32_t> depth_;
    std::vector<std::size_t> parent_edge_;
};

/// Edge sequence of the x-y path, starting at x.
std::vector<Edge> tree_path(const Tree& t, Vertex x, Vertex y);
std::vector<Edge> tree_path(const RootedTree& rt, Vertex x, Vertex y);

/// True iff the two paths share at least one tree edge.
bool paths_conflict(const Tree& t, PathId p, PathId q);
bool paths_conflict(const RootedTree& rt, PathId p, PathId q);

/// Number of vertex pairs whose path uses e, by enumerating every pair.
std::int64_t brute_force_edge_load(const Tree& t, Edge e);

class ConflictGraphTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

struct ConflictGraphBudget {
    /// Upper bound on sum over edges of load*(load-1), i.e. adjacency entries
    /// before deduplication.
    std::size_t max_adjacency_entries = 40'000'000;
};

/// Conflict graph Q(R) of the all-to-all routing.
struct ConflictGraph {
    std::vector<PathId> paths;                                 // lexicographic
    std::vector<std::vector<std::uint32_t>> adjacency;         // sorted, per path
    std::vector<std::vector<std::uint32_t>> per_edge_groups;   // per Tree::edges()

    std::size_t edge_count() const;
};

ConflictGraph conflict_graph(const Tree& t, ConflictGraphBudget budget = {});

}  // namespace optidx
