#include "optidx/routing.hpp"

#include <algorithm>
#include <array>

namespace optidx {

PathId make_path(Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("a path needs two distinct endpoints");
    return a < b ? PathId{a, b} : PathId{b, a};
}

std::vector<PathId> all_paths(Vertex n) {
    std::vector<PathId> paths;
    paths.reserve(path_count(n));
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) paths.push_back({x, y});
    }
    return paths;
}

RootedTree::RootedTree(const Tree& t)
    : tree_(&t),
      parent_(static_cast<std::size_t>(t.order()), -1),
      depth_(static_cast<std::size_t>(t.order()), 0),
      parent_edge_(static_cast<std::size_t>(t.order()), 0) {
    std::vector<Vertex> stack{0};
    parent_[0] = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : t.neighbors(v)) {
            if (parent_[w] != -1) continue;
            parent_[w] = v;
            depth_[w] = depth_[v] + 1;
            parent_edge_[w] = *t.edge_index(make_edge(v, w));
            stack.push_back(w);
        }
    }
}

Vertex RootedTree::lca(Vertex a, Vertex b) const {
    while (depth_[a] > depth_[b]) a = parent_[a];
    while (depth_[b] > depth_[a]) b = parent_[b];
    while (a != b) {
        a = parent_[a];
        b = parent_[b];
    }
    return a;
}

namespace {

void check_vertex(const Tree& t, Vertex v) {
    if (v < 0 || v >= t.order()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                                std::to_string(t.order()));
    }
}

}  // namespace

std::vector<Edge> tree_path(const RootedTree& rt, Vertex x, Vertex y) {
    check_vertex(rt.tree(), x);
    check_vertex(rt.tree(), y);
    if (x == y) throw std::invalid_argument("tree_path needs distinct endpoints");
    const Vertex top = rt.lca(x, y);
    std::vector<Edge> up;
    for (Vertex v = x; v != top; v = rt.parent(v)) up.push_back(make_edge(v, rt.parent(v)));
    std::vector<Edge> down;
    for (Vertex v = y; v != top; v = rt.parent(v)) down.push_back(make_edge(v, rt.parent(v)));
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

std::vector<Edge> tree_path(const Tree& t, Vertex x, Vertex y) {
    return tree_path(RootedTree(t), x, y);
}

bool paths_conflict(const RootedTree& rt, PathId p, PathId q) {
    for (Vertex v : {p.x, p.y, q.x, q.y}) check_vertex(rt.tree(), v);
    if (p.x == p.y || q.x == q.y) throw std::invalid_argument("degenerate path");
    // The paths meet iff the deepest pairwise LCA lies below both path tops;
    // the common part then runs between the two deepest pairwise LCAs.
    std::array<Vertex, 4> meet{rt.lca(p.x, q.x), rt.lca(p.x, q.y), rt.lca(p.y, q.x), rt.lca(p.y, q.y)};
    std::stable_sort(meet.begin(), meet.end(),
                     [&](Vertex a, Vertex b) { return rt.depth(a) > rt.depth(b); });
    const auto top = std::max(rt.depth(rt.lca(p.x, p.y)), rt.depth(rt.lca(q.x, q.y)));
    if (rt.depth(meet[0]) < top) return false;
    return meet[0] != meet[1];
}

bool paths_conflict(const Tree& t, PathId p, PathId q) {
    return paths_conflict(RootedTree(t), p, q);
}

std::int64_t brute_force_edge_load(const Tree& t, Edge e) {
    e = make_edge(e.u, e.v);
    if (!t.has_edge(e)) throw std::invalid_argument("edge " + to_string(e) + " is not in the tree");
    const RootedTree rt(t);
    const auto target = *t.edge_index(e);
    std::int64_t count = 0;
    for (Vertex x = 0; x < t.order(); ++x) {
        for (Vertex y = x + 1; y < t.order(); ++y) {
            bool hit = false;
            rt.for_each_path_edge(x, y, [&](std::size_t i) { hit = hit || i == target; });
            if (hit) ++count;
        }
    }
    return count;
}

std::size_t ConflictGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adjacency) twice += row.size();
    return twice / 2;
}

ConflictGraph conflict_graph(const Tree& t, ConflictGraphBudget budget) {
    const Vertex n = t.order();
    if (n < 2) throw DegenerateTree("conflict graph needs n >= 2");

    ConflictGraph g;
    g.paths = all_paths(n);
    g.per_edge_groups.assign(t.edges().size(), {});
    const RootedTree rt(t);
    for (std::size_t i = 0; i < g.paths.size(); ++i) {
        rt.for_each_path_edge(g.paths[i].x, g.paths[i].y,
                              [&](std::size_t e) { g.per_edge_groups[e].push_back(static_cast<std::uint32_t>(i)); });
    }
    std::size_t entries = 0;
    for (const auto& group : g.per_edge_groups) entries += group.size() * (group.size() - 1);
    if (entries > budget.max_adjacency_entries) {
        throw ConflictGraphTooLarge("conflict graph for n=" + std::to_string(n) + " needs " +
                                    std::to_string(entries) + " adjacency entries, budget is " +
                                    std::to_string(budget.max_adjacency_entries));
    }
    // Paths through a common edge form a clique; Q(R) is the union of these cliques.
    g.adjacency.assign(g.paths.size(), {});
    for (const auto& group : g.per_edge_groups) {
        for (auto p : group) {
            auto& row = g.adjacency[p];
            for (auto q : group) {
                if (q != p) row.push_back(q);
            }
        }
    }
    for (auto& row : g.adjacency) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return g;
}

}  // namespace optidx
