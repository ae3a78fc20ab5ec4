#include "optidx/wavelength.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "optidx/oracle.hpp"

namespace optidx {

std::string_view to_string(ColoringCase c) {
    switch (c) {
        case ColoringCase::Direct: return "direct";
        case ColoringCase::Balanced: return "balanced";
        case ColoringCase::Degree3: return "degree3";
        case ColoringCase::Degree4Move: return "degree4-move";
        case ColoringCase::Degree4Pairs: return "degree4-pairs";
        case ColoringCase::Degree4Merged: return "degree4-merged";
        case ColoringCase::HighDegreeMove: return "high-degree-move";
        case ColoringCase::EqualEven: return "equal-even";
        case ColoringCase::EqualOdd: return "equal-odd";
        case ColoringCase::LeafRemovalOne: return "leaf-removal-1";
        case ColoringCase::LeafRemovalTwo: return "leaf-removal-2";
        case ColoringCase::LeafRemovalOdd: return "leaf-removal-odd";
        case ColoringCase::LeafRemovalEven: return "leaf-removal-even";
    }
    return "?";
}

namespace {

// Vertices reachable from `start` without entering `blocked`; sorted.
std::vector<Vertex> component_avoiding(const Tree& t, Vertex start, Vertex blocked) {
    std::vector<bool> seen(static_cast<std::size_t>(t.order()), false);
    seen[start] = true;
    if (blocked >= 0) seen[blocked] = true;
    std::vector<Vertex> out{start};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (Vertex w : t.neighbors(out[head])) {
            if (!seen[w]) {
                seen[w] = true;
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Tree induced on a vertex subset (plus optional extra edges), relabeled
/// by position in the sorted subset.
struct LocalTree {
    Tree tree;
    std::vector<Vertex> to_parent;
};

LocalTree extract(const Tree& t, std::vector<Vertex> vertices, std::span<const Edge> extra = {}) {
    std::sort(vertices.begin(), vertices.end());
    std::vector<Vertex> local(static_cast<std::size_t>(t.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (Edge e : t.edges()) {
        if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back(make_edge(local[e.u], local[e.v]));
    }
    for (Edge e : extra) edges.push_back(make_edge(local.at(e.u), local.at(e.v)));
    Tree sub(static_cast<Vertex>(vertices.size()), std::move(edges));
    return {std::move(sub), std::move(vertices)};
}

std::vector<Vertex> with_vertex(std::vector<Vertex> vs, Vertex extra) {
    vs.insert(std::lower_bound(vs.begin(), vs.end(), extra), extra);
    return vs;
}

std::vector<Vertex> without_vertex(std::vector<Vertex> vs, Vertex gone) {
    vs.erase(std::remove(vs.begin(), vs.end(), gone), vs.end());
    return vs;
}

std::vector<Vertex> merged(const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
    std::vector<Vertex> out;
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

void certify(const Tree& t, const PathColoring& c) {
    if (t.order() < 2) return;
    const auto pi = forwarding_index(t);
    const auto used = static_cast<std::int64_t>(c.colors_used());
    if (!c.total() || used < pi || 2 * used >= 3 * pi) {
        throw BoundViolation("coloring of a " + std::to_string(t.order()) + "-vertex tree uses " +
                             std::to_string(used) + " colors with pi=" + std::to_string(pi) +
                             (c.total() ? "" : " (incomplete)"));
    }
}

/// Collects the output coloring block by block.
class Assembler {
public:
    explicit Assembler(Vertex n) : out_(n) {}

    int block(std::string label, std::int64_t width) {
        return ledger_.allocate(std::move(label), static_cast<int>(width));
    }

    void paint(Vertex x, Vertex y, Color c) {
        if (out_.color(x, y) != kUncolored) {
            throw std::logic_error("pair {" + std::to_string(x) + "," + std::to_string(y) +
                                   "} assigned by two classes");
        }
        out_.set(x, y, c);
    }

    /// Copies a sub-coloring shifted by `offset`, except pairs rejected by keep.
    void embed(const LocalTree& sub, const PathColoring& c, int offset,
               const std::function<bool(Vertex, Vertex)>& keep = {}) {
        const auto& map = sub.to_parent;
        for (Vertex x = 0; x < sub.tree.order(); ++x) {
            for (Vertex y = x + 1; y < sub.tree.order(); ++y) {
                if (keep && !keep(map[x], map[y])) continue;
                paint(map[x], map[y], offset + c.color(x, y));
            }
        }
    }

    /// Colors one endpoint against a list of targets with offset, offset+1, ...
    void fan(Vertex from, std::span<const Vertex> targets, int offset) {
        for (std::size_t j = 0; j < targets.size(); ++j) paint(from, targets[j], offset + static_cast<Color>(j));
    }

    /// All |X|*|Y| pairs get distinct colors.
    void cross(std::span<const Vertex> xs, std::span<const Vertex> ys, int offset) {
        Color next = offset;
        for (Vertex x : xs) {
            for (Vertex y : ys) paint(x, y, next++);
        }
    }

    PathColoring finish() {
        if (!out_.total()) throw std::logic_error("construction left a pair uncolored");
        out_.compact();
        return std::move(out_);
    }

private:
    PathColoring out_;
    PaletteLedger ledger_;
};

PathColoring color_tree(const Tree& t);

struct Recursed {
    LocalTree local;
    PathColoring coloring;
    std::int64_t width;
};

Recursed recurse(const Tree& t, std::vector<Vertex> vertices, std::span<const Edge> extra = {}) {
    auto local = extract(t, std::move(vertices), extra);
    auto coloring = color_tree(local.tree);
    const auto width = static_cast<std::int64_t>(coloring.colors_used());
    return {std::move(local), std::move(coloring), width};
}

PathColoring color_direct(const Tree& t) {
    PathColoring out(t.order());
    if (t.order() == 2) {
        out.set(0, 1, 0);
    } else if (t.order() == 3) {
        const Vertex center = t.degree(0) == 2 ? 0 : (t.degree(1) == 2 ? 1 : 2);
        std::vector<Vertex> leaves;
        for (Vertex v = 0; v < 3; ++v) {
            if (v != center) leaves.push_back(v);
        }
        out.set(center, leaves[0], 0);
        out.set(center, leaves[1], 0);
        out.set(leaves[0], leaves[1], 1);
    }
    return out;
}

PathColoring color_tree(const Tree& t) {
    if (t.order() <= 3) return color_direct(t);
    return color_with_split(t, split_structure(t));
}

/// Paths from the root: class j takes the j-th vertex of every branch.
void paint_rooted(Assembler& out, const SplitStructure& s) {
    const int offset = out.block("rooted", s.branch_sizes.front());
    for (const auto& branch : s.branches) {
        for (std::size_t j = 0; j < branch.size(); ++j) out.paint(s.root, branch[j], offset + static_cast<Color>(j));
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

bool all_equal(const std::vector<std::int64_t>& xs) {
    return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end();
}

PathColoring color_after_move(const Tree& t, const SplitStructure& s, Vertex s_keep, Vertex s_move) {
    const Tree moved = move_branch(t, s.root, s_keep, s_move);
    const auto moved_split = split_at(moved, s.root, s.attach_points.front());
    if (moved_split.a * moved_split.b != forwarding_index(moved)) {
        throw std::logic_error("heaviest edge lost its maximality after moving a branch");
    }
    const auto sub = color_with_split(moved, moved_split);
    auto pulled = move_branch_and_exchange(t, s.root, s_keep, s_move, sub);
    // The exchange alone can leave a path from B_keep to B_move sharing a
    // color with a path through {r, s_keep}; repair those.
    resolve_conflicts(t, pulled);
    return pulled;
}

PathColoring color_equal_branches(const Tree& t, const SplitStructure& s) {
    const int d = s.degree();
    const auto b = s.branch_sizes.front();
    Assembler out(t.order());
    std::vector<Recursed> inner;
    inner.reserve(static_cast<std::size_t>(d));
    for (const auto& branch : s.branches) inner.push_back(recurse(t, with_vertex(branch, s.root)));

    if (d % 2 == 0) {
        std::int64_t width = 0;
        for (const auto& r : inner) width = std::max(width, r.width);
        const int offset = out.block("branch+root", width);
        for (const auto& r : inner) out.embed(r.local, r.coloring, offset);
        const auto factorization = kd_edge_coloring(d);
        for (int c = 0; c < factorization.classes; ++c) {
            const int block = out.block("matching " + std::to_string(c), b * b);
            for (auto [i, j] : factorization.class_edges[c]) out.cross(s.branches[i], s.branches[j], block);
        }
    } else {
        const auto total = kd_total_coloring(d);
        for (int c = 0; c < total.classes; ++c) {
            const int block = out.block("total class " + std::to_string(c), std::max(b * b, inner[c].width));
            out.embed(inner[c].local, inner[c].coloring, block);
            for (auto [i, j] : total.class_edges[c]) out.cross(s.branches[i], s.branches[j], block);
        }
    }
    return out.finish();
}

}  // namespace

SplitStructure split_at(const Tree& t, Vertex root, Vertex b_attach) {
    require(t.has_edge(make_edge(root, b_attach)), "split_at needs an edge {root, b_attach}");
    SplitStructure s;
    s.hat_edge = make_edge(root, b_attach);
    s.root = root;
    s.side_b = component_avoiding(t, b_attach, root);
    s.b = static_cast<std::int64_t>(s.side_b.size());
    s.a = t.order() - s.b;
    std::vector<bool> in_b(static_cast<std::size_t>(t.order()), false);
    for (Vertex v : s.side_b) in_b[v] = true;
    for (Vertex v = 0; v < t.order(); ++v) {
        if (!in_b[v]) s.side_a.push_back(v);
    }

    std::vector<std::vector<Vertex>> others;
    for (Vertex nb : t.neighbors(root)) {
        if (nb != b_attach) others.push_back(component_avoiding(t, nb, root));
    }
    // Components of T - root; neighbor order equals the attach point order.
    std::vector<Vertex> attach;
    for (Vertex nb : t.neighbors(root)) {
        if (nb != b_attach) attach.push_back(nb);
    }
    std::vector<std::size_t> order(others.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](auto x, auto y) { return others[x].size() > others[y].size(); });
    s.branches.push_back(s.side_b);
    s.attach_points.push_back(b_attach);
    for (auto i : order) {
        s.branches.push_back(std::move(others[i]));
        s.attach_points.push_back(attach[i]);
    }
    for (const auto& branch : s.branches) s.branch_sizes.push_back(static_cast<std::int64_t>(branch.size()));
    return s;
}

SplitStructure split_structure(const Tree& t) {
    const auto profile = edge_load_profile(t);
    const Edge e = profile.argmax_edge;
    const auto side_v = static_cast<std::int64_t>(component_avoiding(t, e.v, e.u).size());
    const auto side_u = t.order() - side_v;
    // Root sits on the larger side; on a tie, at the smaller endpoint.
    if (side_u >= side_v) return split_at(t, e.u, e.v);
    return split_at(t, e.v, e.u);
}

ColoringCase classify(const Tree& t, const SplitStructure& s) {
    const int d = s.degree();
    // Degree 2 survives only when {r, s_2} ties with the heaviest edge
    // (a = b + 1, so b <= 2: the path on five vertices).
    if (s.balanced() || (d == 2 && s.a == s.b + 1)) return ColoringCase::Balanced;
    const auto& bs = s.branch_sizes;
    if (d == 3) return ColoringCase::Degree3;
    if (d == 4) {
        if (bs[0] >= bs[2] + bs[3]) return ColoringCase::Degree4Move;
        if (bs[0] * bs[3] >= bs[1] * bs[2] || bs[0] <= 4 * bs[3]) return ColoringCase::Degree4Pairs;
        return ColoringCase::Degree4Merged;
    }
    if (d >= 5) {
        if (bs[0] >= bs[d - 2] + bs[d - 1]) return ColoringCase::HighDegreeMove;
        if (all_equal(bs)) return d % 2 == 0 ? ColoringCase::EqualEven : ColoringCase::EqualOdd;
        const auto k = std::count(bs.begin(), bs.end(), bs[0]);
        if (k == 1) return ColoringCase::LeafRemovalOne;
        if (k == 2) return ColoringCase::LeafRemovalTwo;
        return k % 2 == 1 ? ColoringCase::LeafRemovalOdd : ColoringCase::LeafRemovalEven;
    }
    // With b < 3a/4 a degree-2 root would put a heavier edge at {r, s_2}.
    throw std::logic_error("root of degree " + std::to_string(d) + " in an unbalanced split of a " +
                           std::to_string(t.order()) + "-vertex tree");
}

ColoringCase classify(const Tree& t) {
    if (t.order() <= 3) return ColoringCase::Direct;
    return classify(t, split_structure(t));
}

PathColoring color_all_to_all(const Tree& t) {
    if (t.order() < 2) throw DegenerateTree("all-to-all coloring needs n >= 2");
    auto c = color_tree(t);
    certify(t, c);
    return c;
}

PathColoring color_with_split(const Tree& t, const SplitStructure& s) {
    PathColoring c;
    if (classify(t, s) == ColoringCase::Balanced) {
        c = color_balanced_split(t, s);
    } else if (s.degree() == 3) {
        c = color_branch_d3(t, s);
    } else if (s.degree() == 4) {
        c = color_branch_d4(t, s);
    } else if (s.degree() >= 5) {
        c = color_branch_d_ge5(t, s);
    }
    certify(t, c);
    return c;
}

PathColoring color_balanced_split(const Tree& t, const SplitStructure& s) {
    require(classify(t, s) == ColoringCase::Balanced, "balanced split needs b >= 3a/4");
    Assembler out(t.order());
    auto side_a = recurse(t, s.side_a);
    auto side_b = recurse(t, s.side_b);
    const int shared = out.block("sides", std::max(side_a.width, side_b.width));
    out.embed(side_a.local, side_a.coloring, shared);
    out.embed(side_b.local, side_b.coloring, shared);
    out.cross(s.side_a, s.side_b, out.block("cross", s.a * s.b));
    return out.finish();
}

PathColoring color_branch_d3(const Tree& t, const SplitStructure& s) {
    require(!s.balanced() && s.degree() == 3, "degree-3 construction needs b < 3a/4 and d = 3");
    Assembler out(t.order());
    paint_rooted(out, s);
    // Each cross class shares its block with the interior of the third branch.
    constexpr int groups[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    for (const auto& [i, j, rest] : groups) {
        auto inner = recurse(t, s.branches[rest]);
        const int block = out.block("cross+interior",
                                    std::max(s.branch_sizes[i] * s.branch_sizes[j], inner.width));
        out.cross(s.branches[i], s.branches[j], block);
        out.embed(inner.local, inner.coloring, block);
    }
    return out.finish();
}

PathColoring color_branch_d4(const Tree& t, const SplitStructure& s) {
    require(!s.balanced() && s.degree() == 4, "degree-4 construction needs b < 3a/4 and d = 4");
    const auto kind = classify(t, s);
    if (kind == ColoringCase::Degree4Move) return color_after_move(t, s, s.attach_points[2], s.attach_points[3]);

    const auto& bs = s.branch_sizes;
    Assembler out(t.order());
    paint_rooted(out, s);
    if (kind == ColoringCase::Degree4Pairs) {
        std::vector<Recursed> inner;
        std::int64_t width = 0;
        for (const auto& branch : s.branches) {
            inner.push_back(recurse(t, branch));
            width = std::max(width, inner.back().width);
        }
        const int shared = out.block("interiors", width);
        for (const auto& r : inner) out.embed(r.local, r.coloring, shared);
        // Disjoint branch pairs share a block.
        constexpr int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (const auto& [i, j, p, q] : pairs) {
            const int block = out.block("paired cross", std::max(bs[i] * bs[j], bs[p] * bs[q]));
            out.cross(s.branches[i], s.branches[j], block);
            out.cross(s.branches[p], s.branches[q], block);
        }
        return out.finish();
    }

    // Cross class (i, j) shares a block with the tree merged from the other
    // two branches by an edge between their attach points. Branch 3 sits in
    // every merged tree; its interior is taken from the first one only.
    constexpr int groups[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {1, 2, 0, 3}};
    bool first = true;
    for (const auto& [i, j, p, q] : groups) {
        const Edge bridge = make_edge(s.attach_points[p], s.attach_points[q]);
        auto inner = recurse(t, merged(s.branches[p], s.branches[q]), std::span(&bridge, 1));
        const int block = out.block("cross+merged", std::max(bs[i] * bs[j], inner.width));
        out.cross(s.branches[i], s.branches[j], block);
        if (first) {
            out.embed(inner.local, inner.coloring, block);
        } else {
            const auto& last = s.branches[3];
            out.embed(inner.local, inner.coloring, block, [&](Vertex x, Vertex y) {
                return !(std::binary_search(last.begin(), last.end(), x) &&
                         std::binary_search(last.begin(), last.end(), y));
            });
        }
        first = false;
    }
    return out.finish();
}

PathColoring color_branch_d_ge5(const Tree& t, const SplitStructure& s) {
    const int d = s.degree();
    require(!s.balanced() && d >= 5, "high-degree construction needs b < 3a/4 and d >= 5");
    const auto kind = classify(t, s);
    if (kind == ColoringCase::HighDegreeMove) {
        return color_after_move(t, s, s.attach_points[d - 2], s.attach_points[d - 1]);
    }
    if (2 * s.b >= s.a) {
        throw std::logic_error("d >= 5 with b >= a/2 must reduce to a smaller degree");
    }
    if (kind == ColoringCase::EqualEven || kind == ColoringCase::EqualOdd) return color_equal_branches(t, s);
    const auto k = std::count(s.branch_sizes.begin(), s.branch_sizes.end(), s.branch_sizes.front());
    return leaf_removal_coloring(t, s, static_cast<int>(k));
}

PathColoring leaf_removal_coloring(const Tree& t, const SplitStructure& s, int k) {
    const int d = s.degree();
    const auto& bs = s.branch_sizes;
    require(!s.balanced() && d >= 5 && 2 * s.b < s.a, "leaf removal needs d >= 5 and b < a/2");
    require(k >= 1 && k <= d - 1, "leaf removal needs 1 <= k <= d-1");
    require(std::count(bs.begin(), bs.end(), bs[0]) == k, "k must count the largest branches");

    // Even k >= 4 strips one extra branch so the K_K total coloring exists.
    const int stripped = (k >= 4 && k % 2 == 0) ? k + 1 : k;
    std::vector<Vertex> leaves;
    std::vector<std::vector<Vertex>> rest(s.branches);  // B'_i
    for (int i = 0; i < stripped; ++i) {
        const auto& branch = s.branches[i];
        Vertex u = s.attach_points[i];
        if (branch.size() > 1) {
            auto it = std::find_if(branch.begin(), branch.end(), [&](Vertex v) {
                return v != s.attach_points[i] && t.degree(v) == 1;
            });
            if (it == branch.end()) throw std::logic_error("branch without a removable leaf");
            u = *it;
        }
        leaves.push_back(u);
        rest[i] = without_vertex(branch, u);
    }

    Assembler out(t.order());
    {
        std::vector<Vertex> kept;
        for (Vertex v = 0; v < t.order(); ++v) {
            if (std::find(leaves.begin(), leaves.end(), v) == leaves.end()) kept.push_back(v);
        }
        auto reduced = recurse(t, kept);
        out.embed(reduced.local, reduced.coloring, out.block("reduced tree", reduced.width));
    }

    if (k == 1) {
        const Vertex u = leaves[0];
        std::vector<Vertex> others;
        for (Vertex v = 0; v < t.order(); ++v) {
            if (v != u) others.push_back(v);
        }
        out.fan(u, others, out.block("stripped leaf", static_cast<std::int64_t>(others.size())));
        return out.finish();
    }

    if (k == 2) {
        const Vertex u1 = leaves[0];
        const Vertex u2 = leaves[1];
        {
            const int block = out.block("leaf to own branch", bs[0]);
            out.fan(u1, with_vertex(rest[0], s.root), block);
            out.fan(u2, with_vertex(rest[1], s.root), block);
        }
        {
            // These all run through both {r, s_1} and {r, s_2}.
            const int block = out.block("leaf to twin branch", 2 * bs[0] - 1);
            out.fan(u1, rest[1], block);
            out.fan(u2, rest[0], block + static_cast<int>(rest[1].size()));
            out.paint(u1, u2, block + static_cast<int>(rest[0].size() + rest[1].size()));
        }
        for (int i = 2; i + 1 < d; ++i) {
            const int block = out.block("leaf to branch", bs[i]);
            out.fan(u1, s.branches[i], block);
            out.fan(u2, s.branches[i + 1], block);
        }
        const int block = out.block("leaf to branch (wrap)", bs[2]);
        out.fan(u1, s.branches[d - 1], block);
        out.fan(u2, s.branches[2], block);
        return out.finish();
    }

    const int m = stripped;
    const auto total = kd_total_coloring(m);
    auto max_size = [](std::initializer_list<std::size_t> sizes) {
        return static_cast<std::int64_t>(std::max(sizes));
    };
    for (int c = 0; c < m; ++c) {
        // Leaf c into its own remainder, plus u_i -> B'_j for {i, j} of class c.
        std::int64_t width = static_cast<std::int64_t>(rest[c].size());
        for (auto [i, j] : total.class_edges[c]) width = std::max(width, max_size({rest[j].size()}));
        int block = out.block("total class " + std::to_string(c), width);
        out.fan(leaves[c], rest[c], block);
        for (auto [i, j] : total.class_edges[c]) out.fan(leaves[i], rest[j], block);

        // Leaf c into the next branch, plus the reversed pairs u_j -> B'_i.
        width = m < d ? bs[m] : 0;
        for (auto [i, j] : total.class_edges[c]) width = std::max(width, max_size({rest[i].size()}));
        block = out.block("reversed class " + std::to_string(c), width);
        if (m < d) out.fan(leaves[c], s.branches[m], block);
        for (auto [i, j] : total.class_edges[c]) out.fan(leaves[j], rest[i], block);
    }
    {
        const int block = out.block("leaf to root and leaf pairs", m);
        for (int c = 0; c < m; ++c) {
            out.paint(leaves[c], s.root, block + c);
            for (auto [i, j] : total.class_edges[c]) out.paint(leaves[i], leaves[j], block + c);
        }
    }
    const int targets = d - m - 1;
    if (targets > 0) {
        const auto rows = m <= targets ? diagonal_schedule(m, d) : transposed_schedule(m, d);
        for (const auto& row : rows) {
            std::int64_t width = 0;
            for (auto [i, j] : row) width = std::max(width, bs[j - 1]);
            const int block = out.block("diagonal row", width);
            for (auto [i, j] : row) out.fan(leaves[i - 1], s.branches[j - 1], block);
        }
    }
    return out.finish();
}

std::size_t resolve_conflicts(const Tree& t, PathColoring& c) {
    const auto violations = verify_proper(t, c);
    if (violations.empty()) return 0;
    std::vector<PathId> redo;
    for (const auto& v : violations) redo.push_back(v.path_b);
    std::sort(redo.begin(), redo.end());
    redo.erase(std::unique(redo.begin(), redo.end()), redo.end());
    for (PathId p : redo) c.set(p, kUncolored);

    const RootedTree rooted(t);
    const auto palette = static_cast<std::size_t>(c.span_width());
    std::vector<std::vector<bool>> busy(t.edges().size(), std::vector<bool>(palette, false));
    for (Vertex x = 0; x < t.order(); ++x) {
        for (Vertex y = x + 1; y < t.order(); ++y) {
            const Color col = c.color(x, y);
            if (col == kUncolored) continue;
            rooted.for_each_path_edge(x, y, [&](std::size_t e) { busy[e][col] = true; });
        }
    }
    for (PathId p : redo) {
        std::vector<std::size_t> path_edges;
        rooted.for_each_path_edge(p.x, p.y, [&](std::size_t e) { path_edges.push_back(e); });
        std::size_t col = 0;
        while (col < busy.front().size() &&
               std::any_of(path_edges.begin(), path_edges.end(), [&](auto e) { return busy[e][col]; })) {
            ++col;
        }
        if (col == busy.front().size()) {
            for (auto& row : busy) row.push_back(false);
        }
        for (auto e : path_edges) busy[e][col] = true;
        c.set(p, static_cast<Color>(col));
    }
    c.compact();
    return redo.size();
}

Tree move_branch(const Tree& t, Vertex root, Vertex s_keep, Vertex s_move) {
    require(s_keep != s_move, "move_branch needs two distinct neighbors of the root");
    require(t.has_edge(make_edge(root, s_keep)) && t.has_edge(make_edge(root, s_move)),
            "s_keep and s_move must both be neighbors of the root");
    std::vector<Edge> edges;
    for (Edge e : t.edges()) {
        if (e != make_edge(root, s_move)) edges.push_back(e);
    }
    edges.push_back(make_edge(s_keep, s_move));
    return Tree(t.order(), std::move(edges));
}

PathColoring move_branch_and_exchange(const Tree& t, Vertex root, Vertex s_keep, Vertex s_move,
                                      const PathColoring& sub) {
    const Tree moved = move_branch(t, root, s_keep, s_move);
    require(sub.order() == t.order(), "sub-coloring has the wrong order");
    if (!verify_proper(moved, sub).empty()) {
        throw std::invalid_argument("sub-coloring is not proper on the transformed tree");
    }
    PathColoring out = sub;
    for (Vertex y : component_avoiding(t, s_move, root)) {
        out.set(root, y, sub.color(s_keep, y));
        out.set(s_keep, y, sub.color(root, y));
    }
    return out;
}

}  // namespace optidx
