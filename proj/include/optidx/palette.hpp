#pragma once

#include <string>
#include <utility>
#include <vector>

namespace optidx {

enum class KdKind { Edge, Total };

/// Proper edge coloring (d even) or total coloring (d odd) of K_d on
/// vertices 0..d-1.
struct KdColoring {
    int d = 0;
    KdKind kind = KdKind::Edge;
    int classes = 0;
    std::vector<int> edge_class;    // by lexicographic index of {i, j}
    std::vector<int> vertex_class;  // total kind only
    /// Per class, its edges as (i, j) with i < j. These are the ordered pairs
    /// O_t; swapping each gives O_t^r.
    std::vector<std::vector<std::pair<int, int>>> class_edges;

    int edge_color(int i, int j) const;
    std::vector<std::pair<int, int>> reversed_pairs(int t) const;
};

/// Round-robin 1-factorization: vertex d-1 fixed, 0..d-2 rotating.
KdColoring kd_edge_coloring(int d);

/// d-total-coloring for odd d, normalized so that vertex v has class v.
/// Edge {i, j} gets the class v with 2v = i + j (mod d).
KdColoring kd_total_coloring(int d);

/// Rows S_1..S_{d-k-1} of (branch, target) index pairs, 1-based, with
/// j(t, i) = k + 2 + ((t + i - 2) mod (d - k - 1)). Requires 1 <= k <= d-k-1.
std::vector<std::vector<std::pair<int, int>>> diagonal_schedule(int k, int d);

/// Same cover for k > d-k-1: k rows, each pairing every target j once.
std::vector<std::vector<std::pair<int, int>>> transposed_schedule(int k, int d);

struct PaletteBlock {
    std::string label;
    int offset = 0;
    int width = 0;
};

/// Hands out disjoint contiguous color ranges.
class PaletteLedger {
public:
    int allocate(std::string label, int width);

    const std::vector<PaletteBlock>& blocks() const noexcept { return blocks_; }
    int next_free() const noexcept { return next_free_; }

private:
    std::vector<PaletteBlock> blocks_;
    int next_free_ = 0;
};

}  // namespace optidx
