#include "optidx/palette.hpp"

#include <stdexcept>

namespace optidx {

namespace {

std::size_t pair_index(int d, int i, int j) {
    if (i > j) std::swap(i, j);
    const auto x = static_cast<std::size_t>(i);
    return x * (2 * static_cast<std::size_t>(d) - x - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

std::size_t pair_total(int d) { return static_cast<std::size_t>(d) * static_cast<std::size_t>(d - 1) / 2; }

void fill_class_edges(KdColoring& c) {
    c.class_edges.assign(static_cast<std::size_t>(c.classes), {});
    for (int i = 0; i < c.d; ++i) {
        for (int j = i + 1; j < c.d; ++j) c.class_edges[c.edge_class[pair_index(c.d, i, j)]].emplace_back(i, j);
    }
}

}  // namespace

int KdColoring::edge_color(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= d || j >= d) throw std::out_of_range("not an edge of K_d");
    return edge_class[pair_index(d, i, j)];
}

std::vector<std::pair<int, int>> KdColoring::reversed_pairs(int t) const {
    std::vector<std::pair<int, int>> out;
    for (auto [i, j] : class_edges.at(static_cast<std::size_t>(t))) out.emplace_back(j, i);
    return out;
}

KdColoring kd_edge_coloring(int d) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("kd_edge_coloring needs even d >= 2");
    KdColoring c;
    c.d = d;
    c.kind = KdKind::Edge;
    c.classes = d - 1;
    c.edge_class.assign(pair_total(d), -1);
    const int m = d - 1;
    for (int round = 0; round < m; ++round) {
        c.edge_class[pair_index(d, round, d - 1)] = round;
        for (int step = 1; step < d / 2; ++step) {
            int a = (round + step) % m;
            int b = (round - step + m) % m;
            c.edge_class[pair_index(d, a, b)] = round;
        }
    }
    fill_class_edges(c);
    return c;
}

KdColoring kd_total_coloring(int d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("kd_total_coloring needs odd d >= 3");
    KdColoring c;
    c.d = d;
    c.kind = KdKind::Total;
    c.classes = d;
    // Raw classes: edge (i + j) mod d, vertex 2v mod d. Multiplying by the
    // inverse of 2 moves vertex v into class v.
    const int half = (d + 1) / 2;
    c.edge_class.assign(pair_total(d), -1);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            c.edge_class[pair_index(d, i, j)] = static_cast<int>((static_cast<long long>(i + j) * half) % d);
        }
    }
    c.vertex_class.resize(static_cast<std::size_t>(d));
    for (int v = 0; v < d; ++v) c.vertex_class[v] = static_cast<int>((2LL * v * half) % d);
    fill_class_edges(c);
    return c;
}

std::vector<std::vector<std::pair<int, int>>> diagonal_schedule(int k, int d) {
    const int m = d - k - 1;
    if (k < 1 || k > m) throw std::invalid_argument("diagonal_schedule needs 1 <= k <= d-k-1");
    std::vector<std::vector<std::pair<int, int>>> rows(static_cast<std::size_t>(m));
    for (int t = 1; t <= m; ++t) {
        for (int i = 1; i <= k; ++i) rows[t - 1].emplace_back(i, k + 2 + (t + i - 2) % m);
    }
    return rows;
}

std::vector<std::vector<std::pair<int, int>>> transposed_schedule(int k, int d) {
    const int m = d - k - 1;
    if (m < 0 || k < 1 || k < m) throw std::invalid_argument("transposed_schedule needs d-k-1 <= k");
    std::vector<std::vector<std::pair<int, int>>> rows(static_cast<std::size_t>(k));
    for (int t = 1; t <= k; ++t) {
        for (int j = k + 2; j <= d; ++j) rows[t - 1].emplace_back(1 + (t + j - k - 3) % k, j);
    }
    return rows;
}

int PaletteLedger::allocate(std::string label, int width) {
    if (width < 0) throw std::invalid_argument("palette block width must be non-negative");
    const int offset = next_free_;
    blocks_.push_back({std::move(label), offset, width});
    next_free_ += width;
    return offset;
}

}  // namespace optidx
