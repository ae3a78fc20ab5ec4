#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "optidx/routing.hpp"
#include "optidx/tree.hpp"

namespace optidx {

using Color = std::int32_t;
inline constexpr Color kUncolored = -1;

/// Assignment of a color to every unordered vertex pair of an n-vertex tree.
class PathColoring {
public:
    explicit PathColoring(Vertex n = 0)
        : n_(n), colors_(path_count(n), kUncolored) {}

    Vertex order() const noexcept { return n_; }
    std::size_t size() const noexcept { return colors_.size(); }

    Color color(Vertex a, Vertex b) const { return colors_[index_of(a, b)]; }
    Color color(PathId p) const { return colors_[path_index(n_, p)]; }
    void set(Vertex a, Vertex b, Color c) { colors_[index_of(a, b)] = c; }
    void set(PathId p, Color c) { colors_[path_index(n_, p)] = c; }

    /// Colors in lexicographic pair order.
    std::span<const Color> raw() const noexcept { return colors_; }

    bool total() const noexcept;
    /// Number of distinct colors assigned.
    Color colors_used() const;
    /// Largest color plus one (0 when nothing is colored).
    Color span_width() const noexcept;

    /// Renumbers used colors to 0..k-1, preserving their relative order.
    void compact();

    friend bool operator==(const PathColoring&, const PathColoring&) = default;

private:
    std::size_t index_of(Vertex a, Vertex b) const;

    Vertex n_;
    std::vector<Color> colors_;
};

}  // namespace optidx
