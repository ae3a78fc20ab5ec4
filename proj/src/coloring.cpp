#include "optidx/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace optidx {

std::size_t PathColoring::index_of(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) {
        throw std::out_of_range("pair {" + std::to_string(a) + "," + std::to_string(b) +
                                "} out of range for n=" + std::to_string(n_));
    }
    return path_index(n_, make_path(a, b));
}

bool PathColoring::total() const noexcept {
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c < 0; });
}

Color PathColoring::span_width() const noexcept {
    Color top = -1;
    for (Color c : colors_) top = std::max(top, c);
    return top + 1;
}

Color PathColoring::colors_used() const {
    std::vector<bool> seen(static_cast<std::size_t>(span_width()), false);
    Color count = 0;
    for (Color c : colors_) {
        if (c >= 0 && !seen[c]) {
            seen[c] = true;
            ++count;
        }
    }
    return count;
}

void PathColoring::compact() {
    std::vector<Color> rank(static_cast<std::size_t>(span_width()), kUncolored);
    for (Color c : colors_) {
        if (c >= 0) rank[c] = 0;
    }
    Color next = 0;
    for (auto& r : rank) {
        if (r == 0) r = next++;
    }
    for (auto& c : colors_) {
        if (c >= 0) c = rank[c];
    }
}

}  // namespace optidx
