#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "optidx/coloring.hpp"
#include "optidx/routing.hpp"
#include "optidx/tree.hpp"

namespace optidx {

/// Two paths that share `edge` and carry the same color.
struct Violation {
    Edge edge;
    PathId path_a;
    PathId path_b;

    friend bool operator==(const Violation&, const Violation&) = default;
};

class IncompleteColoring : public std::invalid_argument {
public:
    IncompleteColoring(const std::string& what, PathId missing)
        : std::invalid_argument(what), missing_(missing) {}
    PathId missing() const noexcept { return missing_; }

private:
    PathId missing_;
};

/// Empty iff the coloring is proper. Groups paths per tree edge, so every
/// pair of equally colored paths sharing an edge is reported on that edge
/// (paired with the first path of that color on the edge).
std::vector<Violation> verify_proper(const Tree& t, const PathColoring& c);

enum class GreedyOrder { Lex, LongestFirst, LoadWeighted };

GreedyOrder parse_greedy_order(std::string_view tag);

/// First-fit coloring along the given path order.
PathColoring greedy_coloring(const Tree& t, GreedyOrder order);

struct ExactResult {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    bool exact = false;
    std::int64_t elapsed_ms = 0;
    std::int64_t budget_ms = 0;
    PathColoring witness;                 // uses `upper` colors
    std::vector<PathId> clique;           // largest clique found
};

/// Chromatic number of the conflict graph by DSATUR branch and bound.
/// Returns best bounds with exact=false when the wall-clock budget runs out.
ExactResult exact_optical_index(const Tree& t, std::int64_t budget_ms);

/// All n^(n-2) labeled trees on n vertices, in lexicographic Prüfer order.
class LabeledTreeEnumerator {
public:
    static constexpr Vertex kDefaultCap = 8;

    explicit LabeledTreeEnumerator(Vertex n, Vertex cap = kDefaultCap);

    /// Next tree, or nullopt once every sequence has been decoded.
    std::optional<Tree> next();

    /// n^(n-2).
    std::uint64_t total() const noexcept { return total_; }

private:
    Vertex n_;
    std::vector<Vertex> sequence_;
    std::uint64_t total_ = 0;
    std::uint64_t emitted_ = 0;
};

}  // namespace optidx
