#pragma once

#include <stdexcept>
#include <string_view>
#include <vector>

#include "optidx/coloring.hpp"
#include "optidx/palette.hpp"
#include "optidx/tree.hpp"

namespace optidx {

/// Decomposition of a tree around a heaviest edge.
///
/// `hat_edge` = {root, attach_points[0]} separates side A (containing
/// `root`, a vertices) from side B (b vertices, a >= b). The branches are the
/// components of T - root; branch 0 is always side B, the rest follow by size
/// descending and then by attach point.
struct SplitStructure {
    Edge hat_edge;
    std::vector<Vertex> side_a;  // sorted
    std::vector<Vertex> side_b;  // sorted
    std::int64_t a = 0;
    std::int64_t b = 0;
    Vertex root = 0;
    std::vector<std::vector<Vertex>> branches;  // each sorted
    std::vector<std::int64_t> branch_sizes;
    std::vector<Vertex> attach_points;

    int degree() const noexcept { return static_cast<int>(branches.size()); }
    /// 4b >= 3a.
    bool balanced() const noexcept { return 4 * b >= 3 * a; }
};

/// Split at the lexicographically smallest heaviest edge. Needs n >= 2.
SplitStructure split_structure(const Tree& t);

/// Split with the heaviest edge forced to {root, b_attach}; side B is the
/// component of b_attach in T - root.
SplitStructure split_at(const Tree& t, Vertex root, Vertex b_attach);

/// Which construction handles a tree at the top level.
enum class ColoringCase {
    Direct,           // n <= 3
    Balanced,         // b >= 3a/4
    Degree3,
    Degree4Move,      // b1 >= b3 + b4: B4 moved under s3
    Degree4Pairs,     // five-class palette
    Degree4Merged,    // seven-class palette with merged branch trees
    HighDegreeMove,   // d >= 5, b1 >= b_{d-1} + b_d: B_d moved under s_{d-1}
    EqualEven,        // d >= 5 equal branches, d even
    EqualOdd,         // d >= 5 equal branches, d odd
    LeafRemovalOne,   // k = 1
    LeafRemovalTwo,   // k = 2
    LeafRemovalOdd,   // odd k >= 3
    LeafRemovalEven,  // even k >= 4
};

std::string_view to_string(ColoringCase c);

ColoringCase classify(const Tree& t);
ColoringCase classify(const Tree& t, const SplitStructure& s);

/// Raised when a construction leaves the 3/2 window; indicates a bug.
class BoundViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Proper coloring of all C(n,2) paths with pi <= colors and 2*colors < 3*pi.
PathColoring color_all_to_all(const Tree& t);

/// Dispatches on a given split (balanced or by root degree).
PathColoring color_with_split(const Tree& t, const SplitStructure& s);

PathColoring color_balanced_split(const Tree& t, const SplitStructure& s);
PathColoring color_branch_d3(const Tree& t, const SplitStructure& s);
PathColoring color_branch_d4(const Tree& t, const SplitStructure& s);
PathColoring color_branch_d_ge5(const Tree& t, const SplitStructure& s);

/// b_1 = ... = b_k > b_{k+1}: strip one leaf per largest branch, color the
/// rest recursively and give the stripped paths their own blocks.
PathColoring leaf_removal_coloring(const Tree& t, const SplitStructure& s, int k);

/// T - {root, s_move} + {s_keep, s_move}; vertex labels are unchanged.
Tree move_branch(const Tree& t, Vertex root, Vertex s_keep, Vertex s_move);

/// Pulls a coloring of move_branch(t, root, s_keep, s_move) back to t by
/// swapping the colors of root-y and s_keep-y for every y in the moved branch.
PathColoring move_branch_and_exchange(const Tree& t, Vertex root, Vertex s_keep, Vertex s_move,
                                      const PathColoring& sub);

/// Uncolors the later path of every conflicting pair and recolors those
/// first-fit, preferring colors already in use. Returns how many paths moved.
std::size_t resolve_conflicts(const Tree& t, PathColoring& c);

}  // namespace optidx
