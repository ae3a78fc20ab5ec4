#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace optidx {

using Vertex = std::int32_t;

/// Undirected tree edge, stored with the smaller endpoint first.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds the canonical (min, max) form of {a, b}.
constexpr Edge make_edge(Vertex a, Vertex b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(Edge e);

enum class TreeErrorKind {
    Malformed,
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    CycleDetected,
    Disconnected,
};

std::string_view to_string(TreeErrorKind kind);

class TreeError : public std::runtime_error {
public:
    TreeError(TreeErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    TreeErrorKind kind() const noexcept { return kind_; }

private:
    TreeErrorKind kind_;
};

/// Raised by index operations that need at least one edge.
class DegenerateTree : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable labeled tree on vertices 0..n-1.
///
/// Edges are kept sorted in canonical form and adjacency lists are sorted,
/// so every traversal over a Tree is reproducible.
class Tree {
public:
    /// Validates the edge list; throws TreeError on any violation.
    Tree(Vertex n, std::vector<Edge> edges);

    /// Single vertex.
    Tree() : Tree(1, {}) {}

    Vertex order() const noexcept { return n_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    std::optional<std::size_t> edge_index(Edge e) const;
    bool has_edge(Edge e) const { return edge_index(e).has_value(); }

    /// Serializes in the edge-list file format.
    std::string to_edge_list() const;

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Vertex n_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
};

/// Parses the edge-list format: first non-comment line is n, then one "u v"
/// per line. Lines starting with '#' and blank lines are ignored.
Tree parse_edge_list(std::string_view text);

/// Per-edge path counts for the all-to-all instance.
struct EdgeLoadProfile {
    std::vector<std::int64_t> loads;  // aligned with Tree::edges()
    std::int64_t pi = 0;
    Edge argmax_edge;
};

EdgeLoadProfile edge_load_profile(const Tree& t);

/// Maximum edge load; the tree routing is unique so nothing is minimized.
std::int64_t forwarding_index(const Tree& t);

enum class Family { Path, Star, Spider, Mary, Random };

struct FamilySpec {
    Family family = Family::Path;
    std::int64_t n = 1;       // path, star, random
    std::int64_t k = 1;       // spider branch count
    std::int64_t t = 1;       // spider branch length
    std::int64_t arity = 2;   // mary
    std::int64_t depth = 0;   // mary
    std::uint64_t seed = 0;   // random

    static FamilySpec path(std::int64_t n) { return {.family = Family::Path, .n = n}; }
    static FamilySpec star(std::int64_t n) { return {.family = Family::Star, .n = n}; }
    static FamilySpec spider(std::int64_t k, std::int64_t t) {
        return {.family = Family::Spider, .k = k, .t = t};
    }
    static FamilySpec mary(std::int64_t arity, std::int64_t depth) {
        return {.family = Family::Mary, .arity = arity, .depth = depth};
    }
    static FamilySpec random(std::int64_t n, std::uint64_t seed) {
        return {.family = Family::Random, .n = n, .seed = seed};
    }
};

/// Parses "path:N", "star:N", "spider:K,T", "mary:M,DEPTH", "random:N[,SEED]".
/// A random spec without an explicit seed takes default_seed.
FamilySpec parse_family_spec(std::string_view text, std::uint64_t default_seed = 0);

/// "spider:3,2" style rendering; round-trips through parse_family_spec.
std::string to_string(const FamilySpec& spec);

Tree generate(const FamilySpec& spec);

/// SplitMix64 stream. Every random choice in the project is drawn from this
/// generator so that outputs are reproducible across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Value in [0, bound) by plain reduction modulo bound.
    std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Decodes a Prüfer sequence of length n-2 over 0..n-1 (n >= 2).
Tree decode_pruefer(Vertex n, std::span<const Vertex> sequence);

/// Uniform labeled tree on n vertices from a seeded Prüfer sequence.
Tree random_tree(Vertex n, std::uint64_t seed);

/// Applies a vertex permutation: vertex v becomes perm[v].
Tree relabel(const Tree& t, std::span<const Vertex> perm);

}  // namespace optidx
