#include "optidx/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <cctype>
#include <sstream>

namespace optidx {

std::string to_string(Edge e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::string_view to_string(TreeErrorKind kind) {
    switch (kind) {
        case TreeErrorKind::Malformed: return "malformed";
        case TreeErrorKind::VertexOutOfRange: return "vertex out of range";
        case TreeErrorKind::SelfLoop: return "self-loop";
        case TreeErrorKind::DuplicateEdge: return "duplicate edge";
        case TreeErrorKind::CycleDetected: return "cycle detected";
        case TreeErrorKind::Disconnected: return "disconnected";
    }
    return "unknown";
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

// Checks one edge against the running state; `where` prefixes messages.
void admit_edge(Vertex n, Edge e, DisjointSets& components, std::vector<Edge>& seen,
                const std::string& where) {
    if (e.u < 0 || e.v >= n) {
        throw TreeError(TreeErrorKind::VertexOutOfRange,
                        where + "vertex out of range in edge " + to_string(e) + " (n=" +
                            std::to_string(n) + ")");
    }
    if (e.u == e.v) {
        throw TreeError(TreeErrorKind::SelfLoop, where + "self-loop at vertex " + std::to_string(e.u));
    }
    auto pos = std::lower_bound(seen.begin(), seen.end(), e);
    if (pos != seen.end() && *pos == e) {
        throw TreeError(TreeErrorKind::DuplicateEdge, where + "duplicate edge " + to_string(e));
    }
    if (!components.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
        throw TreeError(TreeErrorKind::CycleDetected, where + "cycle detected at edge " + to_string(e));
    }
    seen.insert(pos, e);
}

void require_connected(Vertex n, std::size_t edge_count) {
    if (edge_count + 1 != static_cast<std::size_t>(n)) {
        throw TreeError(TreeErrorKind::Disconnected,
                        "disconnected input: " + std::to_string(edge_count) + " edges for n=" +
                            std::to_string(n) + " (a tree needs n-1)");
    }
}

}  // namespace

Tree::Tree(Vertex n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) {
        throw TreeError(TreeErrorKind::Malformed, "tree must have at least one vertex");
    }
    DisjointSets components(static_cast<std::size_t>(n));
    std::vector<Edge> canonical;
    canonical.reserve(edges.size());
    for (Edge e : edges) {
        admit_edge(n, make_edge(e.u, e.v), components, canonical, "");
    }
    require_connected(n, canonical.size());
    edges_ = std::move(canonical);

    std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
    for (Edge e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adjacency_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (Edge e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (Vertex v = 0; v < n; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
}

std::span<const Vertex> Tree::neighbors(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range: " + std::to_string(v));
    return std::span<const Vertex>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::optional<std::size_t> Tree::edge_index(Edge e) const {
    e = make_edge(e.u, e.v);
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (pos == edges_.end() || *pos != e) return std::nullopt;
    return static_cast<std::size_t>(pos - edges_.begin());
}

std::string Tree::to_edge_list() const {
    std::ostringstream out;
    out << n_ << '\n';
    for (Edge e : edges_) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::optional<std::int64_t> to_integer(std::string_view token) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

}  // namespace

Tree parse_edge_list(std::string_view text) {
    std::optional<Vertex> n;
    std::vector<Edge> edges;
    std::optional<DisjointSets> components;
    std::size_t line_no = 0;

    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().starts_with('#')) continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";

        if (!n) {
            auto value = tokens.size() == 1 ? to_integer(tokens[0]) : std::nullopt;
            if (!value || *value < 1 || *value > (std::int64_t{1} << 30)) {
                throw TreeError(TreeErrorKind::Malformed, where + "expected vertex count n >= 1");
            }
            n = static_cast<Vertex>(*value);
            components.emplace(static_cast<std::size_t>(*n));
            continue;
        }
        if (tokens.size() != 2) {
            throw TreeError(TreeErrorKind::Malformed, where + "expected \"u v\"");
        }
        auto u = to_integer(tokens[0]);
        auto v = to_integer(tokens[1]);
        if (!u || !v) throw TreeError(TreeErrorKind::Malformed, where + "non-integer vertex id");
        if (*u < 0 || *v < 0 || *u >= *n || *v >= *n) {
            throw TreeError(TreeErrorKind::VertexOutOfRange,
                            where + "vertex out of range (n=" + std::to_string(*n) + ")");
        }
        admit_edge(*n, make_edge(static_cast<Vertex>(*u), static_cast<Vertex>(*v)), *components,
                   edges, where);
    }
    if (!n) throw TreeError(TreeErrorKind::Malformed, "empty input: missing vertex count");
    require_connected(*n, edges.size());
    return Tree(*n, std::move(edges));
}

EdgeLoadProfile edge_load_profile(const Tree& t) {
    const Vertex n = t.order();
    if (n < 2) throw DegenerateTree("edge loads need a tree with at least one edge (n >= 2)");

    // Iterative DFS from vertex 0; subtree sizes accumulate in reverse preorder.
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<Vertex> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Vertex w : t.neighbors(v)) {
            if (parent[w] == -1) {
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    std::vector<std::int64_t> size(static_cast<std::size_t>(n), 1);
    EdgeLoadProfile profile;
    profile.loads.assign(t.edges().size(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        if (v == 0) continue;
        size[parent[v]] += size[v];
        auto idx = *t.edge_index(make_edge(v, parent[v]));
        profile.loads[idx] = size[v] * (n - size[v]);
    }
    // Edges are sorted, so the first maximum is the lexicographically smallest.
    auto best = std::max_element(profile.loads.begin(), profile.loads.end());
    profile.pi = *best;
    profile.argmax_edge = t.edges()[static_cast<std::size_t>(best - profile.loads.begin())];
    return profile;
}

std::int64_t forwarding_index(const Tree& t) { return edge_load_profile(t).pi; }

namespace {

std::vector<std::int64_t> parse_int_list(std::string_view text, std::string_view spec) {
    std::vector<std::int64_t> values;
    while (true) {
        auto comma = text.find(',');
        auto value = to_integer(text.substr(0, comma));
        if (!value) throw std::invalid_argument("invalid family spec \"" + std::string(spec) + "\"");
        values.push_back(*value);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return values;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text, std::uint64_t default_seed) {
    auto colon = text.find(':');
    require(colon != std::string_view::npos, "family spec needs \"family:params\": " + std::string(text));
    std::string_view name = text.substr(0, colon);
    auto params = parse_int_list(text.substr(colon + 1), text);
    auto expect = [&](std::size_t count) {
        require(params.size() == count, "wrong parameter count in family spec \"" + std::string(text) + "\"");
    };
    FamilySpec spec;
    if (name == "path") {
        expect(1);
        spec = FamilySpec::path(params[0]);
    } else if (name == "star") {
        expect(1);
        spec = FamilySpec::star(params[0]);
    } else if (name == "spider") {
        expect(2);
        spec = FamilySpec::spider(params[0], params[1]);
    } else if (name == "mary") {
        expect(2);
        spec = FamilySpec::mary(params[0], params[1]);
    } else if (name == "random") {
        require(params.size() == 1 || params.size() == 2,
                "random family takes n or n,seed: \"" + std::string(text) + "\"");
        require(params.size() == 1 || params[1] >= 0, "seed must be non-negative");
        spec = FamilySpec::random(params[0], params.size() == 2 ? static_cast<std::uint64_t>(params[1])
                                                                  : default_seed);
    } else {
        throw std::invalid_argument("unknown tree family \"" + std::string(name) + "\"");
    }
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Path: return "path:" + std::to_string(spec.n);
        case Family::Star: return "star:" + std::to_string(spec.n);
        case Family::Spider: return "spider:" + std::to_string(spec.k) + "," + std::to_string(spec.t);
        case Family::Mary: return "mary:" + std::to_string(spec.arity) + "," + std::to_string(spec.depth);
        case Family::Random: return "random:" + std::to_string(spec.n) + "," + std::to_string(spec.seed);
    }
    return "?";
}

Tree generate(const FamilySpec& spec) {
    constexpr std::int64_t max_order = std::int64_t{1} << 24;
    std::vector<Edge> edges;
    switch (spec.family) {
        case Family::Path: {
            require(spec.n >= 1 && spec.n <= max_order, "path needs 1 <= n");
            for (Vertex v = 1; v < spec.n; ++v) edges.push_back({v - 1, v});
            return Tree(static_cast<Vertex>(spec.n), std::move(edges));
        }
        case Family::Star: {
            require(spec.n >= 1 && spec.n <= max_order, "star needs 1 <= n");
            for (Vertex v = 1; v < spec.n; ++v) edges.push_back({0, v});
            return Tree(static_cast<Vertex>(spec.n), std::move(edges));
        }
        case Family::Spider: {
            require(spec.k >= 1 && spec.t >= 1, "spider needs k >= 1 and t >= 1");
            require(spec.k * spec.t < max_order, "spider too large");
            const auto k = static_cast<Vertex>(spec.k);
            const auto t = static_cast<Vertex>(spec.t);
            // Branch i holds vertices 1 + i*t .. (i+1)*t, listed outward from the root.
            for (Vertex i = 0; i < k; ++i) {
                Vertex first = 1 + i * t;
                edges.push_back({0, first});
                for (Vertex j = 1; j < t; ++j) edges.push_back({first + j - 1, first + j});
            }
            return Tree(k * t + 1, std::move(edges));
        }
        case Family::Mary: {
            require(spec.arity >= 1 && spec.depth >= 0, "mary needs arity >= 1 and depth >= 0");
            std::int64_t total = 1;
            std::int64_t level = 1;
            for (std::int64_t d = 0; d < spec.depth; ++d) {
                level *= spec.arity;
                total += level;
                require(total <= max_order, "m-ary tree too large");
            }
            // Breadth-first labels: children of v are v*m+1 .. v*m+m.
            for (std::int64_t v = 1; v < total; ++v) {
                edges.push_back({static_cast<Vertex>((v - 1) / spec.arity), static_cast<Vertex>(v)});
            }
            return Tree(static_cast<Vertex>(total), std::move(edges));
        }
        case Family::Random: {
            require(spec.n >= 1 && spec.n <= max_order, "random needs 1 <= n");
            return random_tree(static_cast<Vertex>(spec.n), spec.seed);
        }
    }
    throw std::invalid_argument("unknown family");
}

Tree decode_pruefer(Vertex n, std::span<const Vertex> sequence) {
    if (n < 2 || sequence.size() != static_cast<std::size_t>(n - 2)) {
        throw std::invalid_argument("Pruefer sequence must have length n-2 with n >= 2");
    }
    std::vector<std::int32_t> degree(static_cast<std::size_t>(n), 1);
    for (Vertex x : sequence) {
        if (x < 0 || x >= n) throw std::invalid_argument("Pruefer entry out of range");
        ++degree[x];
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    // Linear-time decoding: `ptr` scans for the smallest leaf, `leaf` may dip
    // below it when removing a sequence entry creates a smaller leaf.
    Vertex ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    Vertex leaf = ptr;
    for (Vertex x : sequence) {
        edges.push_back(make_edge(leaf, x));
        --degree[leaf];
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    Vertex last = n - 1;
    edges.push_back(make_edge(leaf, last));
    return Tree(n, std::move(edges));
}

Tree random_tree(Vertex n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random tree needs n >= 1");
    if (n == 1) return Tree();
    SplitMix64 rng(seed);
    std::vector<Vertex> sequence(static_cast<std::size_t>(n - 2));
    for (auto& x : sequence) x = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    return decode_pruefer(n, sequence);
}

Tree relabel(const Tree& t, std::span<const Vertex> perm) {
    if (perm.size() != static_cast<std::size_t>(t.order())) {
        throw std::invalid_argument("permutation size does not match tree order");
    }
    std::vector<Edge> edges;
    edges.reserve(t.edges().size());
    for (Edge e : t.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
    return Tree(t.order(), std::move(edges));
}

}  // namespace optidx
