#include "optidx/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include <boost/dynamic_bitset.hpp>

namespace optidx {

std::vector<Violation> verify_proper(const Tree& t, const PathColoring& c) {
    if (c.order() != t.order()) {
        throw std::invalid_argument("coloring order " + std::to_string(c.order()) +
                                    " does not match tree order " + std::to_string(t.order()));
    }
    const auto paths = all_paths(t.order());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (c.raw()[i] < 0) {
            throw IncompleteColoring("pair {" + std::to_string(paths[i].x) + "," + std::to_string(paths[i].y) +
                                         "} has no color",
                                     paths[i]);
        }
    }
    const RootedTree rt(t);
    std::vector<std::vector<std::pair<Color, std::uint32_t>>> per_edge(t.edges().size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        rt.for_each_path_edge(paths[i].x, paths[i].y, [&](std::size_t e) {
            per_edge[e].emplace_back(c.raw()[i], static_cast<std::uint32_t>(i));
        });
    }
    std::vector<Violation> violations;
    for (std::size_t e = 0; e < per_edge.size(); ++e) {
        auto& group = per_edge[e];
        std::sort(group.begin(), group.end());
        for (std::size_t run = 0; run < group.size();) {
            std::size_t end = run + 1;
            while (end < group.size() && group[end].first == group[run].first) {
                violations.push_back({t.edges()[e], paths[group[run].second], paths[group[end].second]});
                ++end;
            }
            run = end;
        }
    }
    return violations;
}

GreedyOrder parse_greedy_order(std::string_view tag) {
    if (tag == "lex") return GreedyOrder::Lex;
    if (tag == "longest-first") return GreedyOrder::LongestFirst;
    if (tag == "load-weighted") return GreedyOrder::LoadWeighted;
    throw std::invalid_argument("unknown path order \"" + std::string(tag) +
                                "\" (expected lex, longest-first or load-weighted)");
}

PathColoring greedy_coloring(const Tree& t, GreedyOrder order) {
    const Vertex n = t.order();
    PathColoring out(n);
    if (n < 2) return out;
    const RootedTree rt(t);
    const auto paths = all_paths(n);
    std::vector<std::vector<std::size_t>> edges_of(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        rt.for_each_path_edge(paths[i].x, paths[i].y, [&](std::size_t e) { edges_of[i].push_back(e); });
    }
    std::vector<std::int64_t> key(paths.size(), 0);
    if (order == GreedyOrder::LongestFirst) {
        for (std::size_t i = 0; i < paths.size(); ++i) key[i] = static_cast<std::int64_t>(edges_of[i].size());
    } else if (order == GreedyOrder::LoadWeighted) {
        const auto profile = edge_load_profile(t);
        for (std::size_t i = 0; i < paths.size(); ++i) {
            for (auto e : edges_of[i]) key[i] += profile.loads[e];
        }
    }
    std::vector<std::size_t> sequence(paths.size());
    std::iota(sequence.begin(), sequence.end(), std::size_t{0});
    std::stable_sort(sequence.begin(), sequence.end(), [&](auto a, auto b) { return key[a] > key[b]; });

    std::vector<std::vector<bool>> used(t.edges().size());
    std::vector<bool> blocked;
    for (auto i : sequence) {
        blocked.assign(blocked.size(), false);
        for (auto e : edges_of[i]) {
            if (used[e].size() > blocked.size()) blocked.resize(used[e].size(), false);
            for (std::size_t c = 0; c < used[e].size(); ++c) {
                if (used[e][c]) blocked[c] = true;
            }
        }
        std::size_t color = 0;
        while (color < blocked.size() && blocked[color]) ++color;
        out.set(paths[i], static_cast<Color>(color));
        for (auto e : edges_of[i]) {
            if (used[e].size() <= color) used[e].resize(color + 1, false);
            used[e][color] = true;
        }
    }
    return out;
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(std::int64_t budget_ms) : end_(Clock::now() + std::chrono::milliseconds(budget_ms)) {}

    /// Polls the clock every 1024 calls.
    bool expired() {
        if (expired_) return true;
        if ((++ticks_ & 1023U) == 0 && Clock::now() >= end_) expired_ = true;
        return expired_;
    }
    bool flagged() const noexcept { return expired_; }

private:
    Clock::time_point end_;
    std::uint64_t ticks_ = 0;
    bool expired_ = false;
};

/// Branch and bound maximum clique with greedy-coloring bounds.
class MaxClique {
public:
    MaxClique(const std::vector<Bits>& adj, Deadline& deadline) : adj_(adj), deadline_(deadline) {}

    std::vector<std::size_t> solve(const Bits& candidates, std::vector<std::size_t> seed) {
        best_ = std::move(seed);
        std::vector<std::size_t> current;
        expand(current, candidates);
        return best_;
    }

    bool complete() const noexcept { return !deadline_.flagged(); }

private:
    void expand(std::vector<std::size_t>& current, Bits candidates) {
        if (deadline_.expired()) return;
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        color_sort(candidates, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best_.size()) return;
            const auto v = order[i];
            current.push_back(v);
            Bits next = candidates & adj_[v];
            if (next.none()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
            candidates.reset(v);
            if (deadline_.flagged()) return;
        }
    }

    // Greedy coloring of the candidates; bound[i] is the color count after order[i].
    void color_sort(const Bits& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
        Bits uncolored = candidates;
        std::size_t color = 0;
        while (uncolored.any()) {
            ++color;
            Bits available = uncolored;
            for (auto v = available.find_first(); v != Bits::npos; v = available.find_next(v)) {
                uncolored.reset(v);
                available -= adj_[v];
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    const std::vector<Bits>& adj_;
    Deadline& deadline_;
    std::vector<std::size_t> best_;
};

enum class Feasibility { Colorable, NotColorable, TimedOut };

/// Decides k-colorability of the conflict graph.
class ColoringSearch {
public:
    ColoringSearch(const std::vector<Bits>& adj, Deadline& deadline) : adj_(adj), deadline_(deadline) {}

    Feasibility run(int k, std::vector<int>& coloring) {
        const std::size_t n = adj_.size();
        // Vertices of degree < k can always be colored last; peel them off.
        std::vector<std::size_t> degree(n);
        for (std::size_t v = 0; v < n; ++v) degree[v] = adj_[v].count();
        Bits core(n);
        core.set();
        std::vector<std::size_t> peeled;
        std::vector<std::size_t> queue;
        for (std::size_t v = 0; v < n; ++v) {
            if (degree[v] < static_cast<std::size_t>(k)) queue.push_back(v);
        }
        while (!queue.empty()) {
            const auto v = queue.back();
            queue.pop_back();
            if (!core.test(v)) continue;
            core.reset(v);
            peeled.push_back(v);
            const Bits around = adj_[v] & core;
            for (auto w = around.find_first(); w != Bits::npos; w = around.find_next(w)) {
                if (--degree[w] < static_cast<std::size_t>(k)) queue.push_back(w);
            }
        }

        coloring.assign(n, -1);
        if (core.any()) {
            const auto verdict = color_core(k, core, coloring);
            if (verdict != Feasibility::Colorable) return verdict;
        }
        for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
            std::vector<bool> taken(static_cast<std::size_t>(k), false);
            for (auto w = adj_[*it].find_first(); w != Bits::npos; w = adj_[*it].find_next(w)) {
                if (coloring[w] >= 0) taken[coloring[w]] = true;
            }
            coloring[*it] = static_cast<int>(std::find(taken.begin(), taken.end(), false) - taken.begin());
        }
        return Feasibility::Colorable;
    }

private:
    Feasibility color_core(int k, const Bits& core, std::vector<int>& coloring) {
        const std::size_t n = adj_.size();
        const std::size_t size = core.count();

        // Every color class is independent, so |core| <= k * alpha(core).
        std::vector<Bits> complement(n, Bits(n));
        for (auto v = core.find_first(); v != Bits::npos; v = core.find_next(v)) {
            complement[v] = core - adj_[v];
            complement[v].reset(v);
        }
        MaxClique independent(complement, deadline_);
        const auto alpha = independent.solve(core, {}).size();
        if (deadline_.flagged()) return Feasibility::TimedOut;
        if (size > static_cast<std::size_t>(k) * alpha) return Feasibility::NotColorable;

        MaxClique cliques(adj_, deadline_);
        const auto clique = cliques.solve(core, {});
        if (deadline_.flagged()) return Feasibility::TimedOut;
        if (clique.size() > static_cast<std::size_t>(k)) return Feasibility::NotColorable;

        k_ = k;
        members_.clear();
        for (auto v = core.find_first(); v != Bits::npos; v = core.find_next(v)) members_.push_back(v);
        color_ = &coloring;
        blocked_.assign(n, std::vector<int>(static_cast<std::size_t>(k), 0));
        saturation_.assign(n, 0);
        free_degree_.assign(n, 0);
        for (auto v : members_) free_degree_[v] = (adj_[v] & core).count();
        core_ = core;

        // The clique is precolored 0..q-1; this fixes the color symmetry.
        int used = 0;
        for (auto v : clique) assign(v, used++);
        const bool found = search(size - clique.size(), used);
        if (deadline_.flagged()) return Feasibility::TimedOut;
        return found ? Feasibility::Colorable : Feasibility::NotColorable;
    }

    void assign(std::size_t v, int c) {
        (*color_)[v] = c;
        const Bits around = adj_[v] & core_;
        for (auto w = around.find_first(); w != Bits::npos; w = around.find_next(w)) {
            if (blocked_[w][c]++ == 0) ++saturation_[w];
            --free_degree_[w];
        }
    }

    void unassign(std::size_t v) {
        const int c = (*color_)[v];
        (*color_)[v] = -1;
        const Bits around = adj_[v] & core_;
        for (auto w = around.find_first(); w != Bits::npos; w = around.find_next(w)) {
            if (--blocked_[w][c] == 0) --saturation_[w];
            ++free_degree_[w];
        }
    }

    bool search(std::size_t remaining, int used) {
        if (remaining == 0) return true;
        if (deadline_.expired()) return false;
        // DSATUR: most saturated vertex, then most uncolored neighbors.
        std::size_t pick = adj_.size();
        for (auto v : members_) {
            if ((*color_)[v] >= 0) continue;
            if (pick == adj_.size() || saturation_[v] > saturation_[pick] ||
                (saturation_[v] == saturation_[pick] && free_degree_[v] > free_degree_[pick])) {
                pick = v;
            }
        }
        const int limit = std::min(used + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (blocked_[pick][c] != 0) continue;
            assign(pick, c);
            const bool done = search(remaining - 1, std::max(used, c + 1));
            if (done) return true;
            unassign(pick);
            if (deadline_.flagged()) return false;
        }
        return false;
    }

    const std::vector<Bits>& adj_;
    Deadline& deadline_;
    int k_ = 0;
    Bits core_;
    std::vector<std::size_t> members_;
    std::vector<int>* color_ = nullptr;
    std::vector<std::vector<int>> blocked_;
    std::vector<int> saturation_;
    std::vector<std::size_t> free_degree_;
};

/// Sequential DSATUR heuristic; returns colors per vertex.
std::vector<int> dsatur_greedy(const std::vector<Bits>& adj) {
    const std::size_t n = adj.size();
    std::vector<int> color(n, -1);
    std::vector<std::vector<bool>> seen(n);
    std::vector<int> saturation(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (pick == n || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && adj[v].count() > adj[pick].count())) {
                pick = v;
            }
        }
        int c = 0;
        while (static_cast<std::size_t>(c) < seen[pick].size() && seen[pick][c]) ++c;
        color[pick] = c;
        for (auto w = adj[pick].find_first(); w != Bits::npos; w = adj[pick].find_next(w)) {
            if (seen[w].size() <= static_cast<std::size_t>(c)) seen[w].resize(c + 1, false);
            if (!seen[w][c]) {
                seen[w][c] = true;
                ++saturation[w];
            }
        }
    }
    return color;
}

}  // namespace

ExactResult exact_optical_index(const Tree& t, std::int64_t budget_ms) {
    if (t.order() < 2) throw DegenerateTree("optical index needs n >= 2");
    if (budget_ms < 0) throw std::invalid_argument("budget must be non-negative");
    const auto started = Clock::now();
    Deadline deadline(budget_ms);

    const auto graph = conflict_graph(t);
    const std::size_t n = graph.paths.size();
    std::vector<Bits> adj(n, Bits(n));
    for (std::size_t v = 0; v < n; ++v) {
        for (auto w : graph.adjacency[v]) adj[v].set(w);
    }

    ExactResult result;
    result.budget_ms = budget_ms;
    result.witness = PathColoring(t.order());

    // Any per-edge group is a clique; the largest one has size pi.
    const auto& heaviest = *std::max_element(graph.per_edge_groups.begin(), graph.per_edge_groups.end(),
                                             [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<std::size_t> clique(heaviest.begin(), heaviest.end());
    {
        Bits everything(n);
        everything.set();
        MaxClique search(adj, deadline);
        clique = search.solve(everything, clique);
    }
    result.lower = static_cast<std::int64_t>(clique.size());
    for (auto v : clique) result.clique.push_back(graph.paths[v]);

    auto best = dsatur_greedy(adj);
    result.upper = *std::max_element(best.begin(), best.end()) + 1;

    ColoringSearch search(adj, deadline);
    while (result.lower < result.upper && !deadline.flagged()) {
        std::vector<int> attempt;
        const auto verdict = search.run(static_cast<int>(result.upper - 1), attempt);
        if (verdict == Feasibility::Colorable) {
            best = std::move(attempt);
            result.upper = *std::max_element(best.begin(), best.end()) + 1;
        } else if (verdict == Feasibility::NotColorable) {
            result.lower = result.upper;
        }
    }
    for (std::size_t v = 0; v < n; ++v) result.witness.set(graph.paths[v], best[v]);
    result.exact = result.lower == result.upper;
    result.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
    return result;
}

LabeledTreeEnumerator::LabeledTreeEnumerator(Vertex n, Vertex cap) : n_(n) {
    if (n < 2 || n > cap) {
        throw std::out_of_range("labeled tree enumeration needs 2 <= n <= " + std::to_string(cap) +
                                ", got " + std::to_string(n));
    }
    sequence_.assign(static_cast<std::size_t>(n - 2), 0);
    total_ = 1;
    for (Vertex i = 0; i < n - 2; ++i) total_ *= static_cast<std::uint64_t>(n);
}

std::optional<Tree> LabeledTreeEnumerator::next() {
    if (emitted_ == total_) return std::nullopt;
    Tree tree = n_ == 2 ? Tree(2, {{0, 1}}) : decode_pruefer(n_, sequence_);
    ++emitted_;
    // Odometer increment, last position fastest.
    for (auto it = sequence_.rbegin(); it != sequence_.rend(); ++it) {
        if (++*it < n_) break;
        *it = 0;
    }
    return tree;
}

}  // namespace optidx
