// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Optional argv[1]: path to the CLI binary, used to check
// byte-identical output of the report and sweep subcommands.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "optidx/oracle.hpp"
#include "optidx/palette.hpp"
#include "optidx/report.hpp"
#include "optidx/routing.hpp"
#include "optidx/wavelength.hpp"
#include "support.hpp"

using namespace optidx;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::uint64_t cayley(Vertex n) {
    std::uint64_t total = 1;
    for (Vertex i = 0; i + 2 < n; ++i) total *= static_cast<std::uint64_t>(n);
    return total;
}

std::string tree_text(const Tree& t) { return format_edge_list(t); }

// 1. Every labeled tree with 2 <= n <= 8: proper, pi <= colors, 2 colors < 3 pi.
Outcome exhaustive_bound() {
    Outcome out;
    const auto start = Clock::now();
    std::uint64_t trees = 0;
    std::uint64_t expected = 0;
    for (Vertex n = 2; n <= 8; ++n) {
        expected += cayley(n);
        LabeledTreeEnumerator all(n);
        while (auto t = all.next()) {
            ++trees;
            try {
                const auto c = color_all_to_all(*t);
                const auto pi = forwarding_index(*t);
                const auto k = static_cast<std::int64_t>(c.colors_used());
                if (!verify_proper(*t, c).empty()) out.fail("improper coloring of " + tree_text(*t));
                if (k < pi || 2 * k >= 3 * pi) out.fail("bound failed on " + tree_text(*t));
            } catch (const std::exception& e) {
                out.fail(std::string("exception: ") + e.what());
            }
        }
    }
    const double secs = seconds_since(start);
    if (trees != expected) out.fail("enumerated " + std::to_string(trees) + " trees, expected " + std::to_string(expected));
    if (secs > 600) out.fail("took " + std::to_string(secs) + " s (limit 600)");
    if (out.pass) out.detail = std::to_string(trees) + " trees, " + std::to_string(secs) + " s";
    return out;
}

// 2. Every labeled tree with 2 <= n <= 7: exact oracle closes within 200 ms,
//    pi <= w <= colors and 2 w < 3 pi.
Outcome exhaustive_sandwich() {
    Outcome out;
    const auto start = Clock::now();
    std::uint64_t trees = 0;
    for (Vertex n = 2; n <= 7; ++n) {
        LabeledTreeEnumerator all(n);
        while (auto t = all.next()) {
            ++trees;
            const auto pi = forwarding_index(*t);
            const auto colors = static_cast<std::int64_t>(color_all_to_all(*t).colors_used());
            const auto exact = exact_optical_index(*t, 200);
            if (!exact.exact) {
                out.fail("oracle did not close on " + tree_text(*t));
                continue;
            }
            if (!verify_proper(*t, exact.witness).empty()) out.fail("improper witness on " + tree_text(*t));
            const auto w = exact.upper;
            if (w < pi || w > colors || 2 * w >= 3 * pi) out.fail("sandwich failed on " + tree_text(*t));
        }
    }
    const double secs = seconds_since(start);
    if (secs > 1800) out.fail("took " + std::to_string(secs) + " s (limit 1800)");
    if (out.pass) out.detail = std::to_string(trees) + " trees, " + std::to_string(secs) + " s";
    return out;
}

// 3. Spider closed forms: pi = (k-1)t^2 + t, and w = k t^2 where computed.
Outcome spider_closed_forms() {
    Outcome out;
    for (std::int64_t k : {3, 5, 7}) {
        for (std::int64_t t : {1, 2, 3, 5}) {
            const auto pi = forwarding_index(generate(FamilySpec::spider(k, t)));
            if (pi != (k - 1) * t * t + t) {
                out.fail("pi(spider " + std::to_string(k) + "," + std::to_string(t) + ") = " + std::to_string(pi));
            }
        }
    }
    struct Case {
        std::int64_t k, t, budget_ms;
    };
    std::string timings;
    for (auto [k, t, budget] : {Case{3, 1, 10'000}, Case{3, 2, 10'000}, Case{5, 1, 10'000}, Case{5, 2, 120'000}}) {
        const auto result = exact_optical_index(generate(FamilySpec::spider(k, t)), budget);
        const auto label = "spider(" + std::to_string(k) + "," + std::to_string(t) + ")";
        if (!result.exact) {
            out.fail(label + " exact oracle did not close in " + std::to_string(budget) + " ms");
        } else if (result.upper != k * t * t) {
            out.fail(label + " w = " + std::to_string(result.upper));
        }
        timings += " " + label + "=" + std::to_string(result.elapsed_ms) + "ms";
    }
    if (out.pass) out.detail = "pi for 12 spiders, w for 4 spiders:" + timings;
    return out;
}

// 4. spider(3,50): proper and 7500 <= colors <= 7574, under 60 s.
Outcome spider_tightness() {
    Outcome out;
    const auto start = Clock::now();
    const Tree t = generate(FamilySpec::spider(3, 50));
    const auto c = color_all_to_all(t);
    const auto proper = verify_proper(t, c).empty();
    const double secs = seconds_since(start);
    const auto k = c.colors_used();
    if (t.order() != 151 || path_count(t.order()) != 11'325) out.fail("unexpected spider size");
    if (!proper) out.fail("improper coloring");
    if (k < 7500 || k > 7574) out.fail("colors_used = " + std::to_string(k));
    if (secs > 60) out.fail("took " + std::to_string(secs) + " s");
    if (out.pass) out.detail = "colors_used = " + std::to_string(k) + ", " + std::to_string(secs) + " s";
    return out;
}

// 5. 1000 seeded random trees, n <= 200: brute-force loads equal the profile
//    on every edge, and pi <= floor(n^2/4).
Outcome load_equivalence() {
    Outcome out;
    SplitMix64 sizes(20'240'601);
    std::uint64_t edges_checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto n = static_cast<Vertex>(2 + sizes.below(199));
        const Tree t = random_tree(n, 5'000 + static_cast<std::uint64_t>(i));
        const auto profile = edge_load_profile(t);
        for (std::size_t e = 0; e < t.edges().size(); ++e) {
            ++edges_checked;
            if (brute_force_edge_load(t, t.edges()[e]) != profile.loads[e]) {
                out.fail("load mismatch on edge " + to_string(t.edges()[e]) + " of random tree " + std::to_string(i));
            }
        }
        if (profile.pi > static_cast<std::int64_t>(n) * n / 4) out.fail("pi above n^2/4 on random tree " + std::to_string(i));
    }
    if (out.pass) out.detail = "1000 trees, " + std::to_string(edges_checked) + " edges";
    return out;
}

bool edge_coloring_ok(const KdColoring& c) {
    const int d = c.d;
    if (c.classes != d - 1 || static_cast<int>(c.class_edges.size()) != d - 1) return false;
    for (const auto& cls : c.class_edges) {
        std::vector<int> hits(static_cast<std::size_t>(d), 0);
        for (auto [i, j] : cls) {
            ++hits[i];
            ++hits[j];
        }
        // Perfect matching: every vertex covered exactly once.
        if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) return false;
    }
    for (int v = 0; v < d; ++v) {
        std::vector<bool> seen(static_cast<std::size_t>(d - 1), false);
        for (int w = 0; w < d; ++w) {
            if (w == v) continue;
            const int cls = c.edge_color(v, w);
            if (cls < 0 || cls >= d - 1 || seen[cls]) return false;
            seen[cls] = true;
        }
    }
    return true;
}

bool total_coloring_ok(const KdColoring& c) {
    const int d = c.d;
    if (c.classes != d || static_cast<int>(c.vertex_class.size()) != d) return false;
    std::vector<bool> vertex_seen(static_cast<std::size_t>(d), false);
    for (int v = 0; v < d; ++v) {
        const int cls = c.vertex_class[v];
        if (cls < 0 || cls >= d || vertex_seen[cls]) return false;
        vertex_seen[cls] = true;
        std::vector<bool> seen(static_cast<std::size_t>(d), false);
        seen[cls] = true;
        for (int w = 0; w < d; ++w) {
            if (w == v) continue;
            const int e = c.edge_color(v, w);
            if (e < 0 || e >= d || seen[e]) return false;
            seen[e] = true;
        }
    }
    for (int t = 0; t < d; ++t) {
        if (static_cast<int>(c.class_edges[t].size()) != (d - 1) / 2) return false;
    }
    return true;
}

bool schedule_ok(int k, int d, const std::vector<std::vector<std::pair<int, int>>>& rows) {
    std::vector<std::vector<int>> hits(static_cast<std::size_t>(k + 1), std::vector<int>(static_cast<std::size_t>(d + 1), 0));
    for (const auto& row : rows) {
        std::vector<bool> is(static_cast<std::size_t>(k + 1), false);
        std::vector<bool> js(static_cast<std::size_t>(d + 1), false);
        for (auto [i, j] : row) {
            if (i < 1 || i > k || j < k + 2 || j > d || is[i] || js[j]) return false;
            is[i] = js[j] = true;
            ++hits[i][j];
        }
    }
    for (int i = 1; i <= k; ++i) {
        for (int j = k + 2; j <= d; ++j) {
            if (hits[i][j] != 1) return false;
        }
    }
    return true;
}

// 6. Palette helpers.
Outcome palette_helpers() {
    Outcome out;
    for (int d = 2; d <= 50; d += 2) {
        if (!edge_coloring_ok(kd_edge_coloring(d))) out.fail("kd_edge_coloring(" + std::to_string(d) + ")");
    }
    for (int d = 3; d <= 51; d += 2) {
        if (!total_coloring_ok(kd_total_coloring(d))) out.fail("kd_total_coloring(" + std::to_string(d) + ")");
    }
    int schedules = 0;
    for (int d = 3; d <= 25; ++d) {
        for (int k = 1; k <= d - k - 1; ++k) {
            ++schedules;
            if (!schedule_ok(k, d, diagonal_schedule(k, d))) {
                out.fail("diagonal_schedule(" + std::to_string(k) + "," + std::to_string(d) + ")");
            }
        }
    }
    if (out.pass) out.detail = "25 edge colorings, 25 total colorings, " + std::to_string(schedules) + " schedules";
    return out;
}

// Branch sizes that send the top-level split through a branch move.
std::vector<int> move_sizes(SplitMix64& rng, bool degree_four) {
    while (true) {
        const int d = degree_four ? 4 : 5 + static_cast<int>(rng.below(5));
        std::vector<int> sizes(static_cast<std::size_t>(d));
        for (int i = 1; i < d; ++i) sizes[i] = 1 + static_cast<int>(rng.below(6));
        std::sort(sizes.begin() + 1, sizes.end(), std::greater<>());
        const int floor = std::max(sizes[1], sizes[d - 2] + sizes[d - 1]);
        sizes[0] = floor + static_cast<int>(rng.below(4));
        int a = 1;
        for (int i = 1; i < d; ++i) a += sizes[i];
        if (4 * sizes[0] < 3 * a) return sizes;
    }
}

// 7. Exchange property on trees routed through a branch move.
Outcome exchange_property() {
    Outcome out;
    SplitMix64 rng(77);
    int trees = 0;
    int degree_four = 0;
    int failures = 0;
    std::string first_failure;
    for (std::uint64_t seed = 0; trees < 500; ++seed) {
        const bool four = seed % 2 == 0;
        const Tree t = testing::rooted_branches(move_sizes(rng, four), seed);
        const auto s = split_structure(t);
        const auto kind = classify(t, s);
        if (kind != ColoringCase::Degree4Move && kind != ColoringCase::HighDegreeMove) continue;
        ++trees;
        if (kind == ColoringCase::Degree4Move) ++degree_four;
        const int d = s.degree();
        const Vertex keep = s.attach_points[d - 2];
        const Vertex moved_root = s.attach_points[d - 1];
        const Tree moved = move_branch(t, s.root, keep, moved_root);
        const auto sub = color_with_split(moved, split_at(moved, s.root, s.attach_points[0]));
        const auto pulled = move_branch_and_exchange(t, s.root, keep, moved_root, sub);
        const bool proper = verify_proper(t, pulled).empty();
        if (!proper || pulled.colors_used() != sub.colors_used()) {
            if (failures++ == 0) {
                first_failure = std::string(to_string(kind)) + " on " + std::to_string(t.order()) +
                                "-vertex tree (seed " + std::to_string(seed) + ")";
            }
        }
    }
    if (failures > 0) out.fail(std::to_string(failures) + " of 500 pull-backs improper; first: " + first_failure);
    if (out.pass) {
        out.detail = "500 trees (" + std::to_string(degree_four) + " degree-4, " + std::to_string(500 - degree_four) +
                     " degree >= 5)";
    }
    return out;
}

std::string capture(const std::string& command) {
    std::array<char, 4096> buf{};
    std::string output;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) throw std::runtime_error("cannot run " + command);
    while (auto got = std::fread(buf.data(), 1, buf.size(), pipe.get())) output.append(buf.data(), got);
    return output;
}

// 8. Report and sweep output is byte-identical across runs.
Outcome determinism(const std::string& cli) {
    Outcome out;
    auto twice = [&](const std::string& label, const std::function<std::string()>& run) {
        const auto first = run();
        const auto second = run();
        if (first.empty() || first != second) out.fail(label + " differs between runs");
    };
    const auto p4 = parse_edge_list("4\n0 1\n1 2\n2 3\n");
    twice("report P_4", [&] { return report_json(build_report(p4, {})); });
    twice("report spider(3,2) exact", [&] {
        return report_json(build_report(generate(FamilySpec::spider(3, 2)), {.exact = true, .budget_ms = 10'000}));
    });
    twice("report random:60,9", [&] { return report_json(build_report(generate(FamilySpec::random(60, 9)), {})); });
    twice("sweep spider", [&] { return sweep_csv(parse_sweep("spider", {"3,5", "1..3"}, 1)); });
    twice("sweep random", [&] { return sweep_csv(parse_sweep("random", {"10..30"}, 42)); });
    int cli_runs = 0;
    if (!cli.empty()) {
        for (const std::string args : {"report --gen spider:3,2 --exact", "report --gen random:40 --seed 3",
                                       "report --gen path:9 --format csv", "sweep path 2..12",
                                       "sweep spider 3,5 1..3 --exact", "sweep random 5..25 --seed 8 --format json"}) {
            twice("cli " + args, [&] { return capture(cli + " " + args); });
            ++cli_runs;
        }
    }
    if (out.pass) out.detail = "5 library outputs, " + std::to_string(cli_runs) + " CLI invocations";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"exhaustive bound check, 2 <= n <= 8", exhaustive_bound},
        {"exhaustive optimality sandwich, 2 <= n <= 7", exhaustive_sandwich},
        {"spider closed forms", spider_closed_forms},
        {"spider(3,50) asymptotic tightness", spider_tightness},
        {"load formula equals brute force", load_equivalence},
        {"palette helpers", palette_helpers},
        {"branch-move exchange property", exchange_property},
        {"report and sweep determinism", [&] { return determinism(cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << ": " << criteria[i].name << " -- "
                  << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
