#include <set>

#include "doctest.h"
#include "optidx/oracle.hpp"
#include "optidx/wavelength.hpp"
#include "support.hpp"

using namespace optidx;

TEST_CASE("verify_proper accepts constructed colorings") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Tree t = random_tree(static_cast<Vertex>(2 + seed % 12), seed);
        const auto c = color_all_to_all(t);
        CHECK(verify_proper(t, c).empty());
        CHECK(testing::naive_proper(t, c));
    }
}

TEST_CASE("verify_proper reports forced conflicts on P_3") {
    const Tree p3 = generate(FamilySpec::path(3));
    PathColoring c(3);
    c.set(0, 1, 0);
    c.set(0, 2, 0);
    c.set(1, 2, 0);
    const auto v = verify_proper(p3, c);
    std::set<Edge> edges;
    for (const auto& x : v) edges.insert(x.edge);
    CHECK(edges == std::set<Edge>{{0, 1}, {1, 2}});
    REQUIRE(v.size() == 2);
    CHECK(v[0] == Violation{{0, 1}, {0, 1}, {0, 2}});
    CHECK(v[1] == Violation{{1, 2}, {0, 2}, {1, 2}});
}

TEST_CASE("verify_proper agrees with the pairwise check") {
    SplitMix64 rng(11);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Tree t = random_tree(7, seed);
        PathColoring c(7);
        for (Vertex x = 0; x < 7; ++x) {
            for (Vertex y = x + 1; y < 7; ++y) c.set(x, y, static_cast<Color>(rng.below(12)));
        }
        CHECK(verify_proper(t, c).empty() == testing::naive_proper(t, c));
    }
}

TEST_CASE("verify_proper distinguishes incomplete colorings") {
    const Tree p4 = generate(FamilySpec::path(4));
    PathColoring c(4);
    c.set(0, 1, 0);
    try {
        verify_proper(p4, c);
        FAIL("expected IncompleteColoring");
    } catch (const IncompleteColoring& e) {
        CHECK(e.missing() == PathId{0, 2});
    }
    CHECK_THROWS_AS(verify_proper(p4, PathColoring(5)), std::invalid_argument);
}

TEST_CASE("a 4-coloring of P_4 is accepted") {
    const Tree p4 = generate(FamilySpec::path(4));
    const auto exact = exact_optical_index(p4, 1000);
    CHECK(exact.exact);
    CHECK(exact.upper == 4);
    CHECK(verify_proper(p4, exact.witness).empty());
    CHECK(exact.witness.colors_used() == 4);
}

TEST_CASE("greedy colorings") {
    CHECK(greedy_coloring(generate(FamilySpec::path(2)), GreedyOrder::Lex).colors_used() == 1);
    CHECK(greedy_coloring(generate(FamilySpec::path(3)), GreedyOrder::Lex).colors_used() == 2);

    const Tree spider = generate(FamilySpec::spider(3, 2));
    const auto longest = greedy_coloring(spider, GreedyOrder::LongestFirst);
    CHECK(verify_proper(spider, longest).empty());
    CHECK(longest.colors_used() >= 12);

    for (auto order : {GreedyOrder::Lex, GreedyOrder::LongestFirst, GreedyOrder::LoadWeighted}) {
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            const Tree t = random_tree(20, seed);
            const auto c = greedy_coloring(t, order);
            CHECK(c.total());
            CHECK(verify_proper(t, c).empty());
            CHECK(c.colors_used() >= forwarding_index(t));
        }
    }
    CHECK(parse_greedy_order("lex") == GreedyOrder::Lex);
    CHECK(parse_greedy_order("longest-first") == GreedyOrder::LongestFirst);
    CHECK(parse_greedy_order("load-weighted") == GreedyOrder::LoadWeighted);
    CHECK_THROWS_AS(parse_greedy_order("random"), std::invalid_argument);
}

TEST_CASE("exact optical index on known trees") {
    const auto star = exact_optical_index(generate(FamilySpec::spider(3, 1)), 10'000);
    CHECK(star.exact);
    CHECK(star.upper == 3);

    const auto spider = exact_optical_index(generate(FamilySpec::spider(3, 2)), 10'000);
    CHECK(spider.exact);
    CHECK(spider.lower == 12);
    CHECK(spider.upper == 12);

    const auto p5 = exact_optical_index(generate(FamilySpec::path(5)), 10'000);
    CHECK(p5.exact);
    CHECK(p5.upper == 6);

    CHECK_THROWS_AS(exact_optical_index(Tree(), 100), DegenerateTree);
}

TEST_CASE("exact optical index matches plain backtracking on small trees") {
    for (Vertex n = 2; n <= 6; ++n) {
        LabeledTreeEnumerator all(n);
        int checked = 0;
        while (auto t = all.next()) {
            // Every labeled tree on <= 5 vertices, a sample on 6.
            if (n == 6 && ++checked % 7 != 0) continue;
            const auto exact = exact_optical_index(*t, 5'000);
            REQUIRE(exact.exact);
            CHECK(exact.lower == exact.upper);
            CHECK(exact.upper == testing::naive_chromatic(*t));
            CHECK(verify_proper(*t, exact.witness).empty());
            CHECK(static_cast<std::int64_t>(exact.witness.colors_used()) == exact.upper);
            CHECK(static_cast<std::int64_t>(exact.clique.size()) <= exact.lower);
        }
    }
}

TEST_CASE("exact oracle clique is a clique") {
    const Tree t = generate(FamilySpec::spider(4, 2));
    const auto exact = exact_optical_index(t, 10'000);
    CHECK(exact.clique.size() >= static_cast<std::size_t>(forwarding_index(t)));
    for (std::size_t i = 0; i < exact.clique.size(); ++i) {
        for (std::size_t j = i + 1; j < exact.clique.size(); ++j) {
            CHECK(paths_conflict(t, exact.clique[i], exact.clique[j]));
        }
    }
}

TEST_CASE("exact oracle reports bounds when the budget runs out") {
    const auto r = exact_optical_index(generate(FamilySpec::spider(7, 3)), 0);
    CHECK(r.lower <= r.upper);
    CHECK(r.lower >= forwarding_index(generate(FamilySpec::spider(7, 3))));
    CHECK(verify_proper(generate(FamilySpec::spider(7, 3)), r.witness).empty());
    CHECK(r.budget_ms == 0);
}

TEST_CASE("labeled tree enumeration") {
    auto count = [](Vertex n) {
        LabeledTreeEnumerator all(n);
        std::set<std::vector<Edge>> seen;
        while (auto t = all.next()) seen.insert({t->edges().begin(), t->edges().end()});
        return std::make_pair(seen.size(), all.total());
    };
    CHECK(count(2) == std::make_pair(std::size_t{1}, std::uint64_t{1}));
    CHECK(count(3) == std::make_pair(std::size_t{3}, std::uint64_t{3}));
    CHECK(count(4) == std::make_pair(std::size_t{16}, std::uint64_t{16}));
    CHECK(count(6) == std::make_pair(std::size_t{1296}, std::uint64_t{1296}));
    CHECK(LabeledTreeEnumerator(8).total() == 262144);

    CHECK_THROWS_AS(LabeledTreeEnumerator(9), std::out_of_range);
    CHECK_THROWS_AS(LabeledTreeEnumerator(1), std::out_of_range);
    CHECK(LabeledTreeEnumerator(9, 9).total() == 4782969);
}
