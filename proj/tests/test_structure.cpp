#include <doctest.h>

#include <algorithm>

#include "ecckit/gen.hpp"
#include "ecckit/structure.hpp"

#include "fixtures.hpp"
#include "naive.hpp"

using namespace ecckit;

namespace {

// Rotate/reflect a cycle to start at its minimum vertex with the smaller
// second element, so witnesses compare up to symmetry.
std::vector<int> canonical_cycle(std::vector<int> c) {
    auto mn = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), mn, c.end());
    if (c.size() > 2 && c[1] > c.back()) {
        std::reverse(c.begin() + 1, c.end());
    }
    return c;
}

} // namespace

TEST_CASE("dominating edge test") {
    CHECK(!is_dominating_edge(fixtures::c5(), 0, 1)); // vertex 3 misses both
    CHECK(is_dominating_edge(fixtures::diamond(), 1, 2));
    CHECK(is_dominating_edge(fixtures::k2(), 0, 1)); // vacuous
    CHECK_THROWS_AS(is_dominating_edge(fixtures::c5(), 0, 2), input_error);
    CHECK_THROWS_AS(is_dominating_edge(fixtures::c5(), 0, 0), input_error);
}

TEST_CASE("dominating edge lists") {
    CHECK(dominating_edges(fixtures::c5()).empty());
    CHECK(dominating_edges(fixtures::diamond()).size() == 5);
    CHECK(dominating_edges(fixtures::oct()).size() == 12);

    // agreement with the plain re-check, lexicographic order
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = gen_alpha_two({7, 0.5, seed, GenKind::Alpha2});
        auto edges = dominating_edges(g);
        CHECK(std::is_sorted(edges.begin(), edges.end()));
        std::vector<std::pair<int, int>> expect;
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v)
                if (g.adjacent(u, v) && naive::dominating(g, u, v))
                    expect.emplace_back(u, v);
        CHECK(edges == expect);
    }
}

TEST_CASE("double tops on the fixtures") {
    CHECK(find_double_tops(fixtures::oct()).empty());
    CHECK(find_double_tops(fixtures::diamond()).empty()); // fewer than 5 vertices
    CHECK(!contains_incompatible_double_top(fixtures::oct()));
}

TEST_CASE("double tops agree with the quintuple-loop scan on all alpha-2 graphs up to 5") {
    for (int n = 4; n <= 5; ++n) {
        AlphaTwoEnumerator en(n);
        while (auto g = en.next()) {
            CHECK(find_double_tops(*g) == naive::double_tops(*g, false));
            CHECK(find_double_tops(*g, true) == naive::double_tops(*g, true));
        }
    }
}

TEST_CASE("a smallest alpha-2 host with an incompatible double top exists by n=6") {
    bool found = false;
    for (int n = 5; n <= 6 && !found; ++n) {
        AlphaTwoEnumerator en(n);
        while (auto g = en.next()) {
            auto mine = find_double_tops(*g, true);
            CHECK(mine == naive::double_tops(*g, true));
            if (!mine.empty()) {
                found = true;
                CHECK(contains_incompatible_double_top(*g));
                break;
            }
        }
    }
    CHECK(found);
}

TEST_CASE("vertices with at most one non-neighbor admit no double top") {
    CHECK(find_double_tops(fixtures::oct()).empty());
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        // complement is a partial matching, so every vertex misses at most one
        int n = 6 + static_cast<int>(rng.next_below(5));
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.next_below(i + 1)]);
        std::vector<std::pair<int, int>> nonedges;
        for (int i = 0; i + 1 < n; i += 2)
            if (rng.next_unit() < 0.7)
                nonedges.emplace_back(perm[i], perm[i + 1]);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                bool missing = false;
                for (auto [a, b] : nonedges)
                    if ((a == u && b == v) || (a == v && b == u))
                        missing = true;
                if (!missing)
                    edges.emplace_back(u, v);
            }
        CHECK(find_double_tops(Graph(n, edges)).empty());
    }
}

TEST_CASE("supercycle detection on the fixtures") {
    auto witness = has_supercycle(fixtures::oct());
    REQUIRE(witness.has_value());
    CHECK(canonical_cycle(witness->cycle) == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(naive::is_supercycle(fixtures::oct(), witness->cycle));

    CHECK(!has_supercycle(fixtures::diamond())); // the 4-cycle lacks a chord
    CHECK(!has_supercycle(fixtures::c5()));      // no dominating edges at all

    CHECK_THROWS_AS(has_supercycle(fixtures::oct(), 1), budget_error);
}

TEST_CASE("a short supercycle is found fast even when no cycle passes the low vertices") {
    // dense dominating subgraph whose short witnesses all avoid vertex 0;
    // the shortest-length-first search must not drown in vertex 0's subtree
    Graph g = gen_alpha_two({24, 0.35, 1595, GenKind::Alpha2});
    REQUIRE(dominating_edges(g).size() > 50);
    auto witness = has_supercycle(g, 2'000'000ull);
    REQUIRE(witness.has_value());
    CHECK(witness->cycle.size() == 4);
    CHECK(naive::is_supercycle(g, witness->cycle));
}

TEST_CASE("supercycle existence agrees with full cycle enumeration up to n=6") {
    for (int n = 4; n <= 6; ++n) {
        AlphaTwoEnumerator en(n);
        while (auto g = en.next()) {
            auto witness = has_supercycle(*g);
            CHECK(witness.has_value() == naive::supercycle_exists(*g));
            if (witness)
                CHECK(naive::is_supercycle(*g, witness->cycle));
        }
    }
}

TEST_CASE("classify routes the fixtures") {
    StructureReport c5 = classify(fixtures::c5());
    CHECK(c5.route == Route::NoDominatingEdge);
    CHECK(c5.alpha == 2);
    CHECK(c5.connected);
    CHECK(c5.dominating_edges.empty());

    StructureReport t1 = classify(fixtures::t1());
    CHECK(t1.route == Route::Theorem1);
    REQUIRE(t1.chosen_dominating_edge.has_value());
    CHECK(*t1.chosen_dominating_edge == std::pair<int, int>{4, 5});

    StructureReport oct = classify(fixtures::oct());
    CHECK(oct.route == Route::Fallback);
    CHECK(oct.has_supercycle);
    CHECK(oct.dominating_edges.size() == 12);
    // the fallback is forced: no dominating edge leaves diameter 3 behind
    for (auto [u, v] : oct.dominating_edges) {
        std::vector<int> rest;
        for (int x = 0; x < 6; ++x)
            if (x != u && x != v)
                rest.push_back(x);
        Diameter d = induced_subgraph(fixtures::oct(), rest).graph.diameter();
        REQUIRE(d.is_finite());
        CHECK(*d.value <= 2);
    }

    CHECK(classify(fixtures::k4()).route == Route::Trivial);
    CHECK(classify(fixtures::p4()).route == Route::GPrimeDisconnected);
    CHECK(classify(fixtures::two_triangles()).route == Route::Disconnected);
    CHECK(classify(fixtures::gprime_complete_host()).route == Route::GPrimeComplete);
}

TEST_CASE("classify is deterministic") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gen_alpha_two({8, 0.5, seed, GenKind::Alpha2});
        StructureReport a = classify(g);
        StructureReport b = classify(g);
        CHECK(a.route == b.route);
        CHECK(a.alpha == b.alpha);
        CHECK(a.dominating_edges == b.dominating_edges);
        CHECK(a.chosen_dominating_edge == b.chosen_dominating_edge);
        CHECK(a.has_supercycle == b.has_supercycle);
        CHECK(a.has_incompatible_double_top == b.has_incompatible_double_top);
    }
}
