#include <doctest.h>

#include <algorithm>

#include "ecckit/classical.hpp"
#include "ecckit/gen.hpp"
#include "ecckit/oracle.hpp"

#include "fixtures.hpp"
#include "naive.hpp"

using namespace ecckit;

TEST_CASE("maximal cliques") {
    auto k4 = maximal_cliques(fixtures::k4());
    REQUIRE(k4.size() == 1);
    CHECK(k4[0] == Clique{0, 1, 2, 3});

    auto c5 = maximal_cliques(fixtures::c5());
    CHECK(c5.size() == 5); // the five edges; no triangles in a 5-cycle
    for (const Clique& c : c5)
        CHECK(c.size() == 2);

    auto dia = maximal_cliques(fixtures::diamond());
    REQUIRE(dia.size() == 2);
    CHECK(dia[0] == Clique{0, 1, 2});
    CHECK(dia[1] == Clique{1, 2, 3});

    CHECK_THROWS_AS(maximal_cliques(Graph(33, {})), capacity_error);
}

TEST_CASE("maximal cliques are maximal and sorted") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = gen_alpha_two({8, 0.45, seed, GenKind::Alpha2});
        auto cliques = maximal_cliques(g);
        CHECK(std::is_sorted(cliques.begin(), cliques.end()));
        for (const Clique& c : cliques) {
            CHECK(g.is_clique(c));
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (std::binary_search(c.begin(), c.end(), v))
                    continue;
                bool extends = true;
                for (int m : c)
                    if (!g.adjacent(m, v)) {
                        extends = false;
                        break;
                    }
                CHECK(!extends);
            }
        }
    }
}

TEST_CASE("exact cover values on the fixtures") {
    CHECK(exact_ecc(fixtures::k4()).ecc == 1);
    CHECK(exact_ecc(fixtures::c5()).ecc == 5);
    CHECK(exact_ecc(fixtures::diamond()).ecc == 2);
    CHECK(exact_ecc(fixtures::oct()).ecc == 4);

    // cross-check against the all-cliques dynamic program
    CHECK(naive::ecc_bruteforce(fixtures::k4()) == 1);
    CHECK(naive::ecc_bruteforce(fixtures::c5()) == 5);
    CHECK(naive::ecc_bruteforce(fixtures::diamond()) == 2);
    CHECK(naive::ecc_bruteforce(fixtures::oct()) == 4);
}

TEST_CASE("exact cover agrees with the dynamic program on all alpha-2 graphs up to 5") {
    for (int n = 2; n <= 5; ++n) {
        AlphaTwoEnumerator en(n);
        while (auto g = en.next()) {
            ExactResult r = exact_ecc(*g);
            CHECK(r.ecc == naive::ecc_bruteforce(*g));
            CHECK(verify_cover(*g, r.witness).valid);
            CHECK(static_cast<int>(r.witness.cliques.size()) == r.ecc);
        }
    }
}

TEST_CASE("exact cover of an edgeless graph is empty") {
    ExactResult r = exact_ecc(Graph(3, {}));
    CHECK(r.ecc == 0);
    CHECK(r.witness.cliques.empty());
}

TEST_CASE("exact cover is invariant under relabeling") {
    SplitMix64 rng(99);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gen_alpha_two({8, 0.5, seed, GenKind::Alpha2});
        int n = g.vertex_count();
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.next_below(i + 1)]);
        std::vector<std::pair<int, int>> relabeled;
        for (auto [u, v] : g.edges())
            relabeled.emplace_back(perm[u], perm[v]);
        CHECK(exact_ecc(Graph(n, relabeled)).ecc == exact_ecc(g).ecc);
    }
}

TEST_CASE("exact cover caps and budgets") {
    CHECK_THROWS_AS(exact_ecc(Graph(13, {})), capacity_error);
    CHECK_THROWS_AS(exact_ecc(fixtures::oct(), {12, 0}), budget_error);
    // a raised cap admits larger graphs
    Graph g = gen_alpha_two({14, 0.5, 3, GenKind::Alpha2});
    ExactResult r = exact_ecc(g, {14, 50'000'000ull});
    CHECK(verify_cover(g, r.witness).valid);
}

TEST_CASE("the exact optimum never exceeds a constructed cover") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        int n = 4 + static_cast<int>(seed % 7);
        Graph g = gen_alpha_two({n, 0.3 + 0.08 * static_cast<double>(seed % 7), seed,
                                 GenKind::Alpha2});
        auto [cover, rep] = cover_dispatch(g);
        REQUIRE(verify_cover(g, cover).valid);
        CHECK(exact_ecc(g).ecc <= static_cast<int>(cover.cliques.size()));
    }
}
