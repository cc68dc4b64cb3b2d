#include <doctest.h>

#include "ecckit/graph.hpp"

#include "naive.hpp"

using namespace ecckit;

// Every graph (not only alpha=2) on up to 7 vertices, against the
// subset-scan independence oracle.
TEST_CASE("core invariants hold for every graph up to n=7") {
    for (int n = 1; n <= 7; ++n) {
        std::uint64_t limit = 1ull << (n * (n - 1) / 2);
        std::uint64_t bad = 0;
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            Graph g = naive::graph_from_mask(n, mask);
            int brute = naive::alpha(g);
            if (independence_number(g) != brute)
                ++bad;
            if (is_alpha_two(g) != (brute == 2))
                ++bad;
            if (!(g.complement().complement() == g))
                ++bad;
            Diameter d = g.diameter();
            if (d.is_finite() && *d.value > n - 1)
                ++bad;
            if (brute == 2 && d.is_finite() && !(*d.value == 2 || *d.value == 3))
                ++bad;
            if (brute <= 2) {
                for (int x = 0; x < n; ++x)
                    if (!g.is_clique(g.non_neighborhood(x)))
                        ++bad;
            }
        }
        CHECK(bad == 0);
    }
}
