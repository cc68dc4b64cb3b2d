#pragma once

#include <cstdint>
#include <vector>

#include "ecckit/graph.hpp"

namespace ecckit {

/// Certified minimum edge clique cover.
struct ExactResult {
    int ecc = 0;
    CliqueCover witness;
    std::uint64_t nodes_explored = 0;
};

struct ExactOptions {
    int max_n = 12;                          // hard solver limit is 22
    std::uint64_t node_budget = 20'000'000ull;
};

/// All inclusion-maximal cliques, pivoted recursion, output sorted
/// lexicographically. Capped at n <= 32 (capacity_error beyond).
std::vector<Clique> maximal_cliques(const Graph& g);

/// Exact minimum edge clique cover by branch and bound over maximal cliques
/// (an optimal cover of maximal cliques always exists: any clique extends to
/// a maximal one). Branches on the lexicographically smallest uncovered edge;
/// prunes with a greedy upper bound and a disjoint-edge lower bound.
/// Throws capacity_error over the cap and budget_error when the node budget
/// is exhausted -- never a partial answer presented as optimal.
ExactResult exact_ecc(const Graph& g, const ExactOptions& opts = {});

} // namespace ecckit
