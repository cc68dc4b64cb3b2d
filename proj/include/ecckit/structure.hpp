#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ecckit/graph.hpp"

namespace ecckit {

/// A 5-vertex path x0..x4 whose four edges are all dominating and whose
/// middle vertex is adjacent to neither endpoint. Incompatible when the
/// second and fourth vertices are non-adjacent.
struct DoubleTop {
    std::array<int, 5> path;
    bool incompatible;
    bool operator==(const DoubleTop&) const = default;
};

/// A cycle of at least four dominating edges in which every two vertices at
/// distance two along the cycle are adjacent.
struct Supercycle {
    std::vector<int> cycle;
};

/// Which cover construction a graph is routed to.
enum class Route {
    Trivial,
    Disconnected,
    NoDominatingEdge,
    GPrimeComplete,
    GPrimeDisconnected,
    Theorem1,
    Theorem8Eligible,
    Fallback,
};

const char* route_name(Route r);

/// Classification of a graph: the structural predicates plus the route.
struct StructureReport {
    int alpha = 0;
    Diameter diameter;
    bool connected = false;
    std::vector<std::pair<int, int>> dominating_edges;
    bool has_incompatible_double_top = false;
    bool has_supercycle = false;
    Route route = Route::Trivial;
    std::optional<std::pair<int, int>> chosen_dominating_edge;
};

/// Adjacency rows restricted to dominating edges. Computed once and shared
/// by the detectors so the per-edge domination test is not repeated.
struct DominatingRows {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    static DominatingRows of(const Graph& g);
    bool get(int u, int v) const {
        return (bits[static_cast<std::size_t>(u) * words + (v >> 6)] >> (v & 63)) & 1u;
    }
    const std::uint64_t* row(int u) const {
        return bits.data() + static_cast<std::size_t>(u) * words;
    }
};

/// True iff every vertex other than u,v is adjacent to u or to v.
/// Throws input_error when uv is not an edge.
bool is_dominating_edge(const Graph& g, int u, int v);

/// All dominating edges, lexicographic.
std::vector<std::pair<int, int>> dominating_edges(const Graph& g);

/// All double tops, deduplicated against their reversals and sorted by
/// path tuple. With incompatible_only, keeps only the incompatible ones.
std::vector<DoubleTop> find_double_tops(const Graph& g, bool incompatible_only = false);

/// Existence check with early exit; equivalent to
/// !find_double_tops(g, true).empty().
bool contains_incompatible_double_top(const Graph& g);

/// Depth-first search for one supercycle witness over the dominating-edge
/// subgraph, chords checked incrementally. Throws budget_error when the
/// node-expansion budget runs out rather than truncating silently.
std::optional<Supercycle> has_supercycle(const Graph& g,
                                         std::uint64_t node_budget = 100'000'000ull);

/// Routes a graph through the typology. Priority: Trivial (n <= 3 or
/// alpha <= 1), Disconnected, NoDominatingEdge, then over dominating edges
/// uv with G' = g minus {u,v}: GPrimeComplete if some G' is complete,
/// GPrimeDisconnected if some G' is disconnected, Theorem1 if some G' has
/// diameter 3 (that edge is recorded), Theorem8Eligible when no supercycle
/// and no incompatible double top exist, otherwise Fallback.
StructureReport classify(const Graph& g);

} // namespace ecckit
