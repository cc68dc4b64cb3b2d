#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ecckit/extension.hpp"
#include "ecckit/graph.hpp"
#include "ecckit/structure.hpp"

namespace ecckit {

/// Partition of the vertices around a dominating edge uv: U adjacent to u
/// only, V adjacent to v only, W adjacent to both. Roles are swapped when
/// needed so that |U| >= |V|; U and V are cliques.
struct UvwPartition {
    int u = -1;
    int v = -1;
    std::vector<int> U, V, W;
};

/// Everything the theorem-1 pipeline decided: the partition, the reduced
/// graph, the clique families, and the size budget of the counting formula.
struct Theorem1Plan {
    UvwPartition partition;
    InducedSubgraph g_prime;
    std::vector<Clique> d_cliques; // cover of G', lifted to host indices
    std::vector<Clique> w_cliques; // vertex cover of W
    std::vector<Clique> b_cliques; // w_cliques with u,v adjoined
    std::optional<Clique> u_prime;
    std::optional<Clique> v_prime;
    int budget_m = 0;
    bool used_fallback = false;
};

/// Splits the graph around a dominating edge. Throws precondition_error when
/// some vertex is adjacent to neither endpoint (uv not dominating).
UvwPartition partition_uvw(const Graph& g, int u, int v);

/// Cover by the nonempty non-neighborhood cliques; at most n of them.
/// Requires independence number 2 and no dominating edge.
CliqueCover cover_no_dominating(const Graph& g);

/// The four-clique cover for a dominating edge whose removal leaves a
/// complete graph: V(G'), {u,v}, U+W+u, V+W+v.
CliqueCover cover_gprime_complete(const Graph& g, int u, int v);

/// The five-clique cover for a dominating edge whose removal disconnects
/// the rest into two cliques. When U and V share a component the listed
/// assignment cannot work and an equivalent component-based cover of at
/// most five cliques is emitted instead.
CliqueCover cover_gprime_disconnected(const Graph& g, int u, int v);

/// Cover of a diameter-3 graph with independence number 2 by at most
/// ceil((n+1)/2) cliques: the two neighborhoods of a distance-3 pair are
/// disjoint cliques; the smaller side's vertices mop up the cross edges.
CliqueCover cover_diam3(const Graph& g);

/// Cliques of gw whose union is all vertices, at most ceil((n+1)/2) of
/// them: peel a clique containing the lowest-indexed vertex, recurse,
/// with direct handling of the small and disconnected cases. Requires
/// independence number at most 2.
std::vector<Clique> cover_w_vertices(const Graph& gw);

/// Sharper vertex cover, at most ceil(n/2) cliques, valid when gw has at
/// least 4 vertices and is not a 5-cycle: peel a triangle (one always
/// exists here), then recurse as above.
std::vector<Clique> cover_w_vertices_improved(const Graph& gw);

/// Full pipeline for a dominating edge uv with diameter-3 remainder:
/// diameter-3 cover of G' lifted back, W covered and joined with {u,v},
/// plus U+u and V+v when nonempty. Size at most n. The residual small
/// configurations (|U|=|V|=1 with |W|<=3 or W inducing a 5-cycle) are
/// answered by the exact solver with used_fallback set.
std::pair<CliqueCover, Theorem1Plan> cover_theorem1(const Graph& g, int u, int v);

/// Cover for the routes no construction claims: the nonempty
/// non-neighborhood cliques plus a fresh 2-clique for each dominating edge
/// they leave uncovered. Valid for any graph with independence number <= 2;
/// size at most n plus the number of dominating edges.
CliqueCover cover_fallback(const Graph& g);

/// Classifies the graph and runs the construction its route calls for.
/// Throws unsupported_input when the independence number is 3 or more.
std::pair<CliqueCover, StructureReport> cover_dispatch(const Graph& g);

/// cover_dispatch plus whichever per-route extras were produced.
struct DispatchResult {
    CliqueCover cover;
    StructureReport report;
    std::optional<Theorem1Plan> plan;
    std::optional<ExtensionState> extension;
};
DispatchResult cover_dispatch_full(const Graph& g);

} // namespace ecckit
