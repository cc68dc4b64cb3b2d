#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecckit/graph.hpp"

namespace ecckit {

/// Working state of the extension cover: per-vertex base cliques and their
/// extensions, the dominating edges still uncovered, and the labelled extra
/// cliques added by the favourable-vertex loop.
struct ExtensionState {
    Graph host;
    std::vector<Clique> d_cliques; // per-vertex non-neighborhoods, empties kept
    std::vector<Clique> extended;  // per-vertex extended cliques C^x
    std::vector<std::pair<int, int>> uncovered; // dominating edges, lex order

    struct DPrimeEntry {
        Clique clique;
        int label_z;
        int label_twin;
    };
    std::vector<DPrimeEntry> d_prime;
    std::vector<int> used_labels; // sorted; no vertex may label two cliques
    std::vector<std::string> warnings;
};

/// Count of vertices touched by dominating edges the extended cliques miss.
struct FStat {
    int f = 0;
    std::vector<int> excluded_vertices;
};

/// One non-neighborhood clique per vertex (empties retained here, dropped
/// when emitted into a cover). Covers every non-dominating edge and no
/// dominating edge. Requires independence number exactly 2.
std::vector<Clique> base_cliques(const Graph& g);

/// Extends the non-neighborhood of x by every vertex y, taken in ascending
/// order, such that xy is dominating and some dominating edge joins y to the
/// non-neighborhood -- each admitted only if the set stays a clique. A
/// skipped candidate appends a note to warnings.
Clique extend_clique(const Graph& g, int x, std::vector<std::string>* warnings = nullptr);

/// Dominating edges with both endpoints inside no single extended clique.
std::vector<std::pair<int, int>> uncovered_dominating_edges(const Graph& g,
                                                            const std::vector<Clique>& extended);

/// {z} plus the far ends of the uncovered dominating edges at z. Throws
/// precondition_error when no uncovered edge touches z and
/// hypothesis_violation when the set is not a clique.
Clique clique_at(const ExtensionState& state, int z);

/// Lowest favourable vertex with its lowest twin: a vertex z some member w
/// of C_z such that every uncovered dominating edge at w ends inside C_z.
std::optional<std::pair<int, int>> find_favourable(const ExtensionState& state, const Graph& g);

/// The extension cover: emit the nonempty extended cliques, then repeatedly
/// eliminate a favourable vertex into d_prime until no dominating edge is
/// uncovered. Requires independence number 2, no supercycle and no
/// incompatible double top (verified here unless skip_hypothesis_checks).
/// Total size is at most n + floor(n/2). Throws supercycle_present if the
/// loop stalls, which the hypotheses make unreachable.
std::pair<CliqueCover, ExtensionState> cover_theorem2(const Graph& g,
                                                      bool skip_hypothesis_checks = false);

/// f-statistic: the number of vertices in the subgraph induced by the
/// dominating edges the extended cliques leave uncovered; excluded_vertices
/// collects the rest. Drives the n + f/2 bound.
FStat compute_f(const Graph& g, const std::vector<Clique>& extended);

} // namespace ecckit
