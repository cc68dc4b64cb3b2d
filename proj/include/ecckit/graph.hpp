#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ecckit/errors.hpp"

namespace ecckit {

/// A vertex set asserted pairwise-adjacent in some host graph.
/// Kept sorted ascending, no duplicates.
using Clique = std::vector<int>;

/// Shortest-path diameter; disconnected graphs have no finite value.
struct Diameter {
    std::optional<int> value;

    static Diameter finite(int v) { return Diameter{v}; }
    static Diameter disconnected() { return Diameter{std::nullopt}; }
    bool is_finite() const { return value.has_value(); }
    bool operator==(const Diameter&) const = default;
};

/// Immutable simple undirected graph over vertices 0..n-1.
/// Adjacency is stored as word-packed rows so that neighborhood
/// union/intersection are word-wise operations.
class Graph {
public:
    /// Builds from an edge list. Pairs are deduplicated and symmetrized.
    /// Throws input_error on self-loops or out-of-range endpoints.
    Graph(int n, std::span<const std::pair<int, int>> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    /// Builds directly from packed rows (must be symmetric, no diagonal).
    static Graph from_rows(int n, std::vector<std::uint64_t> rows);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    /// All edges (u,v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    Graph complement() const;
    Diameter diameter() const;
    std::vector<std::vector<int>> connected_components() const;

    /// Vertices distinct from and non-adjacent to x, ascending.
    std::vector<int> non_neighborhood(int x) const;

    /// True iff all pairs in s are adjacent; vacuously true for |s| <= 1.
    bool is_clique(std::span<const int> s) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

    // Low-level row access for the bit-parallel algorithms.
    int row_words() const { return words_; }
    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }

private:
    Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}
    void set_edge(int u, int v);
    void check_vertex(int v) const;

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

/// Result of taking the subgraph induced by a vertex set: the new graph,
/// plus both directions of the index mapping so cliques found in the
/// subgraph can be lifted back to the host.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_sub;  // host vertex -> sub index, -1 when absent
    std::vector<int> to_host; // sub index -> host vertex
};

/// Induced subgraph on a nonempty vertex set (throws input_error otherwise).
/// Vertices of the result are the members of s in ascending order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);

/// A list of cliques claimed to cover every edge of a host graph.
struct CliqueCover {
    Graph host;
    std::vector<Clique> cliques;
};

/// Outcome of checking a cover against its host: the first violation found,
/// scanning cliques by index and then edges lexicographically.
struct VerificationReport {
    bool valid = false;
    std::optional<std::pair<int, int>> first_uncovered_edge;
    std::optional<std::size_t> non_clique_index;
    std::size_t size = 0;
};

/// Checks that every listed set is a clique of g and every edge of g is
/// covered. Violations are report content, not errors. Throws
/// precondition_error if the cover was built for a different graph.
VerificationReport verify_cover(const Graph& g, const CliqueCover& cover);

/// Exact maximum independent set size. Complete and alpha=2 graphs are
/// answered directly; anything else runs an exact search capped at n <= 32
/// (capacity_error beyond that).
int independence_number(const Graph& g);

/// True iff the independence number is exactly 2, decided in O(n^3) via the
/// complement: at least one non-edge and no independent triple.
bool is_alpha_two(const Graph& g);

} // namespace ecckit
