#include "ecckit/gen.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ecckit/structure.hpp"

namespace ecckit {

namespace {

// Lexicographic index of the pair (u,v), u < v, among all pairs of 0..n-1.
int pair_index(int n, int u, int v) {
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::pair<int, int> pair_unrank(int n, std::uint64_t k) {
    for (int u = 0; u < n; ++u) {
        std::uint64_t row = static_cast<std::uint64_t>(n - u - 1);
        if (k < row)
            return {u, u + 1 + static_cast<int>(k)};
        k -= row;
    }
    throw std::logic_error("pair rank out of range");
}

// Per-n masks of the triangles among the C(n,2) pair bits. Built once for
// every supported n so concurrent readers share an immutable table.
const std::vector<std::uint64_t>& triangle_masks(int n) {
    static const std::vector<std::vector<std::uint64_t>> cache = [] {
        std::vector<std::vector<std::uint64_t>> table(8);
        for (int k = 3; k <= 7; ++k)
            for (int u = 0; u < k; ++u)
                for (int v = u + 1; v < k; ++v)
                    for (int w = v + 1; w < k; ++w)
                        table[k].push_back((1ull << pair_index(k, u, v)) |
                                           (1ull << pair_index(k, u, w)) |
                                           (1ull << pair_index(k, v, w)));
        return table;
    }();
    return cache.at(n);
}

// Simple mutable adjacency used while a generator assembles a graph.
struct Builder {
    int n;
    std::vector<bool> adj;

    explicit Builder(int n) : n(n), adj(static_cast<std::size_t>(n) * n, false) {}
    bool get(int u, int v) const { return adj[static_cast<std::size_t>(u) * n + v]; }
    void set(int u, int v) {
        adj[static_cast<std::size_t>(u) * n + v] = true;
        adj[static_cast<std::size_t>(v) * n + u] = true;
    }
    void clear(int u, int v) {
        adj[static_cast<std::size_t>(u) * n + v] = false;
        adj[static_cast<std::size_t>(v) * n + u] = false;
    }
    bool any_edge() const {
        for (bool b : adj)
            if (b)
                return true;
        return false;
    }
    Graph complement_graph() const {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!get(u, v))
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }
    Graph graph() const {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (get(u, v))
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }
};

// Deletes the lexicographically smallest edge of the lexicographically first
// triangle until the builder graph is triangle-free.
void delete_triangles(Builder& b) {
    for (;;) {
        bool found = false;
        for (int u = 0; u < b.n && !found; ++u)
            for (int v = u + 1; v < b.n && !found; ++v) {
                if (!b.get(u, v))
                    continue;
                for (int w = v + 1; w < b.n; ++w)
                    if (b.get(u, w) && b.get(v, w)) {
                        b.clear(u, v);
                        found = true;
                        break;
                    }
            }
        if (!found)
            return;
    }
}

Graph gen_alpha_two_impl(int n, double density, SplitMix64& rng) {
    Builder complement(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < density)
                complement.set(u, v);
    delete_triangles(complement);
    if (!complement.any_edge()) {
        auto [a, b] = pair_unrank(n, rng.next_below(static_cast<std::uint64_t>(n) * (n - 1) / 2));
        complement.set(a, b);
    }
    return complement.complement_graph();
}

void check_spec(const GenSpec& spec, GenKind expected, const char* what) {
    if (spec.kind != expected)
        throw precondition_error(std::string(what) + " called with the wrong generator kind");
    if (spec.n < 2)
        throw input_error("generator needs n >= 2");
    if (spec.density < 0.0 || spec.density > 1.0)
        throw input_error("density must lie in [0,1]");
}

} // namespace

AlphaTwoEnumerator::AlphaTwoEnumerator(int n) : n_(n) {
    if (n < 1)
        throw input_error("enumeration needs n >= 1");
    if (n > 7)
        throw capacity_error("exhaustive enumeration capped at 7 vertices (n=" +
                             std::to_string(n) + ")");
    limit_ = 1ull << (n * (n - 1) / 2);
}

bool AlphaTwoEnumerator::mask_is_triangle_free(int n, std::uint64_t mask) {
    for (std::uint64_t tri : triangle_masks(n))
        if ((mask & tri) == tri)
            return false;
    return true;
}

Graph AlphaTwoEnumerator::alpha_two_from_mask(int n, std::uint64_t mask) {
    // adjacency of the complement of the mask graph
    int words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * words, 0);
    auto set = [&](int u, int v) {
        rows[static_cast<std::size_t>(u) * words + (v >> 6)] |= 1ull << (v & 63);
        rows[static_cast<std::size_t>(v) * words + (u >> 6)] |= 1ull << (u & 63);
    };
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if (!((mask >> k) & 1u))
                set(u, v);
    return Graph::from_rows(n, std::move(rows));
}

std::optional<Graph> AlphaTwoEnumerator::next() {
    for (; mask_ < limit_; ++mask_) {
        if (mask_ == 0)
            continue; // the complement must have an edge
        if (mask_is_triangle_free(n_, mask_)) {
            return alpha_two_from_mask(n_, mask_++);
        }
    }
    return std::nullopt;
}

Graph gen_alpha_two(const GenSpec& spec) {
    check_spec(spec, GenKind::Alpha2, "gen_alpha_two");
    SplitMix64 rng(spec.seed);
    return gen_alpha_two_impl(spec.n, spec.density, rng);
}

std::pair<Graph, std::pair<int, int>> gen_theorem1_instance(const GenSpec& spec) {
    check_spec(spec, GenKind::Theorem1, "gen_theorem1_instance");
    if (spec.n < 6)
        throw precondition_error("theorem-1 instances need n >= 6");
    SplitMix64 rng(spec.seed);
    int n = spec.n;
    int m = n - 2;
    int u = m, v = m + 1;
    const int max_attempts = 64;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        Builder b(n);
        // two cliques A = 0..asize-1 and B = asize..m-1
        int asize = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m - 3)));
        for (int i = 0; i < asize; ++i)
            for (int j = i + 1; j < asize; ++j)
                b.set(i, j);
        for (int i = asize; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                b.set(i, j);
        // cross edges avoid vertex 0 and vertex m-1 so they stay at distance 3
        bool any_cross = false;
        for (int i = 1; i < asize; ++i)
            for (int j = asize; j < m - 1; ++j)
                if (rng.next_unit() < spec.density) {
                    b.set(i, j);
                    any_cross = true;
                }
        if (!any_cross) {
            std::uint64_t pick =
                rng.next_below(static_cast<std::uint64_t>(asize - 1) * (m - 1 - asize));
            int i = 1 + static_cast<int>(pick / (m - 1 - asize));
            int j = asize + static_cast<int>(pick % (m - 1 - asize));
            b.set(i, j);
        }
        // apex pair adjacent to everything and to each other
        for (int x = 0; x < m; ++x) {
            b.set(u, x);
            b.set(v, x);
        }
        b.set(u, v);
        Graph g = b.graph();
        StructureReport rep = classify(g);
        if (rep.route == Route::Theorem1 && rep.chosen_dominating_edge == std::make_pair(u, v))
            return {std::move(g), {u, v}};
    }
    throw generation_error("theorem-1 generator failed after " + std::to_string(max_attempts) +
                           " attempts");
}

Graph gen_theorem8_instance(const GenSpec& spec) {
    check_spec(spec, GenKind::Theorem8Eligible, "gen_theorem8_instance");
    SplitMix64 rng(spec.seed);
    const int max_attempts = 500;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        Graph g = gen_alpha_two_impl(spec.n, spec.density, rng);
        if (!has_supercycle(g) && !contains_incompatible_double_top(g))
            return g;
    }
    throw generation_error("no eligible graph after " + std::to_string(max_attempts) +
                           " attempts; try another density or seed");
}

} // namespace ecckit
