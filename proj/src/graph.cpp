#include "ecckit/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ecckit {

namespace {

inline int popcount64(std::uint64_t w) { return std::popcount(w); }

// Calls fn(vertex) for every set bit of a packed row.
template <typename F>
void for_each_bit(const std::uint64_t* row, int words, F&& fn) {
    for (int wi = 0; wi < words; ++wi) {
        std::uint64_t w = row[wi];
        while (w) {
            int b = std::countr_zero(w);
            fn(wi * 64 + b);
            w &= w - 1;
        }
    }
}

} // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> edge_list) : Graph(n) {
    if (n < 1)
        throw input_error("graph needs at least one vertex");
    for (const auto& [u, v] : edge_list) {
        if (u == v)
            throw input_error("self-loop at vertex " + std::to_string(u));
        check_vertex(u);
        check_vertex(v);
        set_edge(u, v);
    }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edge_list)
    : Graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size())) {}

Graph Graph::from_rows(int n, std::vector<std::uint64_t> rows) {
    Graph g(n);
    if (n < 1)
        throw input_error("graph needs at least one vertex");
    if (rows.size() != static_cast<std::size_t>(n) * g.words_)
        throw input_error("row data has wrong size");
    g.bits_ = std::move(rows);
    for (int v = 0; v < n; ++v) {
        if (g.adjacent(v, v))
            throw input_error("self-loop at vertex " + std::to_string(v));
        for (int u = v + 1; u < n; ++u)
            if (g.adjacent(u, v) != g.adjacent(v, u))
                throw input_error("adjacency rows are not symmetric");
        // bits past n must be clear
        for (int wi = 0; wi < g.words_; ++wi) {
            std::uint64_t w = g.row(v)[wi];
            int hi = std::min(64, n - wi * 64);
            std::uint64_t mask = hi >= 64 ? ~0ull : ((hi <= 0) ? 0ull : ((1ull << hi) - 1));
            if (w & ~mask)
                throw input_error("adjacency bits set past vertex range");
        }
    }
    return g;
}

void Graph::set_edge(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw input_error("vertex " + std::to_string(v) + " out of range [0," +
                          std::to_string(n_ - 1) + "]");
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint64_t w : bits_)
        total += popcount64(w);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for_each_bit(row(u), words_, [&](int v) {
            if (v > u)
                out.emplace_back(u, v);
        });
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for_each_bit(row(v), words_, [&](int u) { out.push_back(u); });
    return out;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int wi = 0; wi < words_; ++wi)
        d += popcount64(row(v)[wi]);
    return d;
}

Graph Graph::complement() const {
    Graph out(n_);
    for (int v = 0; v < n_; ++v) {
        std::uint64_t* dst = out.bits_.data() + static_cast<std::size_t>(v) * words_;
        const std::uint64_t* src = row(v);
        for (int wi = 0; wi < words_; ++wi) {
            int hi = std::min(64, n_ - wi * 64);
            std::uint64_t mask = hi >= 64 ? ~0ull : ((hi <= 0) ? 0ull : ((1ull << hi) - 1));
            dst[wi] = ~src[wi] & mask;
        }
        dst[v >> 6] &= ~(1ull << (v & 63));
    }
    return out;
}

Diameter Graph::diameter() const {
    std::vector<std::uint64_t> visited(words_), frontier(words_), next(words_);
    int best = 0;
    for (int s = 0; s < n_; ++s) {
        std::fill(visited.begin(), visited.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        visited[s >> 6] = frontier[s >> 6] = 1ull << (s & 63);
        int reached = 1, depth = 0;
        while (true) {
            std::fill(next.begin(), next.end(), 0);
            for (int wi = 0; wi < words_; ++wi) {
                std::uint64_t w = frontier[wi];
                while (w) {
                    int v = wi * 64 + std::countr_zero(w);
                    w &= w - 1;
                    const std::uint64_t* r = row(v);
                    for (int wj = 0; wj < words_; ++wj)
                        next[wj] |= r[wj];
                }
            }
            bool any = false;
            for (int wi = 0; wi < words_; ++wi) {
                next[wi] &= ~visited[wi];
                if (next[wi])
                    any = true;
            }
            if (!any)
                break;
            ++depth;
            for (int wi = 0; wi < words_; ++wi) {
                visited[wi] |= next[wi];
                reached += popcount64(next[wi]);
            }
            frontier.swap(next);
        }
        if (reached != n_)
            return Diameter::disconnected();
        best = std::max(best, depth);
    }
    return Diameter::finite(best);
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<bool> seen(n_, false);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n_; ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for_each_bit(row(v), words_, [&](int u) {
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> Graph::non_neighborhood(int x) const {
    check_vertex(x);
    std::vector<int> out;
    const std::uint64_t* r = row(x);
    for (int v = 0; v < n_; ++v) {
        if (v == x)
            continue;
        if (!((r[v >> 6] >> (v & 63)) & 1u))
            out.push_back(v);
    }
    return out;
}

bool Graph::is_clique(std::span<const int> s) const {
    for (int v : s)
        check_vertex(v);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j])
                continue;
            if (!adjacent(s[i], s[j]))
                return false;
        }
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
    if (s.empty())
        throw input_error("induced subgraph needs a nonempty vertex set");
    std::vector<int> verts(s.begin(), s.end());
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.vertex_count())
            throw input_error("vertex " + std::to_string(verts[i]) + " out of range");
        if (i > 0 && verts[i] == verts[i - 1])
            throw input_error("duplicate vertex " + std::to_string(verts[i]) + " in set");
    }
    int m = static_cast<int>(verts.size());
    std::vector<int> to_sub(g.vertex_count(), -1);
    for (int i = 0; i < m; ++i)
        to_sub[verts[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(verts[i], verts[j]))
                edges.emplace_back(i, j);
    return InducedSubgraph{Graph(m, edges), std::move(to_sub), std::move(verts)};
}

VerificationReport verify_cover(const Graph& g, const CliqueCover& cover) {
    if (!(g == cover.host))
        throw precondition_error("cover was built for a different host graph");
    VerificationReport report;
    report.size = cover.cliques.size();
    for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
        if (!g.is_clique(cover.cliques[i])) {
            report.non_clique_index = i;
            return report;
        }
    }
    // mark covered pairs, then find the lexicographically first uncovered edge
    int n = g.vertex_count();
    std::vector<bool> covered(static_cast<std::size_t>(n) * n, false);
    for (const Clique& c : cover.cliques)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                covered[static_cast<std::size_t>(c[i]) * n + c[j]] = true;
                covered[static_cast<std::size_t>(c[j]) * n + c[i]] = true;
            }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) && !covered[static_cast<std::size_t>(u) * n + v]) {
                report.first_uncovered_edge = {u, v};
                return report;
            }
    report.valid = true;
    return report;
}

namespace {

// Exact maximum independent set on <= 64 vertices, branch and bound.
struct MisSearch {
    std::vector<std::uint64_t> closed; // closed neighborhoods
    int best = 0;

    void go(std::uint64_t cand, int size) {
        if (size + popcount64(cand) <= best)
            return;
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        int v = std::countr_zero(cand);
        go(cand & ~closed[v], size + 1);
        go(cand & ~(1ull << v), size);
    }
};

} // namespace

int independence_number(const Graph& g) {
    int n = g.vertex_count();
    if (g.edge_count() == n * (n - 1) / 2)
        return n == 0 ? 0 : 1; // complete graph
    if (is_alpha_two(g))
        return 2;
    if (n > 32)
        throw capacity_error("exact independence number capped at 32 vertices (n=" +
                             std::to_string(n) + ")");
    MisSearch search;
    search.closed.resize(n);
    for (int v = 0; v < n; ++v) {
        std::uint64_t cn = 1ull << v;
        for (int u = 0; u < n; ++u)
            if (g.adjacent(v, u))
                cn |= 1ull << u;
        search.closed[v] = cn;
    }
    std::uint64_t all = n >= 64 ? ~0ull : ((1ull << n) - 1);
    search.go(all, 0);
    return search.best;
}

bool is_alpha_two(const Graph& g) {
    // alpha(g) = 2  <=>  complement has an edge and no triangle
    int n = g.vertex_count();
    bool has_nonedge = false;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v))
                continue;
            has_nonedge = true;
            for (int w = v + 1; w < n; ++w)
                if (!g.adjacent(u, w) && !g.adjacent(v, w))
                    return false; // independent triple
        }
    }
    return has_nonedge;
}

} // namespace ecckit
