#include "ecckit/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace ecckit {

namespace {

// Bron-Kerbosch with pivoting over single-word vertex masks (n <= 32).
struct BkSearch {
    std::vector<std::uint64_t> adj;
    std::vector<std::uint64_t> found;

    void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (!p && !x) {
            found.push_back(r);
            return;
        }
        // pivot: vertex of P|X maximizing |P & N(pivot)|, lowest index on ties
        std::uint64_t px = p | x;
        int pivot = -1, best = -1;
        for (std::uint64_t w = px; w; w &= w - 1) {
            int v = std::countr_zero(w);
            int score = std::popcount(p & adj[v]);
            if (score > best) {
                best = score;
                pivot = v;
            }
        }
        std::uint64_t cand = p & ~adj[pivot];
        for (std::uint64_t w = cand; w; w &= w - 1) {
            int v = std::countr_zero(w);
            std::uint64_t bit = 1ull << v;
            run(r | bit, p & adj[v], x & adj[v]);
            p &= ~bit;
            x |= bit;
        }
    }
};

// Edge sets as fixed 256-bit masks; enough for the solver's n <= 22 limit.
struct EdgeBits {
    std::array<std::uint64_t, 4> w{};

    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    bool contains(const EdgeBits& o) const {
        for (int i = 0; i < 4; ++i)
            if (o.w[i] & ~w[i])
                return false;
        return true;
    }
    bool intersects(const EdgeBits& o) const {
        for (int i = 0; i < 4; ++i)
            if (w[i] & o.w[i])
                return true;
        return false;
    }
    EdgeBits operator|(const EdgeBits& o) const {
        EdgeBits r;
        for (int i = 0; i < 4; ++i)
            r.w[i] = w[i] | o.w[i];
        return r;
    }
    EdgeBits and_not(const EdgeBits& o) const {
        EdgeBits r;
        for (int i = 0; i < 4; ++i)
            r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    int first() const {
        for (int i = 0; i < 4; ++i)
            if (w[i])
                return i * 64 + std::countr_zero(w[i]);
        return -1;
    }
    bool empty() const { return !(w[0] | w[1] | w[2] | w[3]); }
};

struct EccSearch {
    std::vector<EdgeBits> clique_edges;          // per candidate clique
    std::vector<std::vector<int>> cliques_with;  // per edge: clique indices
    EdgeBits all_edges;
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;

    std::vector<int> stack;
    std::vector<int> best_set;
    int best = 0;

    int lower_bound(const EdgeBits& uncovered) const {
        // greedy set of edges no single clique contains two of
        EdgeBits blocked; // edges sharing a clique with a chosen edge
        int count = 0;
        EdgeBits rest = uncovered;
        while (!rest.empty()) {
            int e = rest.first();
            rest.w[e >> 6] &= ~(1ull << (e & 63));
            if (blocked.test(e))
                continue;
            ++count;
            for (int c : cliques_with[e])
                blocked = blocked | clique_edges[c];
        }
        return count;
    }

    void branch(const EdgeBits& covered) {
        if (++nodes > budget)
            throw budget_error("exact cover search exceeded its node budget (" +
                               std::to_string(budget) + ")");
        EdgeBits uncovered = all_edges.and_not(covered);
        if (uncovered.empty()) {
            if (static_cast<int>(stack.size()) < best) {
                best = static_cast<int>(stack.size());
                best_set = stack;
            }
            return;
        }
        int depth = static_cast<int>(stack.size());
        if (depth + lower_bound(uncovered) >= best)
            return;
        int e = uncovered.first();
        for (int c : cliques_with[e]) {
            stack.push_back(c);
            branch(covered | clique_edges[c]);
            stack.pop_back();
        }
    }
};

} // namespace

std::vector<Clique> maximal_cliques(const Graph& g) {
    int n = g.vertex_count();
    if (n > 32)
        throw capacity_error("maximal clique enumeration capped at 32 vertices (n=" +
                             std::to_string(n) + ")");
    BkSearch bk;
    bk.adj.resize(n);
    for (int v = 0; v < n; ++v) {
        std::uint64_t m = 0;
        for (int u = 0; u < n; ++u)
            if (g.adjacent(v, u))
                m |= 1ull << u;
        bk.adj[v] = m;
    }
    bk.run(0, n >= 64 ? ~0ull : ((1ull << n) - 1), 0);
    std::vector<Clique> out;
    out.reserve(bk.found.size());
    for (std::uint64_t m : bk.found) {
        Clique c;
        for (std::uint64_t w = m; w; w &= w - 1)
            c.push_back(std::countr_zero(w));
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExactResult exact_ecc(const Graph& g, const ExactOptions& opts) {
    int n = g.vertex_count();
    int cap = std::min(opts.max_n, 22);
    if (n > cap)
        throw capacity_error("exact cover solver capped at " + std::to_string(cap) +
                             " vertices (n=" + std::to_string(n) + ")");
    ExactResult result{0, CliqueCover{g, {}}, 0};
    auto edge_list = g.edges();
    if (edge_list.empty())
        return result;

    std::vector<Clique> cands = maximal_cliques(g);
    int m = static_cast<int>(edge_list.size());
    std::vector<int> edge_index(static_cast<std::size_t>(n) * n, -1);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edge_list[e];
        edge_index[static_cast<std::size_t>(u) * n + v] = e;
        edge_index[static_cast<std::size_t>(v) * n + u] = e;
    }

    EccSearch search;
    search.budget = opts.node_budget;
    search.clique_edges.resize(cands.size());
    search.cliques_with.assign(m, {});
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
        const Clique& c = cands[ci];
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                int e = edge_index[static_cast<std::size_t>(c[i]) * n + c[j]];
                search.clique_edges[ci].set(e);
                search.cliques_with[e].push_back(static_cast<int>(ci));
            }
    }
    for (int e = 0; e < m; ++e)
        search.all_edges.set(e);

    // greedy cover for the initial upper bound and default witness
    {
        EdgeBits covered;
        while (!search.all_edges.and_not(covered).empty()) {
            EdgeBits uncovered = search.all_edges.and_not(covered);
            int pick = -1, gain = -1;
            for (std::size_t ci = 0; ci < cands.size(); ++ci) {
                EdgeBits inter;
                int cnt = 0;
                for (int i = 0; i < 4; ++i)
                    cnt += std::popcount(search.clique_edges[ci].w[i] & uncovered.w[i]);
                if (cnt > gain) {
                    gain = cnt;
                    pick = static_cast<int>(ci);
                }
            }
            search.best_set.push_back(pick);
            covered = covered | search.clique_edges[pick];
        }
        search.best = static_cast<int>(search.best_set.size());
    }

    search.branch(EdgeBits{});

    result.ecc = search.best;
    result.nodes_explored = search.nodes;
    std::vector<Clique> chosen;
    chosen.reserve(search.best_set.size());
    for (int ci : search.best_set)
        chosen.push_back(cands[ci]);
    std::sort(chosen.begin(), chosen.end());
    result.witness.cliques = std::move(chosen);
    return result;
}

} // namespace ecckit
