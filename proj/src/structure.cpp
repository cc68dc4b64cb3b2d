#include "ecckit/structure.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ecckit {

namespace {

bool dominating_unchecked(const Graph& g, int u, int v) {
    int n = g.vertex_count();
    int words = g.row_words();
    const std::uint64_t* ru = g.row(u);
    const std::uint64_t* rv = g.row(v);
    for (int wi = 0; wi < words; ++wi) {
        int hi = std::min(64, n - wi * 64);
        std::uint64_t full = hi >= 64 ? ~0ull : ((1ull << hi) - 1);
        std::uint64_t covered = ru[wi] | rv[wi];
        if ((u >> 6) == wi)
            covered |= 1ull << (u & 63);
        if ((v >> 6) == wi)
            covered |= 1ull << (v & 63);
        if (covered != full)
            return false;
    }
    return true;
}

template <typename F>
void for_each_bit(const std::uint64_t* row, int words, F&& fn) {
    for (int wi = 0; wi < words; ++wi) {
        std::uint64_t w = row[wi];
        while (w) {
            fn(wi * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
}

// Enumerates double tops over precomputed dominating rows. Stops early when
// stop_at_first is set and a matching tuple was seen.
std::vector<DoubleTop> double_tops_impl(const Graph& g, const DominatingRows& dom,
                                        bool incompatible_only, bool stop_at_first) {
    std::vector<DoubleTop> out;
    int n = g.vertex_count();
    for (int x2 = 0; x2 < n; ++x2) {
        std::vector<int> mid;
        for_each_bit(dom.row(x2), dom.words, [&](int v) { mid.push_back(v); });
        for (int x1 : mid) {
            std::vector<int> left;
            for_each_bit(dom.row(x1), dom.words, [&](int v) { left.push_back(v); });
            for (int x3 : mid) {
                if (x1 == x3)
                    continue;
                std::vector<int> right;
                for_each_bit(dom.row(x3), dom.words, [&](int v) { right.push_back(v); });
                for (int x0 : left) {
                    if (x0 == x2 || x0 == x3 || g.adjacent(x0, x2))
                        continue;
                    for (int x4 : right) {
                        if (x4 == x0 || x4 == x1 || x4 == x2 || g.adjacent(x2, x4))
                            continue;
                        std::array<int, 5> path{x0, x1, x2, x3, x4};
                        std::array<int, 5> rev{x4, x3, x2, x1, x0};
                        if (rev < path)
                            continue; // reversal is the canonical one
                        bool incompatible = !g.adjacent(x1, x3);
                        if (incompatible_only && !incompatible)
                            continue;
                        out.push_back(DoubleTop{path, incompatible});
                        if (stop_at_first)
                            return out;
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const DoubleTop& a, const DoubleTop& b) { return a.path < b.path; });
    return out;
}

struct SupercycleSearch {
    const Graph& g;
    const DominatingRows& dom;
    std::uint64_t budget;
    int target_len = 0;
    std::vector<int> path;
    std::vector<bool> on_path;
    std::optional<Supercycle> witness;

    SupercycleSearch(const Graph& g, const DominatingRows& dom, std::uint64_t budget)
        : g(g), dom(dom), budget(budget), on_path(g.vertex_count(), false) {}

    // Paths start at their minimum vertex; reflection is canonicalized by
    // requiring path[1] < path.back() at closing time. The search is depth
    // capped and driven shortest-length-first, so a short witness anywhere
    // is found before any deep dead subtree is exhausted.
    bool dfs() {
        if (budget-- == 0)
            throw budget_error("supercycle search exceeded its node-expansion budget");
        int s = path.front();
        int last = path.back();
        int prev = path.size() >= 2 ? path[path.size() - 2] : -1;
        if (static_cast<int>(path.size()) == target_len) {
            if (path[1] < last && dom.get(last, s) && g.adjacent(prev, s) &&
                g.adjacent(last, path[1])) {
                witness = Supercycle{path};
                return true;
            }
            return false;
        }
        std::vector<int> cand;
        for_each_bit(dom.row(last), dom.words, [&](int w) {
            if (w > s && !on_path[w])
                cand.push_back(w);
        });
        for (int w : cand) {
            if (prev >= 0 && !g.adjacent(prev, w))
                continue; // chord u_{i-1} u_{i+1} must be an edge
            path.push_back(w);
            on_path[w] = true;
            if (dfs())
                return true;
            on_path[w] = false;
            path.pop_back();
        }
        return false;
    }
};

std::optional<Supercycle> supercycle_impl(const Graph& g, const DominatingRows& dom,
                                          std::uint64_t node_budget) {
    int n = g.vertex_count();
    SupercycleSearch search(g, dom, node_budget);
    for (int len = 4; len <= n; ++len) {
        search.target_len = len;
        for (int s = 0; s + len <= n; ++s) {
            search.path.assign(1, s);
            std::fill(search.on_path.begin(), search.on_path.end(), false);
            search.on_path[s] = true;
            if (search.dfs())
                return search.witness;
        }
    }
    return std::nullopt;
}

} // namespace

DominatingRows DominatingRows::of(const Graph& g) {
    DominatingRows d;
    d.n = g.vertex_count();
    d.words = g.row_words();
    d.bits.assign(static_cast<std::size_t>(d.n) * d.words, 0);
    for (int u = 0; u < d.n; ++u)
        for (int v = u + 1; v < d.n; ++v)
            if (g.adjacent(u, v) && dominating_unchecked(g, u, v)) {
                d.bits[static_cast<std::size_t>(u) * d.words + (v >> 6)] |= 1ull << (v & 63);
                d.bits[static_cast<std::size_t>(v) * d.words + (u >> 6)] |= 1ull << (u & 63);
            }
    return d;
}

const char* route_name(Route r) {
    switch (r) {
    case Route::Trivial: return "Trivial";
    case Route::Disconnected: return "Disconnected";
    case Route::NoDominatingEdge: return "NoDominatingEdge";
    case Route::GPrimeComplete: return "GPrimeComplete";
    case Route::GPrimeDisconnected: return "GPrimeDisconnected";
    case Route::Theorem1: return "Theorem1";
    case Route::Theorem8Eligible: return "Theorem8Eligible";
    case Route::Fallback: return "Fallback";
    }
    return "?";
}

bool is_dominating_edge(const Graph& g, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() ||
        !g.adjacent(u, v))
        throw input_error("is_dominating_edge requires an edge of g");
    return dominating_unchecked(g, u, v);
}

std::vector<std::pair<int, int>> dominating_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) && dominating_unchecked(g, u, v))
                out.emplace_back(u, v);
    return out;
}

std::vector<DoubleTop> find_double_tops(const Graph& g, bool incompatible_only) {
    DominatingRows dom = DominatingRows::of(g);
    return double_tops_impl(g, dom, incompatible_only, false);
}

bool contains_incompatible_double_top(const Graph& g) {
    DominatingRows dom = DominatingRows::of(g);
    return !double_tops_impl(g, dom, true, true).empty();
}

std::optional<Supercycle> has_supercycle(const Graph& g, std::uint64_t node_budget) {
    DominatingRows dom = DominatingRows::of(g);
    return supercycle_impl(g, dom, node_budget);
}

StructureReport classify(const Graph& g) {
    StructureReport rep;
    int n = g.vertex_count();
    rep.alpha = independence_number(g);
    rep.diameter = g.diameter();
    rep.connected = rep.diameter.is_finite();

    DominatingRows dom = DominatingRows::of(g);
    for (int u = 0; u < n; ++u)
        for_each_bit(dom.row(u), dom.words, [&](int v) {
            if (v > u)
                rep.dominating_edges.emplace_back(u, v);
        });
    rep.has_incompatible_double_top = !double_tops_impl(g, dom, true, true).empty();
    rep.has_supercycle = supercycle_impl(g, dom, 100'000'000ull).has_value();

    if (n <= 3 || rep.alpha <= 1) {
        rep.route = Route::Trivial;
        return rep;
    }
    if (!rep.connected) {
        rep.route = Route::Disconnected;
        return rep;
    }
    if (rep.dominating_edges.empty()) {
        rep.route = Route::NoDominatingEdge;
        return rep;
    }

    // Per-edge properties of G' = g minus {u,v}, evaluated once.
    struct PrimeInfo {
        bool complete;
        bool disconnected;
        bool diam3;
    };
    std::vector<PrimeInfo> info;
    info.reserve(rep.dominating_edges.size());
    std::vector<int> rest;
    for (auto [u, v] : rep.dominating_edges) {
        rest.clear();
        for (int x = 0; x < n; ++x)
            if (x != u && x != v)
                rest.push_back(x);
        bool complete = true;
        for (std::size_t i = 0; i < rest.size() && complete; ++i)
            for (std::size_t j = i + 1; j < rest.size(); ++j)
                if (!g.adjacent(rest[i], rest[j])) {
                    complete = false;
                    break;
                }
        Diameter d = induced_subgraph(g, rest).graph.diameter();
        info.push_back(PrimeInfo{complete, !d.is_finite(), d == Diameter::finite(3)});
    }
    auto pick = [&](auto pred) -> std::optional<std::pair<int, int>> {
        for (std::size_t i = 0; i < info.size(); ++i)
            if (pred(info[i]))
                return rep.dominating_edges[i];
        return std::nullopt;
    };
    if (auto e = pick([](const PrimeInfo& p) { return p.complete; })) {
        rep.route = Route::GPrimeComplete;
        rep.chosen_dominating_edge = e;
    } else if (auto e2 = pick([](const PrimeInfo& p) { return p.disconnected; })) {
        rep.route = Route::GPrimeDisconnected;
        rep.chosen_dominating_edge = e2;
    } else if (auto e3 = pick([](const PrimeInfo& p) { return p.diam3; })) {
        rep.route = Route::Theorem1;
        rep.chosen_dominating_edge = e3;
    } else if (!rep.has_supercycle && !rep.has_incompatible_double_top) {
        rep.route = Route::Theorem8Eligible;
    } else {
        rep.route = Route::Fallback;
    }
    return rep;
}

} // namespace ecckit
