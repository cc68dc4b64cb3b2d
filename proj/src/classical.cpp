#include "ecckit/classical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ecckit/oracle.hpp"

namespace ecckit {

namespace {

int ceil_half(int x) { return (x + 1) / 2; }

bool has_independent_triple(const Graph& g) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v))
                continue;
            for (int w = v + 1; w < n; ++w)
                if (!g.adjacent(u, w) && !g.adjacent(v, w))
                    return true;
        }
    return false;
}

// The 5-cycle is the unique connected 2-regular graph on five vertices.
bool is_five_cycle(const Graph& g) {
    if (g.vertex_count() != 5)
        return false;
    for (int v = 0; v < 5; ++v)
        if (g.degree(v) != 2)
            return false;
    return g.diameter().is_finite();
}

Clique sorted_union(std::initializer_list<std::vector<int>> parts) {
    Clique out;
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Connected components of the subgraph induced by rem (sorted).
std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<int>& rem) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<bool> member(g.vertex_count(), false);
    for (int v : rem)
        member[v] = true;
    for (int s : rem) {
        if (seen[s])
            continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : rem)
                if (!seen[u] && member[u] && g.adjacent(v, u)) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// First bipartition of rem into two nonempty cliques, by ascending subset
// mask over rem's positions. Exists whenever rem is connected, not complete,
// has at most 4 vertices and no independent triple.
std::optional<std::pair<Clique, Clique>> two_clique_split(const Graph& g,
                                                          const std::vector<int>& rem) {
    int k = static_cast<int>(rem.size());
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        Clique a, b;
        for (int i = 0; i < k; ++i)
            ((mask >> i) & 1u ? a : b).push_back(rem[i]);
        if (g.is_clique(a) && g.is_clique(b))
            return std::make_pair(a, b);
    }
    return std::nullopt;
}

Clique greedy_clique_from_lowest(const Graph& g, const std::vector<int>& rem) {
    Clique c{rem.front()};
    for (std::size_t i = 1; i < rem.size(); ++i) {
        int v = rem[i];
        bool ok = true;
        for (int m : c)
            if (!g.adjacent(m, v)) {
                ok = false;
                break;
            }
        if (ok)
            c.push_back(v);
    }
    return c;
}

// Lemma-12-style recursion over a vertex subset of gw.
std::vector<Clique> cover_w_rec(const Graph& gw, std::vector<int> rem) {
    std::vector<Clique> out;
    while (!rem.empty()) {
        auto comps = components_within(gw, rem);
        if (comps.size() > 2)
            throw precondition_error("vertex set splits into three components; "
                                     "independence number exceeds 2");
        if (comps.size() == 2) {
            for (auto& comp : comps) {
                if (!gw.is_clique(comp))
                    throw precondition_error("a disconnected part is not a clique; "
                                             "independence number exceeds 2");
                out.push_back(std::move(comp));
            }
            return out;
        }
        if (gw.is_clique(rem)) {
            out.push_back(rem);
            return out;
        }
        if (rem.size() <= 4) {
            auto split = two_clique_split(gw, rem);
            if (!split)
                throw precondition_error("no two-clique split of a small part; "
                                         "independence number exceeds 2");
            out.push_back(split->first);
            out.push_back(split->second);
            return out;
        }
        Clique peeled = greedy_clique_from_lowest(gw, rem);
        rem = set_minus(rem, peeled);
        out.push_back(std::move(peeled));
    }
    return out;
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> v(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i)
        v[i] = i;
    return v;
}

void check_vertex_cover(const Graph& gw, const std::vector<Clique>& cliques, int bound,
                        const char* what) {
    std::vector<bool> hit(gw.vertex_count(), false);
    for (const Clique& c : cliques)
        for (int v : c)
            hit[v] = true;
    for (int v = 0; v < gw.vertex_count(); ++v)
        if (!hit[v])
            throw std::logic_error(std::string(what) + ": vertex left uncovered");
    if (static_cast<int>(cliques.size()) > bound)
        throw std::logic_error(std::string(what) + ": clique count exceeds its bound");
}

std::optional<int> first_triangle_vertex(const Graph& g, Clique& triangle_out) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v))
                continue;
            for (int w = v + 1; w < n; ++w)
                if (g.adjacent(u, w) && g.adjacent(v, w)) {
                    triangle_out = {u, v, w};
                    return u;
                }
        }
    return std::nullopt;
}

} // namespace

UvwPartition partition_uvw(const Graph& g, int u, int v) {
    if (!is_dominating_edge(g, u, v))
        throw precondition_error("edge " + std::to_string(u) + "," + std::to_string(v) +
                                 " is not dominating: some vertex is adjacent to neither end");
    UvwPartition part;
    part.u = u;
    part.v = v;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (x == u || x == v)
            continue;
        bool au = g.adjacent(x, u), av = g.adjacent(x, v);
        if (au && av)
            part.W.push_back(x);
        else if (au)
            part.U.push_back(x);
        else
            part.V.push_back(x);
    }
    if (part.U.size() < part.V.size()) {
        std::swap(part.u, part.v);
        std::swap(part.U, part.V);
    }
    return part;
}

CliqueCover cover_no_dominating(const Graph& g) {
    if (!is_alpha_two(g))
        throw precondition_error("cover requires independence number 2");
    if (!dominating_edges(g).empty())
        throw precondition_error("graph has a dominating edge");
    CliqueCover cover{g, {}};
    for (int x = 0; x < g.vertex_count(); ++x) {
        Clique c = g.non_neighborhood(x);
        if (!c.empty())
            cover.cliques.push_back(std::move(c));
    }
    return cover;
}

CliqueCover cover_gprime_complete(const Graph& g, int u, int v) {
    UvwPartition part = partition_uvw(g, u, v);
    std::vector<int> rest;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (x != part.u && x != part.v)
            rest.push_back(x);
    if (!g.is_clique(rest))
        throw precondition_error("removing the edge endpoints must leave a complete graph");
    CliqueCover cover{g, {}};
    if (!rest.empty())
        cover.cliques.push_back(rest);
    cover.cliques.push_back(sorted_union({{part.u, part.v}}));
    cover.cliques.push_back(sorted_union({part.U, part.W, {part.u}}));
    cover.cliques.push_back(sorted_union({part.V, part.W, {part.v}}));
    return cover;
}

CliqueCover cover_gprime_disconnected(const Graph& g, int u, int v) {
    UvwPartition part = partition_uvw(g, u, v);
    std::vector<int> rest;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (x != part.u && x != part.v)
            rest.push_back(x);
    auto comps = components_within(g, rest);
    if (comps.size() < 2)
        throw precondition_error("removing the edge endpoints must disconnect the rest");
    if (comps.size() > 2)
        throw precondition_error("three components left; independence number exceeds 2");
    for (const auto& comp : comps)
        if (!g.is_clique(comp))
            throw precondition_error("a component is not a clique; independence number "
                                     "exceeds 2");
    const auto& c1 = comps[0];
    const auto& c2 = comps[1];

    auto assemble = [&](int a, int b) {
        // a goes with the first component, b with the second
        std::vector<Clique> sets;
        sets.push_back(sorted_union({c1, {a}}));
        sets.push_back(sorted_union({c2, {b}}));
        Clique w1 = set_intersect(part.W, c1);
        Clique w2 = set_intersect(part.W, c2);
        if (!w1.empty())
            sets.push_back(sorted_union({w1, {b}}));
        if (!w2.empty())
            sets.push_back(sorted_union({w2, {a}}));
        sets.push_back(sorted_union({{a, b}}));
        return sets;
    };
    for (auto [a, b] : {std::pair{part.u, part.v}, std::pair{part.v, part.u}}) {
        auto sets = assemble(a, b);
        bool ok = true;
        for (const Clique& s : sets)
            if (!g.is_clique(s)) {
                ok = false;
                break;
            }
        if (ok)
            return CliqueCover{g, std::move(sets)};
    }

    // U and V nonempty inside the same component: cover that component as a
    // whole, hang u and v on their own neighborhoods, and fold the other
    // component (all of it inside W) onto the edge uv.
    const auto& cx = set_intersect(part.U, c1) == part.U ? c1 : c2;
    const auto& cy = &cx == &c1 ? c2 : c1;
    Clique wx = set_intersect(part.W, cx);
    std::vector<Clique> sets;
    sets.push_back(cx);
    sets.push_back(sorted_union({cy, {part.u, part.v}}));
    sets.push_back(sorted_union({part.U, wx, {part.u}}));
    sets.push_back(sorted_union({part.V, wx, {part.v}}));
    for (const Clique& s : sets)
        if (!g.is_clique(s))
            throw precondition_error("same-component cover hit a non-clique; "
                                     "independence number exceeds 2");
    return CliqueCover{g, std::move(sets)};
}

CliqueCover cover_diam3(const Graph& g) {
    if (!is_alpha_two(g))
        throw precondition_error("cover requires independence number 2");
    if (!(g.diameter() == Diameter::finite(3)))
        throw precondition_error("cover requires diameter exactly 3");
    int n = g.vertex_count();
    // lexicographically first pair at distance 3
    int a = -1, b = -1;
    for (int s = 0; s < n && a < 0; ++s) {
        std::vector<int> dist(n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int y = 0; y < n; ++y)
                if (g.adjacent(x, y) && dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        for (int t = s + 1; t < n; ++t)
            if (dist[t] == 3) {
                a = s;
                b = t;
                break;
            }
    }
    if (a < 0)
        throw std::logic_error("diameter-3 graph without a distance-3 pair");
    Clique A = g.neighbors(a);
    Clique B = g.neighbors(b);
    if (!set_intersect(A, B).empty())
        throw std::logic_error("neighborhoods of a distance-3 pair must be disjoint");
    if (static_cast<int>(A.size() + B.size()) != n - 2)
        throw std::logic_error("neighborhoods of a distance-3 pair must fill the rest");
    if (!g.is_clique(A) || !g.is_clique(B))
        throw std::logic_error("neighborhood sides must be cliques when alpha is 2");
    const Clique& small = A.size() <= B.size() ? A : B;
    const Clique& large = A.size() <= B.size() ? B : A;
    CliqueCover cover{g, {}};
    cover.cliques.push_back(sorted_union({A, {a}}));
    cover.cliques.push_back(sorted_union({B, {b}}));
    for (int x : small) {
        Clique c{x};
        for (int y : large)
            if (g.adjacent(x, y))
                c.push_back(y);
        std::sort(c.begin(), c.end());
        cover.cliques.push_back(std::move(c));
    }
    if (static_cast<int>(cover.cliques.size()) > ceil_half(n + 1))
        throw std::logic_error("diameter-3 cover exceeded its bound");
    return cover;
}

std::vector<Clique> cover_w_vertices(const Graph& gw) {
    if (has_independent_triple(gw))
        throw precondition_error("vertex cover by cliques requires independence number <= 2");
    auto cliques = cover_w_rec(gw, all_vertices(gw));
    check_vertex_cover(gw, cliques, ceil_half(gw.vertex_count() + 1), "vertex cover");
    return cliques;
}

std::vector<Clique> cover_w_vertices_improved(const Graph& gw) {
    int m = gw.vertex_count();
    if (has_independent_triple(gw))
        throw precondition_error("vertex cover by cliques requires independence number <= 2");
    if (m < 4)
        throw precondition_error("improved vertex cover needs at least 4 vertices");
    if (is_five_cycle(gw))
        throw precondition_error("improved vertex cover excludes the 5-cycle");
    std::vector<Clique> cliques;
    auto comps = components_within(gw, all_vertices(gw));
    if (comps.size() == 2 && gw.is_clique(comps[0]) && gw.is_clique(comps[1])) {
        cliques = {comps[0], comps[1]};
    } else if (gw.is_clique(all_vertices(gw))) {
        cliques = {all_vertices(gw)};
    } else if (m == 4) {
        auto split = two_clique_split(gw, all_vertices(gw));
        if (!split)
            throw precondition_error("no two-clique split; independence number exceeds 2");
        cliques = {split->first, split->second};
    } else {
        Clique triangle;
        if (!first_triangle_vertex(gw, triangle))
            throw std::logic_error("a triangle must exist here (Ramsey bound)");
        cliques.push_back(triangle);
        for (Clique& c : cover_w_rec(gw, set_minus(all_vertices(gw), triangle)))
            cliques.push_back(std::move(c));
    }
    check_vertex_cover(gw, cliques, ceil_half(m), "improved vertex cover");
    return cliques;
}

std::pair<CliqueCover, Theorem1Plan> cover_theorem1(const Graph& g, int u, int v) {
    if (!is_alpha_two(g))
        throw precondition_error("cover requires independence number 2");
    UvwPartition part = partition_uvw(g, u, v);
    int n = g.vertex_count();
    std::vector<int> rest;
    for (int x = 0; x < n; ++x)
        if (x != part.u && x != part.v)
            rest.push_back(x);
    InducedSubgraph sub = induced_subgraph(g, rest);
    if (!(sub.graph.diameter() == Diameter::finite(3)))
        throw precondition_error("removing the edge endpoints must leave diameter 3");

    int wsize = static_cast<int>(part.W.size());
    Theorem1Plan plan{std::move(part), std::move(sub), {}, {}, {}, {}, {}, 0, false};
    const UvwPartition& p = plan.partition;
    plan.budget_m = ceil_half(n - 1) + ceil_half(wsize + 1) +
                    (p.U.empty() ? 0 : 1) + (p.V.empty() ? 0 : 1);

    // Residual configurations the counting argument leaves to a direct
    // check; all have n <= 9, so the exact solver answers them.
    bool small_case = false;
    if (p.U.size() == 1 && p.V.size() == 1) {
        if (wsize <= 3)
            small_case = true;
        else if (is_five_cycle(induced_subgraph(g, p.W).graph))
            small_case = true;
    }
    if (small_case) {
        plan.used_fallback = true;
        ExactResult exact = exact_ecc(g);
        if (exact.ecc > n)
            throw counterexample_error("exact cover of a residual case exceeded n");
        return {std::move(exact.witness), std::move(plan)};
    }

    CliqueCover dcover = cover_diam3(plan.g_prime.graph);
    for (const Clique& c : dcover.cliques) {
        Clique lifted;
        for (int x : c)
            lifted.push_back(plan.g_prime.to_host[x]);
        std::sort(lifted.begin(), lifted.end());
        plan.d_cliques.push_back(std::move(lifted));
    }
    if (!p.W.empty()) {
        InducedSubgraph wsub = induced_subgraph(g, p.W);
        std::vector<Clique> wcov =
            (wsize >= 4 && !is_five_cycle(wsub.graph)) ? cover_w_vertices_improved(wsub.graph)
                                                       : cover_w_vertices(wsub.graph);
        for (const Clique& c : wcov) {
            Clique lifted;
            for (int x : c)
                lifted.push_back(wsub.to_host[x]);
            std::sort(lifted.begin(), lifted.end());
            plan.b_cliques.push_back(sorted_union({lifted, {p.u, p.v}}));
            plan.w_cliques.push_back(std::move(lifted));
        }
    } else {
        plan.b_cliques.push_back(sorted_union({{p.u, p.v}}));
    }
    if (!p.U.empty())
        plan.u_prime = sorted_union({p.U, {p.u}});
    if (!p.V.empty())
        plan.v_prime = sorted_union({p.V, {p.v}});

    CliqueCover cover{g, {}};
    for (const Clique& c : plan.d_cliques)
        cover.cliques.push_back(c);
    for (const Clique& c : plan.b_cliques)
        cover.cliques.push_back(c);
    if (plan.u_prime)
        cover.cliques.push_back(*plan.u_prime);
    if (plan.v_prime)
        cover.cliques.push_back(*plan.v_prime);
    if (static_cast<int>(cover.cliques.size()) > n)
        throw counterexample_error("theorem-1 cover exceeded n cliques");
    return {std::move(cover), std::move(plan)};
}

CliqueCover cover_fallback(const Graph& g) {
    if (has_independent_triple(g))
        throw precondition_error("fallback cover requires independence number <= 2");
    CliqueCover cover{g, {}};
    for (int x = 0; x < g.vertex_count(); ++x) {
        Clique c = g.non_neighborhood(x);
        if (!c.empty())
            cover.cliques.push_back(std::move(c));
    }
    std::size_t base_count = cover.cliques.size();
    for (auto [u, v] : dominating_edges(g)) {
        bool covered = false;
        for (std::size_t i = 0; i < base_count && !covered; ++i) {
            const Clique& c = cover.cliques[i];
            covered = std::binary_search(c.begin(), c.end(), u) &&
                      std::binary_search(c.begin(), c.end(), v);
        }
        if (!covered)
            cover.cliques.push_back(Clique{u, v});
    }
    return cover;
}

DispatchResult cover_dispatch_full(const Graph& g) {
    StructureReport rep = classify(g);
    if (rep.alpha >= 3)
        throw unsupported_input("independence number " + std::to_string(rep.alpha) +
                                " is outside scope (need alpha <= 2)");
    DispatchResult result{CliqueCover{g, {}}, {}, std::nullopt, std::nullopt};
    switch (rep.route) {
    case Route::Trivial:
        if (rep.alpha <= 1) {
            for (auto& comp : g.connected_components())
                result.cover.cliques.push_back(std::move(comp));
        } else {
            result.cover = exact_ecc(g).witness;
        }
        break;
    case Route::Disconnected: {
        auto comps = g.connected_components();
        for (auto& comp : comps) {
            if (!g.is_clique(comp))
                throw std::logic_error("a component of an alpha-2 graph must be a clique");
            result.cover.cliques.push_back(std::move(comp));
        }
        break;
    }
    case Route::NoDominatingEdge:
        result.cover = cover_no_dominating(g);
        break;
    case Route::GPrimeComplete:
        result.cover = cover_gprime_complete(g, rep.chosen_dominating_edge->first,
                                             rep.chosen_dominating_edge->second);
        break;
    case Route::GPrimeDisconnected:
        if (g.vertex_count() == 4)
            result.cover = exact_ecc(g).witness; // small case checked directly
        else
            result.cover = cover_gprime_disconnected(g, rep.chosen_dominating_edge->first,
                                                     rep.chosen_dominating_edge->second);
        break;
    case Route::Theorem1: {
        auto [cover, plan] = cover_theorem1(g, rep.chosen_dominating_edge->first,
                                            rep.chosen_dominating_edge->second);
        result.cover = std::move(cover);
        result.plan = std::move(plan);
        break;
    }
    case Route::Theorem8Eligible: {
        auto [cover, state] = cover_theorem2(g, /*skip_hypothesis_checks=*/true);
        result.cover = std::move(cover);
        result.extension = std::move(state);
        break;
    }
    case Route::Fallback:
        result.cover = cover_fallback(g);
        break;
    }
    result.report = std::move(rep);
    return result;
}

std::pair<CliqueCover, StructureReport> cover_dispatch(const Graph& g) {
    DispatchResult r = cover_dispatch_full(g);
    return {std::move(r.cover), std::move(r.report)};
}

} // namespace ecckit
