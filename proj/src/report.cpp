#include "ecckit/report.hpp"

#include <sstream>

#include <json.hpp>

#include "ecckit/version.hpp"

namespace ecckit {

using ordered_json = nlohmann::ordered_json;

std::pair<int, std::string> route_bound(Route route, const Graph& g) {
    int n = g.vertex_count();
    switch (route) {
    case Route::Theorem8Eligible:
        return {n + n / 2, "3n/2"};
    case Route::Fallback:
        return {n + static_cast<int>(dominating_edges(g).size()), "n+dominating"};
    default:
        return {n, "n"};
    }
}

CoverReport make_cover_report(const Graph& g, const DispatchResult& result,
                              std::optional<int> oracle_ecc, std::int64_t elapsed_ms) {
    CoverReport rep;
    rep.route = route_name(result.report.route);
    rep.n = g.vertex_count();
    rep.edge_count = g.edge_count();
    rep.cover_size = static_cast<int>(result.cover.cliques.size());
    auto [bound, bound_name] = route_bound(result.report.route, g);
    rep.bound = bound;
    rep.bound_name = bound_name;
    rep.valid = verify_cover(g, result.cover).valid;
    if (result.extension) {
        rep.f = compute_f(g, result.extension->extended).f;
        rep.warnings = result.extension->warnings;
        int nonempty = 0;
        for (const Clique& c : result.extension->extended)
            if (!c.empty())
                ++nonempty;
        rep.extended_cliques = nonempty;
        rep.extra_cliques = static_cast<int>(result.extension->d_prime.size());
    }
    if (result.plan) {
        rep.budget_m = result.plan->budget_m;
        rep.used_fallback = result.plan->used_fallback;
    }
    rep.oracle_ecc = oracle_ecc;
    rep.elapsed_ms = elapsed_ms;
    rep.cliques = result.cover.cliques;
    return rep;
}

std::string cover_report_json(const CoverReport& report) {
    ordered_json j;
    j["route"] = report.route;
    j["n"] = report.n;
    j["edge_count"] = report.edge_count;
    j["cover_size"] = report.cover_size;
    j["bound"] = report.bound;
    j["bound_name"] = report.bound_name;
    j["valid"] = report.valid;
    if (report.f)
        j["f"] = *report.f;
    j["warnings"] = report.warnings;
    if (report.oracle_ecc)
        j["oracle_ecc"] = *report.oracle_ecc;
    if (report.budget_m)
        j["budget_m"] = *report.budget_m;
    if (report.used_fallback)
        j["used_fallback"] = *report.used_fallback;
    if (report.extended_cliques)
        j["extended_cliques"] = *report.extended_cliques;
    if (report.extra_cliques)
        j["extra_cliques"] = *report.extra_cliques;
    j["elapsed_ms"] = report.elapsed_ms;
    j["cliques"] = report.cliques;
    j["version"] = kVersion;
    return j.dump();
}

std::string cover_report_text(const CoverReport& report) {
    std::ostringstream out;
    out << "route: " << report.route << "\n"
        << "n: " << report.n << "  edges: " << report.edge_count << "\n"
        << "cover size: " << report.cover_size << "  bound: " << report.bound << " ("
        << report.bound_name << ")\n"
        << "valid: " << (report.valid ? "yes" : "no") << "\n";
    if (report.f)
        out << "f: " << *report.f << "\n";
    if (report.extended_cliques)
        out << "extended cliques: " << *report.extended_cliques
            << "  extra cliques: " << (report.extra_cliques ? *report.extra_cliques : 0) << "\n";
    if (report.budget_m)
        out << "budget m: " << *report.budget_m << "\n";
    if (report.used_fallback)
        out << "used exact fallback: " << (*report.used_fallback ? "yes" : "no") << "\n";
    if (report.oracle_ecc)
        out << "exact ecc: " << *report.oracle_ecc << "\n";
    for (const std::string& w : report.warnings)
        out << "warning: " << w << "\n";
    out << "cliques:";
    for (const Clique& c : report.cliques) {
        out << " {";
        for (std::size_t i = 0; i < c.size(); ++i)
            out << (i ? "," : "") << c[i];
        out << "}";
    }
    out << "\n";
    return out.str();
}

namespace {

ordered_json edge_array(const std::vector<std::pair<int, int>>& edges) {
    ordered_json arr = ordered_json::array();
    for (auto [u, v] : edges)
        arr.push_back({u, v});
    return arr;
}

} // namespace

std::string structure_report_json(const StructureReport& rep) {
    ordered_json j;
    j["route"] = route_name(rep.route);
    j["alpha"] = rep.alpha;
    if (rep.diameter.is_finite())
        j["diameter"] = *rep.diameter.value;
    else
        j["diameter"] = nullptr;
    j["connected"] = rep.connected;
    j["dominating_edges"] = edge_array(rep.dominating_edges);
    j["has_incompatible_double_top"] = rep.has_incompatible_double_top;
    j["has_supercycle"] = rep.has_supercycle;
    if (rep.chosen_dominating_edge)
        j["chosen_dominating_edge"] = {rep.chosen_dominating_edge->first,
                                       rep.chosen_dominating_edge->second};
    else
        j["chosen_dominating_edge"] = nullptr;
    j["version"] = kVersion;
    return j.dump();
}

std::string structure_report_text(const StructureReport& rep) {
    std::ostringstream out;
    out << "route: " << route_name(rep.route) << "\n"
        << "alpha: " << rep.alpha << "\n"
        << "diameter: ";
    if (rep.diameter.is_finite())
        out << *rep.diameter.value;
    else
        out << "disconnected";
    out << "\n"
        << "dominating edges:";
    for (auto [u, v] : rep.dominating_edges)
        out << " (" << u << "," << v << ")";
    out << "\n"
        << "incompatible double top: " << (rep.has_incompatible_double_top ? "yes" : "no") << "\n"
        << "supercycle: " << (rep.has_supercycle ? "yes" : "no") << "\n";
    if (rep.chosen_dominating_edge)
        out << "chosen edge: (" << rep.chosen_dominating_edge->first << ","
            << rep.chosen_dominating_edge->second << ")\n";
    return out.str();
}

std::string exact_report_json(const ExactResult& result, std::int64_t elapsed_ms) {
    ordered_json j;
    j["ecc"] = result.ecc;
    j["nodes_explored"] = result.nodes_explored;
    j["cliques"] = result.witness.cliques;
    j["elapsed_ms"] = elapsed_ms;
    j["version"] = kVersion;
    return j.dump();
}

std::string exact_report_text(const ExactResult& result, std::int64_t elapsed_ms) {
    std::ostringstream out;
    out << "ecc: " << result.ecc << "\n"
        << "nodes explored: " << result.nodes_explored << "\n"
        << "cliques:";
    for (const Clique& c : result.witness.cliques) {
        out << " {";
        for (std::size_t i = 0; i < c.size(); ++i)
            out << (i ? "," : "") << c[i];
        out << "}";
    }
    out << "\n";
    if (elapsed_ms >= 0)
        out << "elapsed: " << elapsed_ms << " ms\n";
    return out.str();
}

} // namespace ecckit
