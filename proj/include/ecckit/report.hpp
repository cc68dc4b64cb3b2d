#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecckit/classical.hpp"
#include "ecckit/oracle.hpp"

namespace ecckit {

/// Flattened description of one cover run, ready for serialization.
/// elapsed_ms is injected by the caller: it is the one field wall clocks
/// feed, everything else is a pure function of the input graph.
struct CoverReport {
    std::string route;
    int n = 0;
    int edge_count = 0;
    int cover_size = 0;
    int bound = 0;
    std::string bound_name;
    bool valid = false;
    std::optional<int> f;
    std::vector<std::string> warnings;
    std::optional<int> oracle_ecc;
    std::int64_t elapsed_ms = 0;
    std::optional<int> budget_m;
    std::optional<bool> used_fallback;
    std::optional<int> extended_cliques; // nonempty per-vertex cliques emitted
    std::optional<int> extra_cliques;    // labelled cliques from the elimination loop
    std::vector<Clique> cliques;
};

/// The route's size guarantee: n for most routes, floor(3n/2) for the
/// extension route, n plus the dominating edge count for the fallback.
std::pair<int, std::string> route_bound(Route route, const Graph& g);

CoverReport make_cover_report(const Graph& g, const DispatchResult& result,
                              std::optional<int> oracle_ecc, std::int64_t elapsed_ms);

std::string cover_report_json(const CoverReport& report);
std::string cover_report_text(const CoverReport& report);

std::string structure_report_json(const StructureReport& rep);
std::string structure_report_text(const StructureReport& rep);

std::string exact_report_json(const ExactResult& result, std::int64_t elapsed_ms);
std::string exact_report_text(const ExactResult& result, std::int64_t elapsed_ms);

} // namespace ecckit
