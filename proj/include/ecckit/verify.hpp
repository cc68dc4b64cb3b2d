#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecckit/structure.hpp"

namespace ecckit {

struct VerifyOptions {
    int n_max = 7;
    bool check_bounds = true;
    bool check_oracle = true;
    int jobs = 1;
    int oracle_cap = 12;
    std::string dump_path; // first counterexample is written here when nonempty
};

struct Violation {
    int n = 0;
    std::uint64_t mask = 0; // complement edge mask identifying the graph
    std::string kind;
    std::string detail;
};

/// Per-n tallies: graphs seen and how they routed.
struct VerifyBucket {
    int n = 0;
    std::uint64_t graphs = 0;
    std::array<std::uint64_t, 8> routes{};
};

struct VerifySummary {
    int n_max = 0;
    bool checked_bounds = false;
    bool checked_oracle = false;
    std::vector<VerifyBucket> per_n;
    std::uint64_t graphs_total = 0;
    std::uint64_t bound_violations = 0;
    std::uint64_t oracle_violations = 0;
    std::optional<Violation> first_violation; // smallest (n, mask)

    std::uint64_t violations() const { return bound_violations + oracle_violations; }
    bool all_passed() const { return violations() == 0; }
};

/// Runs every labeled alpha-2 graph with 2 <= n <= n_max through
/// cover_dispatch. bounds: the cover must verify and stay within its
/// route's size bound (Fallback is exempt from the bound). oracle: the
/// exact optimum must not exceed the cover size, and must stay <= n.
/// Work fans out over a fixed worker pool; results merge by graph index,
/// so the summary does not depend on the worker count.
VerifySummary run_verify(const VerifyOptions& opts);

std::string verify_summary_json(const VerifySummary& summary, std::int64_t elapsed_ms);
std::string verify_summary_text(const VerifySummary& summary, std::int64_t elapsed_ms);

} // namespace ecckit
