#include "ecckit/verify.hpp"

#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ecckit/classical.hpp"
#include "ecckit/gen.hpp"
#include "ecckit/io.hpp"
#include "ecckit/oracle.hpp"
#include "ecckit/report.hpp"
#include "ecckit/version.hpp"

namespace ecckit {

namespace {

struct WorkerState {
    VerifyBucket bucket;
    std::uint64_t bound_violations = 0;
    std::uint64_t oracle_violations = 0;
    std::optional<Violation> first;
    std::exception_ptr failure;

    void record(int n, std::uint64_t mask, bool oracle_kind, std::string kind,
                std::string detail) {
        (oracle_kind ? oracle_violations : bound_violations)++;
        if (!first || mask < first->mask)
            first = Violation{n, mask, std::move(kind), std::move(detail)};
    }
};

void check_graph(const VerifyOptions& opts, int n, std::uint64_t mask, WorkerState& state) {
    Graph g = AlphaTwoEnumerator::alpha_two_from_mask(n, mask);
    auto [cover, rep] = cover_dispatch(g);
    ++state.bucket.graphs;
    ++state.bucket.routes[static_cast<std::size_t>(rep.route)];
    int size = static_cast<int>(cover.cliques.size());
    if (opts.check_bounds) {
        VerificationReport vr = verify_cover(g, cover);
        if (!vr.valid) {
            std::ostringstream detail;
            detail << "route " << route_name(rep.route);
            if (vr.non_clique_index)
                detail << ", clique " << *vr.non_clique_index << " is not a clique";
            if (vr.first_uncovered_edge)
                detail << ", edge (" << vr.first_uncovered_edge->first << ","
                       << vr.first_uncovered_edge->second << ") uncovered";
            state.record(n, mask, false, "invalid-cover", detail.str());
            return;
        }
        if (rep.route != Route::Fallback) {
            auto [bound, bound_name] = route_bound(rep.route, g);
            if (size > bound) {
                std::ostringstream detail;
                detail << "route " << route_name(rep.route) << ", size " << size << " > "
                       << bound_name << " = " << bound;
                state.record(n, mask, false, "bound-exceeded", detail.str());
                return;
            }
        }
    }
    if (opts.check_oracle && n <= opts.oracle_cap) {
        ExactResult exact = exact_ecc(g);
        if (exact.ecc > size) {
            std::ostringstream detail;
            detail << "exact " << exact.ecc << " > constructed " << size;
            state.record(n, mask, true, "oracle-dominance", detail.str());
            return;
        }
        if (exact.ecc > n) {
            std::ostringstream detail;
            detail << "exact " << exact.ecc << " > n = " << n;
            state.record(n, mask, true, "ecc-exceeds-n", detail.str());
        }
    }
}

} // namespace

VerifySummary run_verify(const VerifyOptions& opts) {
    if (opts.n_max < 2)
        throw input_error("verification needs n_max >= 2");
    if (opts.n_max > 7)
        throw capacity_error("exhaustive verification capped at 7 vertices (n_max=" +
                             std::to_string(opts.n_max) + ")");
    int jobs = std::max(1, opts.jobs);
    VerifySummary summary;
    summary.n_max = opts.n_max;
    summary.checked_bounds = opts.check_bounds;
    summary.checked_oracle = opts.check_oracle;

    for (int n = 2; n <= opts.n_max; ++n) {
        std::uint64_t limit = 1ull << (n * (n - 1) / 2);
        std::vector<WorkerState> states(jobs);
        auto work = [&](int t) {
            WorkerState& state = states[t];
            state.bucket.n = n;
            try {
                for (std::uint64_t mask = 1 + static_cast<std::uint64_t>(t); mask < limit;
                     mask += jobs) {
                    if (!AlphaTwoEnumerator::mask_is_triangle_free(n, mask))
                        continue;
                    check_graph(opts, n, mask, state);
                }
            } catch (...) {
                state.failure = std::current_exception();
            }
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(jobs);
            for (int t = 0; t < jobs; ++t)
                pool.emplace_back(work, t);
            for (auto& th : pool)
                th.join();
        }
        VerifyBucket merged;
        merged.n = n;
        for (const WorkerState& state : states) {
            if (state.failure)
                std::rethrow_exception(state.failure);
            merged.graphs += state.bucket.graphs;
            for (std::size_t r = 0; r < merged.routes.size(); ++r)
                merged.routes[r] += state.bucket.routes[r];
            summary.bound_violations += state.bound_violations;
            summary.oracle_violations += state.oracle_violations;
            if (state.first &&
                (!summary.first_violation ||
                 std::make_pair(state.first->n, state.first->mask) <
                     std::make_pair(summary.first_violation->n, summary.first_violation->mask)))
                summary.first_violation = state.first;
        }
        summary.graphs_total += merged.graphs;
        summary.per_n.push_back(merged);
    }

    if (summary.first_violation && !opts.dump_path.empty()) {
        const Violation& v = *summary.first_violation;
        std::ofstream out(opts.dump_path);
        if (out) {
            out << "# verification counterexample\n"
                << "# kind: " << v.kind << "\n"
                << "# detail: " << v.detail << "\n";
            Graph g = AlphaTwoEnumerator::alpha_two_from_mask(v.n, v.mask);
            write_graph(g, out, GraphFormat::edgelist);
        }
    }
    return summary;
}

std::string verify_summary_json(const VerifySummary& summary, std::int64_t elapsed_ms) {
    nlohmann::ordered_json j;
    j["n_max"] = summary.n_max;
    j["checked_bounds"] = summary.checked_bounds;
    j["checked_oracle"] = summary.checked_oracle;
    j["graphs_total"] = summary.graphs_total;
    nlohmann::ordered_json per_n = nlohmann::ordered_json::array();
    for (const VerifyBucket& b : summary.per_n) {
        nlohmann::ordered_json routes;
        for (std::size_t r = 0; r < b.routes.size(); ++r)
            if (b.routes[r])
                routes[route_name(static_cast<Route>(r))] = b.routes[r];
        per_n.push_back({{"n", b.n}, {"graphs", b.graphs}, {"routes", routes}});
    }
    j["per_n"] = per_n;
    j["bound_violations"] = summary.bound_violations;
    j["oracle_violations"] = summary.oracle_violations;
    j["all_passed"] = summary.all_passed();
    if (summary.first_violation) {
        const Violation& v = *summary.first_violation;
        j["first_violation"] = {{"n", v.n},
                                {"complement_mask", v.mask},
                                {"kind", v.kind},
                                {"detail", v.detail}};
    } else {
        j["first_violation"] = nullptr;
    }
    j["elapsed_ms"] = elapsed_ms;
    j["version"] = kVersion;
    return j.dump();
}

std::string verify_summary_text(const VerifySummary& summary, std::int64_t elapsed_ms) {
    std::ostringstream out;
    for (const VerifyBucket& b : summary.per_n) {
        out << "n=" << b.n << ": " << b.graphs << " graphs";
        const char* sep = "  [";
        for (std::size_t r = 0; r < b.routes.size(); ++r)
            if (b.routes[r]) {
                out << sep << route_name(static_cast<Route>(r)) << "=" << b.routes[r];
                sep = " ";
            }
        out << "]\n";
    }
    out << "total: " << summary.graphs_total << " graphs, " << summary.bound_violations
        << " bound violations, " << summary.oracle_violations << " oracle violations";
    if (elapsed_ms >= 0)
        out << " (" << elapsed_ms << " ms)";
    out << "\n";
    if (summary.first_violation)
        out << "first violation: n=" << summary.first_violation->n << " mask="
            << summary.first_violation->mask << " " << summary.first_violation->kind << " ("
            << summary.first_violation->detail << ")\n";
    out << (summary.all_passed() ? "all checks passed\n" : "CHECKS FAILED\n");
    return out.str();
}

} // namespace ecckit
