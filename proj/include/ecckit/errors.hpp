#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ecckit {

// Base class for everything thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed user input: self-loops, out-of-range vertices, bad files.
struct input_error : error {
    using error::error;
};

// File parsing failure; carries the 1-based line number.
struct parse_error : input_error {
    parse_error(const std::string& msg, int line)
        : input_error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

// A size cap was exceeded (exact solvers, enumerators).
struct capacity_error : error {
    using error::error;
};

// An operation was called outside its stated precondition.
struct precondition_error : error {
    using error::error;
};

// A bounded search ran out of its node/expansion budget.
struct budget_error : error {
    using error::error;
};

// A seeded generator exhausted its retry budget.
struct generation_error : error {
    using error::error;
};

// The input is outside the artifact's scope (independence number >= 3).
struct unsupported_input : error {
    using error::error;
};

// A set that the construction requires to be a clique is not one.
// Carries the offending non-adjacent pair.
struct hypothesis_violation : error {
    hypothesis_violation(const std::string& msg, int u, int v)
        : error(msg + " (non-adjacent pair " + std::to_string(u) + "," + std::to_string(v) + ")"),
          pair(u, v) {}
    std::pair<int, int> pair;
};

// The extension cover loop stalled with uncovered edges and no favourable
// vertex; unreachable when the eligibility hypotheses hold.
struct supercycle_present : error {
    using error::error;
};

// A construction exceeded the bound its route guarantees.
struct counterexample_error : error {
    using error::error;
};

} // namespace ecckit
