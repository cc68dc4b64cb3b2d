#pragma once

#include <iosfwd>
#include <string>

#include "ecckit/graph.hpp"

namespace ecckit {

enum class GraphFormat { edgelist, dimacs };

/// edgelist: optional header "p <n> <m>", body lines "u v" zero-based,
/// "#" starts a comment; a missing header infers n = max index + 1.
/// dimacs: "p edge <n> <m>", edges "e <u> <v>" one-based, "c" comments.
/// Malformed lines raise parse_error carrying the line number; self-loops
/// raise input_error. Duplicate edges collapse.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph load_graph(const std::string& path, GraphFormat format);

void write_graph(const Graph& g, std::ostream& out, GraphFormat format);
void save_graph(const Graph& g, const std::string& path, GraphFormat format);

GraphFormat format_from_name(const std::string& name); // "edgelist" | "dimacs"

} // namespace ecckit
