#include "ecckit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace ecckit {

namespace {

bool parse_int(const std::string& tok, long long& out) {
    try {
        std::size_t pos = 0;
        out = std::stoll(tok, &pos);
        return pos == tok.size();
    } catch (const std::exception&) {
        return false;
    }
}

Graph parse_edgelist(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long header_n = -1;
    std::vector<std::pair<int, int>> edges;
    long long max_index = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        if (first == "p") {
            long long n = 0, m = 0;
            std::string tn, tm, extra;
            if (!(ls >> tn >> tm) || (ls >> extra) || !parse_int(tn, n) || !parse_int(tm, m) ||
                n < 1)
                throw parse_error("bad header, expected 'p <n> <m>'", lineno);
            header_n = n;
            continue;
        }
        std::string second, extra;
        long long u = 0, v = 0;
        if (!(ls >> second) || (ls >> extra) || !parse_int(first, u) || !parse_int(second, v))
            throw parse_error("expected an edge line 'u v'", lineno);
        if (u < 0 || v < 0)
            throw input_error("negative vertex index");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_index = std::max({max_index, u, v});
    }
    long long n = header_n >= 0 ? header_n : max_index + 1;
    if (n < 1)
        throw input_error("graph file describes no vertices");
    return Graph(static_cast<int>(n), edges);
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        if (first == "c")
            continue;
        if (first == "p") {
            std::string kind, tn, tm, extra;
            long long nn = 0, mm = 0;
            if (!(ls >> kind >> tn >> tm) || (ls >> extra) || kind != "edge" ||
                !parse_int(tn, nn) || !parse_int(tm, mm) || nn < 1)
                throw parse_error("bad header, expected 'p edge <n> <m>'", lineno);
            n = nn;
            continue;
        }
        if (first == "e") {
            if (n < 0)
                throw parse_error("edge before the 'p edge' header", lineno);
            std::string tu, tv, extra;
            long long u = 0, v = 0;
            if (!(ls >> tu >> tv) || (ls >> extra) || !parse_int(tu, u) || !parse_int(tv, v))
                throw parse_error("expected an edge line 'e <u> <v>'", lineno);
            if (u < 1 || v < 1 || u > n || v > n)
                throw input_error("vertex index outside 1.." + std::to_string(n));
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw parse_error("unrecognized line type '" + first + "'", lineno);
    }
    if (n < 0)
        throw parse_error("missing 'p edge <n> <m>' header", lineno ? lineno : 1);
    return Graph(static_cast<int>(n), edges);
}

} // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::edgelist ? parse_edgelist(in) : parse_dimacs(in);
}

Graph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    return parse_graph(in, format);
}

void write_graph(const Graph& g, std::ostream& out, GraphFormat format) {
    auto edges = g.edges();
    if (format == GraphFormat::edgelist) {
        out << "p " << g.vertex_count() << " " << edges.size() << "\n";
        for (auto [u, v] : edges)
            out << u << " " << v << "\n";
    } else {
        out << "p edge " << g.vertex_count() << " " << edges.size() << "\n";
        for (auto [u, v] : edges)
            out << "e " << u + 1 << " " << v + 1 << "\n";
    }
}

void save_graph(const Graph& g, const std::string& path, GraphFormat format) {
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot write '" + path + "'");
    write_graph(g, out, format);
}

GraphFormat format_from_name(const std::string& name) {
    if (name == "edgelist")
        return GraphFormat::edgelist;
    if (name == "dimacs")
        return GraphFormat::dimacs;
    throw input_error("unknown graph format '" + name + "'");
}

} // namespace ecckit
