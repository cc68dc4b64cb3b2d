#include <doctest.h>

#include <sstream>

#include "ecckit/gen.hpp"
#include "ecckit/io.hpp"

#include "fixtures.hpp"

using namespace ecckit;

namespace {

Graph parse_str(const std::string& text, GraphFormat fmt) {
    std::istringstream in(text);
    return parse_graph(in, fmt);
}

} // namespace

TEST_CASE("edgelist parsing") {
    Graph p3 = parse_str("p 3 2\n0 1\n1 2\n", GraphFormat::edgelist);
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK(!p3.adjacent(0, 2));

    // header optional: n is inferred from the largest index
    Graph inferred = parse_str("# a path\n0 1\n1 2\n2 3 # trailing note\n", GraphFormat::edgelist);
    CHECK(inferred == fixtures::p4());

    // header may announce isolated vertices beyond the indices used
    Graph padded = parse_str("p 5 1\n0 1\n", GraphFormat::edgelist);
    CHECK(padded.vertex_count() == 5);

    // duplicates collapse
    CHECK(parse_str("0 1\n1 0\n0 1\n", GraphFormat::edgelist).edge_count() == 1);

    CHECK_THROWS_AS(parse_str("0 0\n", GraphFormat::edgelist), input_error);
    CHECK_THROWS_AS(parse_str("0 1\nbad line here\n", GraphFormat::edgelist), parse_error);
    try {
        parse_str("0 1\n1 two\n", GraphFormat::edgelist);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("dimacs parsing") {
    Graph p3 = parse_str("c comment\np edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::dimacs);
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK(!p3.adjacent(0, 2));

    CHECK_THROWS_AS(parse_str("e 1 2\n", GraphFormat::dimacs), parse_error);
    CHECK_THROWS_AS(parse_str("p edge 3 1\ne 1 4\n", GraphFormat::dimacs), input_error);
    CHECK_THROWS_AS(parse_str("p edge 3 1\nx 1 2\n", GraphFormat::dimacs), parse_error);
    CHECK_THROWS_AS(parse_str("p edge 3 1\ne 1 1\n", GraphFormat::dimacs), input_error);
}

TEST_CASE("save and load round-trip") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = gen_alpha_two({3 + static_cast<int>(seed % 10), 0.5, seed, GenKind::Alpha2});
        for (GraphFormat fmt : {GraphFormat::edgelist, GraphFormat::dimacs}) {
            std::ostringstream out;
            write_graph(g, out, fmt);
            Graph back = parse_str(out.str(), fmt);
            CHECK(back == g);
        }
    }
}

TEST_CASE("format names") {
    CHECK(format_from_name("edgelist") == GraphFormat::edgelist);
    CHECK(format_from_name("dimacs") == GraphFormat::dimacs);
    CHECK_THROWS_AS(format_from_name("gml"), input_error);
}
