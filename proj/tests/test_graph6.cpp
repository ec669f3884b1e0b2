#include <doctest.h>

#include <random>

#include "subkdom/enumerate.hpp"
#include "subkdom/families.hpp"
#include "subkdom/graph6.hpp"

using namespace subkdom;

TEST_CASE("reference strings decode as expected") {
    // values cross-checked against an independent graph6 decoder
    const Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.adjacent(0, 1));

    const Graph empty2 = parse_graph6("A?");
    CHECK(empty2.order() == 2);
    CHECK(empty2.edge_count() == 0);

    const Graph k3 = parse_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);

    CHECK(encode_graph6(complete(2)) == "A_");
    CHECK(encode_graph6(Graph(2)) == "A?");
    CHECK(encode_graph6(complete(3)) == "Bw");
}

TEST_CASE("optional header and line endings") {
    CHECK(parse_graph6(">>graph6<<Bw").edge_count() == 3);
    CHECK(parse_graph6("Bw\n").edge_count() == 3);
    CHECK(parse_graph6("Bw\r\n").edge_count() == 3);
    CHECK(graph6_order(">>graph6<<A_") == 2);
}

TEST_CASE("record exposes order and triangle bits") {
    const auto record = parse_graph6_record("Bw");
    CHECK(record.order == 3);
    CHECK(record.bits == std::vector<bool>{true, true, true});
    const auto empty = parse_graph6_record("A?");
    CHECK(empty.bits == std::vector<bool>{false});
}

TEST_CASE("degree extraction avoids the matrix") {
    CHECK(parse_graph6_degrees("Bw") == std::vector<int>{2, 2, 2});
    CHECK(parse_graph6_degrees(encode_graph6(star_corona(5))) == star_corona(5).degrees());
}

TEST_CASE("malformed lines carry byte offsets") {
    try {
        parse_graph6("A ");
        FAIL("expected a parse error");
    } catch (const MalformedInputError& e) {
        CHECK(e.position == 1);  // space is outside the alphabet
    }
    try {
        parse_graph6("B");
        FAIL("expected a parse error");
    } catch (const MalformedInputError& e) {
        CHECK(e.position == 1);  // payload missing entirely
    }
    CHECK_THROWS_AS(parse_graph6(""), MalformedInputError);
    CHECK_THROWS_AS(parse_graph6("Bww"), MalformedInputError);   // trailing byte
    CHECK_THROWS_AS(parse_graph6("A@"), MalformedInputError);    // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~"), MalformedInputError);     // truncated order
}

TEST_CASE("multi-byte orders round-trip") {
    const Graph p70 = path(70);
    const std::string line = encode_graph6(p70);
    CHECK(line.size() == 4 + (70 * 69 / 2 + 5) / 6);
    CHECK(graph6_order(line) == 70);
    const Graph back = parse_graph6(line);
    CHECK(back.order() == 70);
    CHECK(back.edge_count() == 69);
    for (int i = 0; i + 1 < 70; ++i) CHECK(back.adjacent(i, i + 1));
}

TEST_CASE("round trip across the small corpus") {
    for (int n = 1; n <= 6; ++n)
        for_each_nonisomorphic(n, [&](const Graph& g) {
            const Graph back = parse_graph6(encode_graph6(g));
            CHECK(back.order() == g.order());
            CHECK(graph_code(back) == graph_code(g));
        });
}

TEST_CASE("single-byte corruption never slips through silently") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> byte(0, 255);
    int parsed_differently = 0;
    for (int n = 2; n <= 6; ++n)
        for_each_nonisomorphic(n, [&](const Graph& g) {
            const std::string line = encode_graph6(g);
            std::string mutated = line;
            const auto pos = static_cast<std::size_t>(rng() % line.size());
            char replacement = static_cast<char>(byte(rng));
            if (replacement == line[pos]) replacement = static_cast<char>(replacement ^ 1);
            mutated[pos] = replacement;
            try {
                const Graph other = parse_graph6(mutated);
                // a successful parse must decode a different graph
                const bool differs =
                    other.order() != g.order() || graph_code(other) != graph_code(g);
                CHECK(differs);
                ++parsed_differently;
            } catch (const MalformedInputError&) {
                // rejection is the other acceptable outcome
            }
        });
    CHECK(parsed_differently > 0);  // both outcomes occur across the corpus
}

TEST_CASE("edge list parsing") {
    const Graph k2 = parse_edge_list("2 1\n0 1\n");
    CHECK(k2.edge_count() == 1);
    CHECK(parse_edge_list("4 0\n").order() == 4);
    CHECK(parse_edge_list("3 3\n0 1\n1 2\n0 2\n").edge_count() == 3);
    // blank lines and trailing whitespace are tolerated
    CHECK(parse_edge_list("2 1\n\n0 1\n\n").edge_count() == 1);

    const Graph corona = parse_edge_list(encode_edge_list(star_corona(5)));
    CHECK(graph_code(corona) == graph_code(star_corona(5)));
}

TEST_CASE("edge list errors carry line numbers") {
    try {
        parse_edge_list("2 1\n0 2\n");
        FAIL("expected a parse error");
    } catch (const MalformedInputError& e) {
        CHECK(e.position == 2);
    }
    try {
        parse_edge_list("3 2\n0 1\n1 1\n");
        FAIL("expected a parse error");
    } catch (const MalformedInputError& e) {
        CHECK(e.position == 3);
    }
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), MalformedInputError);  // duplicate
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), MalformedInputError);  // reversed dup
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), MalformedInputError);       // too few
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), MalformedInputError);  // too many
    CHECK_THROWS_AS(parse_edge_list("3 x\n"), MalformedInputError);
    CHECK_THROWS_AS(parse_edge_list(""), MalformedInputError);
}
