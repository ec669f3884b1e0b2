#include <doctest.h>

#include <algorithm>
#include <random>

#include "subkdom/enumerate.hpp"
#include "subkdom/families.hpp"

using namespace subkdom;

TEST_CASE("code round trip") {
    for (const Graph& g : {complete(4), cycle(5), star(6), path(7), Graph(3)}) {
        const GraphCode code = graph_code(g);
        const Graph back = graph_from_code(g.order(), code);
        CHECK(graph_code(back) == code);
        CHECK(back.edge_count() == g.edge_count());
    }
    CHECK_THROWS_AS(graph_code(path(12)), DomainError);
}

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        // random graph
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        const Graph g = Graph::from_edge_list(n, edges);

        // random permutation of the labels
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> relabeled;
        for (const auto& [u, v] : edges)
            relabeled.emplace_back(perm[static_cast<std::size_t>(u)],
                                   perm[static_cast<std::size_t>(v)]);
        const Graph h = Graph::from_edge_list(n, relabeled);

        CHECK(canonical_code(n, graph_code(g)) == canonical_code(n, graph_code(h)));
    }
}

TEST_CASE("canonical code is idempotent and realizable") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        const GraphCode code = graph_code(Graph::from_edge_list(n, edges));
        const GraphCode canon = canonical_code(n, code);
        CHECK(canonical_code(n, canon) == canon);
        CHECK(graph_from_code(n, canon).edge_count() ==
              graph_from_code(n, code).edge_count());
    }
}

TEST_CASE("non-isomorphic counts match the known sequence") {
    CHECK(nonisomorphic_codes(1).size() == 1);
    CHECK(nonisomorphic_codes(2).size() == 2);
    CHECK(nonisomorphic_codes(3).size() == 4);
    CHECK(nonisomorphic_codes(4).size() == 11);
    CHECK(nonisomorphic_codes(5).size() == 34);
    CHECK(nonisomorphic_codes(6).size() == 156);
    CHECK(nonisomorphic_codes(7).size() == 1044);
}

TEST_CASE("every enumerated code is canonical and distinct") {
    const auto& codes = nonisomorphic_codes(6);
    for (const GraphCode code : codes) CHECK(canonical_code(6, code) == code);
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}
