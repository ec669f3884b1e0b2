#include "subkdom/families.hpp"

#include <string>
#include <utility>

namespace subkdom {

namespace {

std::vector<std::pair<int, int>> path_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return edges;
}

void expect_params(const FamilySpec& spec, std::size_t count) {
    if (spec.params.size() != count)
        throw DomainError("family expects " + std::to_string(count) + " parameter(s), got " +
                          std::to_string(spec.params.size()));
}

}  // namespace

Graph path(int n) {
    if (n < 1) throw DomainError("path requires n >= 1");
    const auto edges = path_edges(n);
    return Graph::from_edge_list(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw DomainError("cycle requires n >= 3");
    auto edges = path_edges(n);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edge_list(n, edges);
}

Graph complete(int n) {
    if (n < 1) throw DomainError("complete graph requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw DomainError("complete bipartite requires part sizes >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edge_list(a + b, edges);
}

Graph star(int n) {
    if (n < 1) throw DomainError("star requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite_minus_perfect_matching(int part_size) {
    if (part_size < 1)
        throw DomainError("complete bipartite minus perfect matching requires part size >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < part_size; ++u)
        for (int v = 0; v < part_size; ++v)
            if (u != v) edges.emplace_back(u, part_size + v);
    return Graph::from_edge_list(2 * part_size, edges);
}

Graph star_corona(int n) {
    if (n < 2) throw DomainError("star corona requires n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        edges.emplace_back(0, v);
        edges.emplace_back(v, n - 1 + v);
    }
    return Graph::from_edge_list(2 * n - 1, edges);
}

Graph pendant_attach(const Graph& base, int hosts, int count) {
    const int n = base.order();
    if (hosts < 0 || hosts > n) throw DomainError("pendant_attach: host count out of range");
    if (count < 0) throw DomainError("pendant_attach: pendant count must be nonnegative");
    std::vector<std::pair<int, int>> edges = base.edges();
    int next = n;
    for (int h = n - hosts; h < n; ++h)
        for (int c = 0; c < count; ++c) edges.emplace_back(h, next++);
    return Graph::from_edge_list(next, edges);
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path:
            expect_params(spec, 1);
            return path(spec.params[0]);
        case Family::cycle:
            expect_params(spec, 1);
            return cycle(spec.params[0]);
        case Family::complete:
            expect_params(spec, 1);
            return complete(spec.params[0]);
        case Family::complete_bipartite:
            expect_params(spec, 2);
            return complete_bipartite(spec.params[0], spec.params[1]);
        case Family::star:
            expect_params(spec, 1);
            return star(spec.params[0]);
        case Family::complete_bipartite_minus_perfect_matching:
            expect_params(spec, 1);
            return complete_bipartite_minus_perfect_matching(spec.params[0]);
        case Family::star_corona:
            expect_params(spec, 1);
            return star_corona(spec.params[0]);
        case Family::pendant_attach: {
            expect_params(spec, 4);
            const auto base_family = static_cast<Family>(spec.params[0]);
            if (base_family != Family::path && base_family != Family::cycle &&
                base_family != Family::complete && base_family != Family::star)
                throw DomainError("pendant_attach base must be a single-parameter family");
            const Graph base = generate({base_family, {spec.params[1]}});
            return pendant_attach(base, spec.params[2], spec.params[3]);
        }
    }
    throw DomainError("unknown family");
}

}  // namespace subkdom
