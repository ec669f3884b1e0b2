#pragma once

#include <vector>

#include "subkdom/graph.hpp"

namespace subkdom {

enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    complete_bipartite_minus_perfect_matching,
    star_corona,
    pendant_attach,
};

/// Integer-parameterized named-family constructor.
///
/// Canonical labelings (golden tests rely on these):
///   path(n):                vertices in path order, edges {i, i+1}
///   cycle(n):               vertices in cyclic order, edges {i, (i+1) mod n}, n >= 3
///   complete(n)
///   complete_bipartite(a, b): part A = 0..a-1, part B = a..a+b-1
///   star(n):                center 0, leaves 1..n-1 (K_{1,n-1})
///   complete_bipartite_minus_perfect_matching(s): equal parts of size s;
///                           vertex i is matched with (not adjacent to) s+i
///   star_corona(n):         star(n) plus one pendant per leaf; leaf i's
///                           pendant is n-1+i; order 2n-1
///   pendant_attach(f, p, hosts, count): generate({f, {p}}), then append
///                           `count` pendant vertices to each of the last
///                           `hosts` vertices, grouped per host in host order
struct FamilySpec {
    Family family;
    std::vector<int> params;
};

Graph generate(const FamilySpec& spec);

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int n);
Graph complete_bipartite_minus_perfect_matching(int part_size);
Graph star_corona(int n);
Graph pendant_attach(const Graph& base, int hosts, int count);

}  // namespace subkdom
