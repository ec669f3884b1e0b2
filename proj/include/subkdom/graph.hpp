#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "subkdom/errors.hpp"

namespace subkdom {

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored twice: a packed bit matrix for O(1) edge queries (the
/// exact search is edge-query-bound) and sorted per-vertex neighbor lists for
/// iteration. Instances are immutable values; mutating operations return a
/// new graph, so graphs can be shared freely across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);  // edgeless graph

    /// Builds a graph from an edge list; duplicate edges collapse.
    /// Throws MalformedInputError on out-of-range endpoints or self-loops.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    std::vector<int> degrees() const;  // indexed by vertex label
    int max_degree() const;            // 0 for an edgeless or empty graph
    int min_degree() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    /// Adjacency row as a single machine word; requires order() <= 64.
    std::uint64_t row64(int v) const;

    Graph delete_edge(int u, int v) const;  // DomainError unless {u,v} is an edge
    Graph add_edge(int u, int v) const;     // DomainError unless {u,v} is a non-edge
    Graph delete_vertex(int v) const;       // relabels survivors 0..n-2, order preserved
    Graph complement() const;

private:
    void set_bit(int u, int v);
    bool test_bit(int u, int v) const;
    void rebuild_lists();
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;  // 64-bit words per matrix row
    std::vector<std::uint64_t> bits_;
    std::vector<std::vector<int>> neighbors_;
};

}  // namespace subkdom
