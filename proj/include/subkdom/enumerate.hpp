#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "subkdom/graph.hpp"

namespace subkdom {

/// Upper-triangle adjacency bits in column order, one bit per pair:
/// position(i, j) = j(j-1)/2 + i for i < j. Fits n <= 11 in 64 bits.
using GraphCode = std::uint64_t;

GraphCode graph_code(const Graph& g);
Graph graph_from_code(int n, GraphCode code);

/// Minimum code over all vertex relabelings: a canonical form for isomorphism
/// classes of small graphs, computed by branch-and-bound over partial
/// labelings with prefix pruning.
GraphCode canonical_code(int n, GraphCode code);

/// All non-isomorphic simple graphs on n vertices as sorted canonical codes,
/// generated by single-vertex extension with canonical deduplication.
/// Results are memoized per n. Practical through n = 8 (12346 graphs).
const std::vector<GraphCode>& nonisomorphic_codes(int n);

void for_each_nonisomorphic(int n, const std::function<void(const Graph&)>& fn);

}  // namespace subkdom
