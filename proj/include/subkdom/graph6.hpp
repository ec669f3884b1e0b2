#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "subkdom/graph.hpp"

namespace subkdom {

/// Decoded graph6 line: printable bytes in [63, 126], order prefix (one byte
/// for n <= 62, the ~ / ~~ multi-byte forms above that), then the upper
/// triangle of the adjacency matrix in column order x(0,1), x(0,2), x(1,2),
/// x(0,3), ... packed 6 bits per byte, zero-padded.
struct Graph6Record {
    std::string raw;  // line with any ">>graph6<<" header stripped
    std::int64_t order = 0;
    std::vector<bool> bits;  // upper-triangle bits, padding removed
};

/// MalformedInputError (with 0-based byte offset) on bytes outside the
/// alphabet, truncated or oversized payloads, and nonzero padding bits.
Graph6Record parse_graph6_record(std::string_view line);

Graph parse_graph6(std::string_view line);

/// Order prefix only; cheap routing check before materializing adjacency.
std::int64_t graph6_order(std::string_view line);

/// Degree extraction without materializing the adjacency matrix; O(n) memory.
std::vector<int> parse_graph6_degrees(std::string_view line);

std::string encode_graph6(const Graph& g);

/// Whole-text edge list: first line "n m", then m lines "u v" with 0-based
/// labels. MalformedInputError (with 1-based line number) on bad tokens,
/// out-of-range labels, self-loops, duplicate edges, and wrong edge counts.
Graph parse_edge_list(std::string_view text);

std::string encode_edge_list(const Graph& g);

}  // namespace subkdom
