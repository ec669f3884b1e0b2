#pragma once

#include <cstdint>
#include <vector>

#include "subkdom/graph.hpp"

namespace subkdom {

/// Non-increasing degree sequence with prefix sums.
///
/// Degrees lie in [0, n-1], so construction sorts by counting sort and the
/// whole pipeline stays O(n). Sequences need not be graphical; every
/// computation in this library depends only on the sorted multiset.
class DegreeSequence {
public:
    static DegreeSequence of(const Graph& g);
    /// Accepts degrees in any order; DomainError unless 0 <= d < n for all.
    static DegreeSequence from_degrees(const std::vector<int>& degrees);

    int n() const { return static_cast<int>(sorted_.size()); }
    /// d_1 >= d_2 >= ... >= d_n, zero-indexed.
    const std::vector<int>& sorted() const { return sorted_; }
    /// S_t = d_1 + ... + d_t for t in [0, n].
    std::int64_t prefix(int t) const { return prefix_[static_cast<std::size_t>(t)]; }
    int max_degree() const { return sorted_.empty() ? 0 : sorted_.front(); }
    int min_degree() const { return sorted_.empty() ? 0 : sorted_.back(); }
    /// Number of vertices of each degree value, indexed 0..n-1 (empty for n=0).
    std::vector<std::int64_t> level_counts() const;

private:
    std::vector<int> sorted_;
    std::vector<std::int64_t> prefix_;  // size n+1
};

}  // namespace subkdom
