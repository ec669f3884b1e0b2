#include "subkdom/degree_sequence.hpp"

#include <string>

namespace subkdom {

DegreeSequence DegreeSequence::of(const Graph& g) {
    return from_degrees(g.degrees());
}

// Counting sort into non-increasing order (degrees lie in [0, n-1]), fused
// with the prefix-sum pass so the 10^7-entry pipeline touches each output
// array once.
DegreeSequence DegreeSequence::from_degrees(const std::vector<int>& degrees) {
    const auto n = static_cast<int>(degrees.size());
    std::vector<std::int32_t> counts(static_cast<std::size_t>(n), 0);
    for (const int d : degrees) {
        if (d < 0 || d >= n)
            throw DomainError("degree " + std::to_string(d) + " out of range [0, " +
                              std::to_string(n) + ")");
        ++counts[static_cast<std::size_t>(d)];
    }
    DegreeSequence result;
    result.sorted_.resize(degrees.size());
    result.prefix_.resize(degrees.size() + 1);
    result.prefix_[0] = 0;
    std::size_t out = 0;
    std::int64_t running = 0;
    for (int d = n - 1; d >= 0; --d)
        for (std::int32_t i = 0; i < counts[static_cast<std::size_t>(d)]; ++i) {
            result.sorted_[out] = d;
            running += d;
            result.prefix_[out + 1] = running;
            ++out;
        }
    return result;
}

std::vector<std::int64_t> DegreeSequence::level_counts() const {
    std::vector<std::int64_t> counts(sorted_.size(), 0);
    for (const int d : sorted_) ++counts[static_cast<std::size_t>(d)];
    return counts;
}

}  // namespace subkdom
