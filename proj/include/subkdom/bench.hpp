#pragma once

#include <cstdint>
#include <vector>

namespace subkdom {

/// Uniform random degrees in [0, n-1] from a fixed-seed generator; the input
/// for the linear-time pipeline benchmark.
std::vector<int> synthetic_degrees(std::int64_t n, std::uint64_t seed);

struct BenchResult {
    std::int64_t n = 0;
    int k = 1;
    int sub_value = 0;
    double millis = 0.0;  // best of three runs; counting sort included
};

/// Times the full degree-sequence pipeline (counting sort, prefix sums, and
/// the sub_k scan) on a synthetic sequence of length n.
BenchResult bench_sub_k(std::int64_t n, int k, std::uint64_t seed);

}  // namespace subkdom
