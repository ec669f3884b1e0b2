#include "subkdom/bench.hpp"

#include <chrono>
#include <random>

#include "subkdom/degree_sequence.hpp"
#include "subkdom/invariants.hpp"

namespace subkdom {

std::vector<int> synthetic_degrees(std::int64_t n, std::uint64_t seed) {
    if (n < 1) throw DomainError("synthetic degree sequence requires n >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> degree(0, static_cast<int>(n) - 1);
    std::vector<int> degrees(static_cast<std::size_t>(n));
    for (auto& d : degrees) d = degree(rng);
    return degrees;
}

BenchResult bench_sub_k(std::int64_t n, int k, std::uint64_t seed) {
    const auto degrees = synthetic_degrees(n, seed);
    BenchResult result{n, k, 0, 0.0};
    for (int run = 0; run < 3; ++run) {
        const auto start = std::chrono::steady_clock::now();
        const auto d = DegreeSequence::from_degrees(degrees);
        result.sub_value = sub_k(d, k);
        const auto stop = std::chrono::steady_clock::now();
        const double millis = std::chrono::duration<double, std::milli>(stop - start).count();
        if (run == 0 || millis < result.millis) result.millis = millis;
    }
    return result;
}

}  // namespace subkdom
