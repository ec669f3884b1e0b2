#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "subkdom/graph.hpp"

namespace subkdom {

inline constexpr int kDefaultOracleCap = 32;

/// Exact k-domination result: the minimum cardinality together with the
/// lexicographically smallest minimum k-dominating set.
struct KDomWitness {
    int k = 1;
    int gamma_k = 0;
    std::vector<int> witness;  // ascending vertex labels
};

/// True iff every vertex outside `s` has at least k neighbors inside it.
bool is_k_dominating(const Graph& g, std::span<const int> s, int k);

/// Exact k-domination number with witness, by cardinality-ascending subset
/// search over bitset-encoded vertex sets. A branch is cut as soon as some
/// vertex that can no longer join the set is unable to reach k chosen
/// neighbors. When k exceeds the maximum degree the answer is n with
/// witness V(G). Orders above `oracle_cap` raise ResourceLimitError; the
/// oracle never degrades to an approximation. Caps above 64 are not
/// supported (single-word vertex sets).
KDomWitness k_domination_number(const Graph& g, int k, int oracle_cap = kDefaultOracleCap);

/// Degree-condition upper bound on the k-domination number: the smallest
/// positive integer r with min_degree >= (r+1)k/r - 1 yields floor(rn/(r+1)).
/// Empty when no r <= n satisfies the condition. The r search compares
/// min_degree * r >= (r+1)k - r in integers.
std::optional<std::int64_t> caro_roditty_upper(std::int64_t n, int min_degree, int k);

/// The k-domination number of any cubic graph on n vertices lies in this
/// closed interval, for k in {1, 2, 3}:
///   k=1: [ceil(n/4), floor(n/2)]
///   k=2: [ceil(2n/5), floor(n/2)]
///   k=3: [ceil(n/2), floor(3n/4)]
struct CubicInterval {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    friend bool operator==(const CubicInterval&, const CubicInterval&) = default;
};
CubicInterval cubic_interval(std::int64_t n, int k);

/// True iff sub_k equals the exact k-domination number.
bool equality_check(const Graph& g, int k, int oracle_cap = kDefaultOracleCap);

}  // namespace subkdom
