#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subkdom/degree_sequence.hpp"
#include "subkdom/rational.hpp"

namespace subkdom {

/// Sub-k-domination number: the least t with t + (1/k) * S_t >= n, where S_t
/// is the prefix sum of the non-increasing degree sequence. Evaluated as
/// k*t + S_t >= k*n in integers, by a single linear scan over prefix sums.
/// For k = 1 this is Slater's sub(G). A lower bound on the k-domination
/// number, with no cap on n.
int sub_k(const DegreeSequence& d, int k);
int sub_k(const Graph& g, int k);

/// Closed form for r-regular degree sequences: ceil(k*n / (r + k)).
std::int64_t sub_k_regular(std::int64_t n, std::int64_t r, int k);

/// True iff sub_k and the k-domination number of the complete graph on n
/// vertices agree (both equal k), which happens exactly when n > (k-1)^2.
/// Requires 1 <= k <= n-1.
bool kn_equality_threshold(std::int64_t n, int k);

/// ceil(k*n / (max_degree + k)): the classic degree-based lower bound on the
/// k-domination number; never exceeds sub_k.
std::int64_t fink_jacobson_bound(std::int64_t n, int max_degree, int k);

/// Stratum parameters for the level-indexed lower bound. The top t strata are
/// the consecutive degree levels Delta, Delta-1, ..., Delta-t+1; levels with
/// no vertices contribute zero counts.
struct StratifiedParams {
    int t;
    std::int64_t s_t;                        // vertices in the top t levels
    int delta_t;                             // d_{s_t + 1}: largest degree below them
    std::vector<std::int64_t> level_counts;  // count per level, highest first
};

/// True iff the stratified bound's hypothesis holds at stratum count t:
/// s_t + (d_1 + ... + d_{s_t}) < n.
bool stratified_guard(const DegreeSequence& d, int t);

StratifiedParams stratified_params(const DegreeSequence& d, int t);

/// The level-stratified lower bound on sub_k at stratum count t, as an exact
/// rational: (k*n - sum_i (Delta + 1 - Delta_t - i) * n_{Delta+1-i}) / (k + Delta_t).
/// PreconditionError when the guard fails at t.
Rational stratified_bound(const DegreeSequence& d, int k, int t);

struct StratifiedBest {
    int t;
    Rational bound;
    friend bool operator==(const StratifiedBest&, const StratifiedBest&) = default;
};

/// Largest stratified bound over all stratum counts satisfying the guard
/// (the smallest t attaining it), or empty when no stratum count qualifies.
/// The guard is monotone, so valid stratum counts form a prefix.
std::optional<StratifiedBest> best_stratified_bound(const DegreeSequence& d, int k);

/// All (t, bound) pairs for the valid stratum counts, in increasing t.
std::vector<StratifiedBest> stratified_bounds_per_t(const DegreeSequence& d, int k);

/// Side-by-side comparison of the two lower bounds on the corona of
/// K_{1,n-1} (one pendant per star leaf, order 2n-1): the stratified bound,
/// which simplifies to ((2k-1)n - (k-3)) / (2 + k), against the plain
/// degree bound k(2n-1) / (n-1+k). Their gap grows linearly in n.
struct CoronaComparison {
    Rational stratified;
    Rational fink_jacobson;
    Rational difference;
};
CoronaComparison corona_comparison(int n, int k);  // requires n >= 4

}  // namespace subkdom
