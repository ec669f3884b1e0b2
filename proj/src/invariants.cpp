#include "subkdom/invariants.hpp"

#include <string>

namespace subkdom {

int sub_k(const DegreeSequence& d, int k) {
    if (k < 1) throw DomainError("sub_k requires k >= 1");
    const int n = d.n();
    if (n == 0) throw DomainError("sub_k of an empty degree sequence");
    const auto kk = static_cast<std::int64_t>(k);
    const std::int64_t target = kk * n;
    for (int t = 1; t <= n; ++t)
        if (kk * t + d.prefix(t) >= target) return t;
    throw Error("sub_k scan exhausted; t = n always satisfies the condition");
}

int sub_k(const Graph& g, int k) {
    return sub_k(DegreeSequence::of(g), k);
}

std::int64_t sub_k_regular(std::int64_t n, std::int64_t r, int k) {
    if (k < 1) throw DomainError("sub_k_regular requires k >= 1");
    if (n < 1) throw DomainError("sub_k_regular requires n >= 1");
    if (r < 0 || r > n - 1) throw DomainError("regular degree must lie in [0, n-1]");
    return ceil_div(k * n, r + k);
}

bool kn_equality_threshold(std::int64_t n, int k) {
    if (k < 1) throw DomainError("kn_equality_threshold requires k >= 1");
    if (k > n - 1)
        throw DomainError("kn_equality_threshold requires k <= n-1");
    const auto km1 = static_cast<std::int64_t>(k) - 1;
    return n > km1 * km1;
}

std::int64_t fink_jacobson_bound(std::int64_t n, int max_degree, int k) {
    if (k < 1) throw DomainError("fink_jacobson_bound requires k >= 1");
    if (n < 1) throw DomainError("fink_jacobson_bound requires n >= 1");
    if (max_degree < 0 || max_degree > n - 1)
        throw DomainError("max degree must lie in [0, n-1]");
    return ceil_div(k * n, max_degree + k);
}

namespace {

// Vertices in the top t degree levels Delta, Delta-1, ..., Delta-t+1.
std::int64_t stratum_size(const std::vector<std::int64_t>& counts, int max_degree, int t) {
    std::int64_t s = 0;
    for (int i = 1; i <= t; ++i) s += counts[static_cast<std::size_t>(max_degree + 1 - i)];
    return s;
}

void check_stratum_count(const DegreeSequence& d, int t) {
    if (t < 1 || t > d.max_degree())
        throw PreconditionError("stratum count must lie in [1, max degree]");
}

}  // namespace

bool stratified_guard(const DegreeSequence& d, int t) {
    check_stratum_count(d, t);
    const std::int64_t s = stratum_size(d.level_counts(), d.max_degree(), t);
    return s + d.prefix(static_cast<int>(s)) < d.n();
}

StratifiedParams stratified_params(const DegreeSequence& d, int t) {
    check_stratum_count(d, t);
    const int max_degree = d.max_degree();
    const auto counts = d.level_counts();
    StratifiedParams p;
    p.t = t;
    p.s_t = stratum_size(counts, max_degree, t);
    if (p.s_t + 1 > d.n())
        throw PreconditionError("d_{s_t+1} undefined: all vertices lie in the top strata");
    p.delta_t = d.sorted()[static_cast<std::size_t>(p.s_t)];
    p.level_counts.reserve(static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i)
        p.level_counts.push_back(counts[static_cast<std::size_t>(max_degree + 1 - i)]);
    return p;
}

Rational stratified_bound(const DegreeSequence& d, int k, int t) {
    if (k < 1) throw DomainError("stratified_bound requires k >= 1");
    if (!stratified_guard(d, t))
        throw PreconditionError("stratified bound hypothesis fails at stratum count " +
                                std::to_string(t));
    const StratifiedParams p = stratified_params(d, t);
    // The stratum degree total sum_i (Delta + 1 - i) * n_{Delta+1-i} equals the
    // prefix sum over the s_t largest degrees, so the numerator reduces to
    // k*n - S_{s_t} + Delta_t * s_t.
    const std::int64_t numerator = static_cast<std::int64_t>(k) * d.n() -
                                   d.prefix(static_cast<int>(p.s_t)) +
                                   static_cast<std::int64_t>(p.delta_t) * p.s_t;
    return {numerator, k + p.delta_t};
}

std::vector<StratifiedBest> stratified_bounds_per_t(const DegreeSequence& d, int k) {
    if (k < 1) throw DomainError("stratified bounds require k >= 1");
    std::vector<StratifiedBest> out;
    const int n = d.n();
    const int max_degree = d.max_degree();
    if (n == 0 || max_degree == 0) return out;
    const auto counts = d.level_counts();
    std::int64_t s = 0;
    for (int t = 1; t <= max_degree; ++t) {
        s += counts[static_cast<std::size_t>(max_degree + 1 - t)];
        if (s + d.prefix(static_cast<int>(s)) >= n) break;  // guard is monotone in t
        const int delta_t = d.sorted()[static_cast<std::size_t>(s)];
        const std::int64_t numerator = static_cast<std::int64_t>(k) * n -
                                       d.prefix(static_cast<int>(s)) +
                                       static_cast<std::int64_t>(delta_t) * s;
        out.push_back({t, Rational{numerator, k + delta_t}});
    }
    return out;
}

std::optional<StratifiedBest> best_stratified_bound(const DegreeSequence& d, int k) {
    std::optional<StratifiedBest> best;
    for (const auto& candidate : stratified_bounds_per_t(d, k))
        if (!best || candidate.bound > best->bound) best = candidate;
    return best;
}

CoronaComparison corona_comparison(int n, int k) {
    if (n < 4) throw DomainError("corona_comparison requires n >= 4");
    if (k < 1) throw DomainError("corona_comparison requires k >= 1");
    const std::int64_t order = 2 * static_cast<std::int64_t>(n) - 1;
    const int max_degree = n - 1;
    // Hypothesis with a unique maximum-degree vertex: 1 + Delta/k < order.
    if (!(k + static_cast<std::int64_t>(max_degree) < static_cast<std::int64_t>(k) * order))
        throw PreconditionError("corona comparison hypothesis fails");

    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(order));
    degrees.push_back(max_degree);
    for (int i = 1; i < n; ++i) degrees.push_back(2);
    for (int i = 1; i < n; ++i) degrees.push_back(1);
    const auto d = DegreeSequence::from_degrees(degrees);

    const auto best = best_stratified_bound(d, k);
    if (!best) throw PreconditionError("no valid stratum count for the corona sequence");
    const Rational fj{static_cast<std::int64_t>(k) * order, max_degree + k};
    return {best->bound, fj, best->bound - fj};
}

}  // namespace subkdom
