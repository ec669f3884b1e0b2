#include "subkdom/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "subkdom/degree_sequence.hpp"
#include "subkdom/invariants.hpp"

namespace subkdom {

bool is_k_dominating(const Graph& g, std::span<const int> s, int k) {
    if (k < 1) throw DomainError("is_k_dominating requires k >= 1");
    const int n = g.order();
    std::vector<char> in_set(static_cast<std::size_t>(n), 0);
    for (const int v : s) {
        if (v < 0 || v >= n)
            throw DomainError("set vertex " + std::to_string(v) + " out of range");
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (in_set[static_cast<std::size_t>(v)]) continue;
        int hits = 0;
        for (const int u : g.neighbors(v)) {
            if (in_set[static_cast<std::size_t>(u)] && ++hits >= k) break;
        }
        if (hits < k) return false;
    }
    return true;
}

namespace {

struct SubsetSearch {
    int n = 0;
    int k = 1;
    int target = 0;  // cardinality currently tried
    std::vector<std::uint64_t> rows;
    std::vector<int> hit_count;  // |N(v) ∩ chosen|
    std::vector<int> chosen;
    std::uint64_t chosen_mask = 0;

    // Chooses vertices in ascending label order, trying "include" before
    // "exclude", so the first complete solution is lexicographically smallest.
    bool search(int next) {
        const int have = static_cast<int>(chosen.size());
        if (have == target) {
            for (int v = 0; v < n; ++v)
                if (!(chosen_mask >> v & 1) && hit_count[static_cast<std::size_t>(v)] < k)
                    return false;
            return true;
        }
        if (next == n) return false;
        if (have + (n - next) < target) return false;

        // Vertices before `next` that were not chosen stay outside; cut if one
        // cannot reach quota k from the vertices still eligible.
        const std::uint64_t eligible = ~std::uint64_t{0} << next;
        const int budget = target - have;
        for (int v = 0; v < next; ++v) {
            if (chosen_mask >> v & 1) continue;
            const int deficit = k - hit_count[static_cast<std::size_t>(v)];
            if (deficit <= 0) continue;
            if (deficit > budget) return false;
            if (deficit > std::popcount(rows[static_cast<std::size_t>(v)] & eligible))
                return false;
        }

        chosen.push_back(next);
        chosen_mask |= std::uint64_t{1} << next;
        std::uint64_t nbrs = rows[static_cast<std::size_t>(next)];
        while (nbrs) {
            ++hit_count[static_cast<std::size_t>(std::countr_zero(nbrs))];
            nbrs &= nbrs - 1;
        }
        if (search(next + 1)) return true;
        chosen.pop_back();
        chosen_mask &= ~(std::uint64_t{1} << next);
        nbrs = rows[static_cast<std::size_t>(next)];
        while (nbrs) {
            --hit_count[static_cast<std::size_t>(std::countr_zero(nbrs))];
            nbrs &= nbrs - 1;
        }

        return search(next + 1);
    }
};

}  // namespace

KDomWitness k_domination_number(const Graph& g, int k, int oracle_cap) {
    if (k < 1) throw DomainError("k_domination_number requires k >= 1");
    if (oracle_cap < 1) throw DomainError("oracle cap must be >= 1");
    const int n = g.order();
    if (n > oracle_cap)
        throw ResourceLimitError("graph order " + std::to_string(n) +
                                 " exceeds the oracle cap " + std::to_string(oracle_cap));
    if (n > 64)
        throw ResourceLimitError("exact search supports at most 64 vertices");
    if (n == 0) return {k, 0, {}};
    if (k > g.max_degree()) {
        // No outside vertex could collect k chosen neighbors, so V(G) is the
        // only k-dominating set.
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return {k, n, all};
    }

    SubsetSearch state;
    state.n = n;
    state.k = k;
    state.rows.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) state.rows[static_cast<std::size_t>(v)] = g.row64(v);
    state.hit_count.assign(static_cast<std::size_t>(n), 0);

    for (int c = 1; c <= n; ++c) {
        state.target = c;
        state.chosen.clear();
        state.chosen_mask = 0;
        std::fill(state.hit_count.begin(), state.hit_count.end(), 0);
        if (state.search(0)) return {k, c, state.chosen};
    }
    throw Error("subset search exhausted; V(G) is always k-dominating");
}

std::optional<std::int64_t> caro_roditty_upper(std::int64_t n, int min_degree, int k) {
    if (k < 1) throw DomainError("caro_roditty_upper requires k >= 1");
    if (n < 0 || min_degree < 0) throw DomainError("caro_roditty_upper requires n, delta >= 0");
    for (std::int64_t r = 1; r <= n; ++r)
        if (min_degree * r >= (r + 1) * k - r) return r * n / (r + 1);
    return std::nullopt;
}

CubicInterval cubic_interval(std::int64_t n, int k) {
    if (k < 1 || k > 3) throw DomainError("cubic_interval requires k in {1, 2, 3}");
    if (n < 4) throw DomainError("cubic_interval requires n >= 4");
    const auto upper = caro_roditty_upper(n, 3, k);
    if (!upper) throw Error("degree-3 r search cannot fail for k <= 3");
    return {sub_k_regular(n, 3, k), *upper};
}

bool equality_check(const Graph& g, int k, int oracle_cap) {
    return sub_k(DegreeSequence::of(g), k) == k_domination_number(g, k, oracle_cap).gamma_k;
}

}  // namespace subkdom
