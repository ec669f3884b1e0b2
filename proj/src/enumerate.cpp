#include "subkdom/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>

namespace subkdom {

namespace {

constexpr int kMaxCodeOrder = 11;  // 55 triangle bits

void check_order(int n) {
    if (n < 0 || n > kMaxCodeOrder)
        throw DomainError("graph codes support orders 0 through " +
                          std::to_string(kMaxCodeOrder));
}

std::size_t pair_position(int i, int j) {  // i < j
    return static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
}

// Branch-and-bound minimization of the relabeled code under column-wise
// lexicographic order (column 1 compared first). Positions are filled in
// order; placing a vertex at position p fixes exactly the bits of column p
// (pairs with the p already-placed vertices), so a partial labeling pins a
// column prefix that can be compared against the best complete code found.
// Codes of one isomorphism class share the same minimum, which serves as the
// canonical form.
struct Canonicalizer {
    int n;
    std::vector<std::uint32_t> rows;  // adjacency masks of the input labeling
    GraphCode best;

    static GraphCode column_of(GraphCode code, int pos) {
        return code >> pair_position(0, pos) & ((GraphCode{1} << pos) - 1);
    }

    bool col_lex_less(GraphCode a, GraphCode b) const {
        for (int p = 1; p < n; ++p) {
            const GraphCode ca = column_of(a, p);
            const GraphCode cb = column_of(b, p);
            if (ca != cb) return ca < cb;
        }
        return false;
    }

    void place(int pos, std::uint32_t used, std::vector<int>& placed, GraphCode prefix,
               bool strictly_better) {
        if (pos == n) {
            // `best` may have shrunk since an ancestor's strict improvement,
            // so the leaf takes the minimum rather than overwriting.
            if (strictly_better && col_lex_less(prefix, best)) best = prefix;
            return;
        }
        const std::size_t column_base = pair_position(0, pos);
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            GraphCode column = 0;
            for (int q = 0; q < pos; ++q)
                if (rows[static_cast<std::size_t>(v)] >> placed[static_cast<std::size_t>(q)] & 1)
                    column |= GraphCode{1} << q;
            bool better = strictly_better;
            if (!better) {
                const GraphCode best_column = column_of(best, pos);
                if (column > best_column) continue;  // prefix already worse
                better = column < best_column;
            }
            placed.push_back(v);
            place(pos + 1, used | (std::uint32_t{1} << v), placed, prefix | column << column_base,
                  better);
            placed.pop_back();
        }
    }
};

}  // namespace

GraphCode graph_code(const Graph& g) {
    check_order(g.order());
    GraphCode code = 0;
    for (const auto& [u, v] : g.edges()) code |= GraphCode{1} << pair_position(u, v);
    return code;
}

Graph graph_from_code(int n, GraphCode code) {
    check_order(n);
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (code >> pair_position(i, j) & 1) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

GraphCode canonical_code(int n, GraphCode code) {
    check_order(n);
    if (n < 2) return 0;
    Canonicalizer state;
    state.n = n;
    state.rows.assign(static_cast<std::size_t>(n), 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (code >> pair_position(i, j) & 1) {
                state.rows[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
                state.rows[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
            }
    state.best = code;
    std::vector<int> placed;
    placed.reserve(static_cast<std::size_t>(n));
    state.place(0, 0, placed, 0, false);
    return state.best;
}

const std::vector<GraphCode>& nonisomorphic_codes(int n) {
    check_order(n);
    static std::mutex mutex;
    static std::map<int, std::vector<GraphCode>> cache;
    std::scoped_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // Every graph on m vertices is some graph on m-1 vertices plus one vertex
    // with an arbitrary neighborhood, so extending each canonical parent by
    // all 2^(m-1) neighborhoods and re-canonicalizing covers every class.
    // Levels are filled bottom-up and memoized.
    for (int m = 0; m <= n; ++m) {
        if (cache.contains(m)) continue;
        if (m <= 1) {
            cache.emplace(m, std::vector<GraphCode>{0});
            continue;
        }
        const auto& parents = cache.at(m - 1);
        std::set<GraphCode> out;
        const std::size_t column_base = pair_position(0, m - 1);
        for (const GraphCode parent : parents)
            for (std::uint32_t neighborhood = 0; neighborhood < (std::uint32_t{1} << (m - 1));
                 ++neighborhood)
                out.insert(canonical_code(m, parent | GraphCode{neighborhood} << column_base));
        cache.emplace(m, std::vector<GraphCode>(out.begin(), out.end()));
    }
    return cache.at(n);
}

void for_each_nonisomorphic(int n, const std::function<void(const Graph&)>& fn) {
    for (const GraphCode code : nonisomorphic_codes(n)) fn(graph_from_code(n, code));
}

}  // namespace subkdom
