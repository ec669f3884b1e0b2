#include "subkdom/criticality.hpp"

#include <algorithm>
#include <numeric>

#include "subkdom/invariants.hpp"
#include "subkdom/rational.hpp"

namespace subkdom {

SubkCounter::SubkCounter(const DegreeSequence& d) : n_(d.n()) {
    counts_.assign(static_cast<std::size_t>(n_) + 2, 0);
    for (const int deg : d.sorted()) ++counts_[static_cast<std::size_t>(deg)];
}

int SubkCounter::value(int k) const {
    if (k < 1) throw DomainError("sub_k requires k >= 1");
    if (n_ == 0) return 0;
    const auto kk = static_cast<std::int64_t>(k);
    const std::int64_t target = kk * n_;
    std::int64_t taken = 0;
    std::int64_t degree_sum = 0;
    for (auto d = static_cast<std::int64_t>(counts_.size()) - 1; d >= 0; --d) {
        const std::int64_t count = counts_[static_cast<std::size_t>(d)];
        if (count == 0) continue;
        // Within one degree level the condition k(taken+x) + S + x*d >= k*n is
        // linear in x; take the smallest x that satisfies it, if it fits.
        const std::int64_t x = ceil_div(target - kk * taken - degree_sum, kk + d);
        if (x <= count) return static_cast<int>(taken + x);
        taken += count;
        degree_sum += count * d;
    }
    throw Error("level scan exhausted; taking all vertices always satisfies the condition");
}

void SubkCounter::remove_vertex_degree(int d) {
    --counts_[static_cast<std::size_t>(d)];
    --n_;
}

void SubkCounter::add_vertex_degree(int d) {
    ++counts_[static_cast<std::size_t>(d)];
    ++n_;
}

void SubkCounter::decrement_degree(int d) {
    --counts_[static_cast<std::size_t>(d)];
    ++counts_[static_cast<std::size_t>(d) - 1];
}

void SubkCounter::increment_degree(int d) {
    --counts_[static_cast<std::size_t>(d)];
    ++counts_[static_cast<std::size_t>(d) + 1];
}

namespace {

int sub_after_vertex_delete(const Graph& g, int v, int k) {
    return g.order() == 1 ? 0 : sub_k(g.delete_vertex(v), k);
}

std::vector<std::pair<int, int>> complement_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

// Vertices sorted by degree non-increasing, ties by ascending label.
std::vector<int> canonical_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

CheckResult ed_tail_independent_impl(const Graph& g, int t, bool ed_critical) {
    if (!ed_critical) return CheckResult::not_applicable;
    const auto order = canonical_order(g);
    const int n = g.order();
    for (int i = t; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(order[static_cast<std::size_t>(i)],
                           order[static_cast<std::size_t>(j)]))
                return CheckResult::fail;
    return CheckResult::pass;
}

CheckResult ed_unit_increment_impl(const Graph& g, int k, int t, bool ed_critical) {
    if (!ed_critical || g.order() == 0 || g.min_degree() == 0)
        return CheckResult::not_applicable;
    const auto d = DegreeSequence::of(g);
    const std::int64_t value = static_cast<std::int64_t>(k) * t + d.prefix(t);
    if (value / k != g.order()) return CheckResult::fail;  // floor(t + S_t / k) = n
    for (const auto& [u, v] : g.edges())
        if (sub_k(g.delete_edge(u, v), k) != t + 1) return CheckResult::fail;
    return CheckResult::pass;
}

CheckResult ea_low_degree_clique_impl(const Graph& g, int t, bool ea_critical) {
    if (!ea_critical) return CheckResult::not_applicable;
    const auto d = DegreeSequence::of(g);
    const int threshold = d.sorted()[static_cast<std::size_t>(t) - 1];  // d_t
    std::vector<int> low;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < threshold) low.push_back(v);
    for (std::size_t i = 0; i < low.size(); ++i)
        for (std::size_t j = i + 1; j < low.size(); ++j)
            if (!g.adjacent(low[i], low[j])) return CheckResult::fail;
    return CheckResult::pass;
}

CheckResult ea_unit_decrement_impl(const Graph& g, int k, int t, bool ea_critical) {
    if (!ea_critical || g.order() == 0 || g.min_degree() == 0)
        return CheckResult::not_applicable;
    for (const auto& [u, v] : complement_pairs(g))
        if (sub_k(g.add_edge(u, v), k) != t - 1) return CheckResult::fail;
    return CheckResult::pass;
}

CheckResult vd_tail_attachment_impl(const Graph& g, int k, int t, bool vd_critical) {
    if (!vd_critical) return CheckResult::not_applicable;
    const auto order = canonical_order(g);
    const int n = g.order();
    std::vector<char> in_head(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < t; ++i) in_head[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;
    for (int i = t; i < n; ++i) {
        const int v = order[static_cast<std::size_t>(i)];
        int hits = 0;
        for (const int u : g.neighbors(v))
            if (in_head[static_cast<std::size_t>(u)]) ++hits;
        if (hits < k + 1) return CheckResult::fail;
    }
    return CheckResult::pass;
}

// Enumerates every tail set consistent with the degree sequence: the vertices
// of degree below the boundary value always belong to the tail, and any
// `need`-subset of the boundary degree class completes it.
template <typename Pred>
std::optional<bool> for_all_tail_choices(const Graph& g, int t, Pred holds_for_tail) {
    const int n = g.order();
    if (t >= n) return true;
    const auto d = DegreeSequence::of(g);
    const int boundary = d.sorted()[static_cast<std::size_t>(t)];
    std::vector<int> below;
    std::vector<int> boundary_class;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < boundary) below.push_back(v);
        else if (g.degree(v) == boundary) boundary_class.push_back(v);
    }
    int need = 0;
    for (int i = t; i < n; ++i)
        if (d.sorted()[static_cast<std::size_t>(i)] == boundary) ++need;

    const auto class_size = static_cast<int>(boundary_class.size());
    if (class_size > 20) return std::nullopt;  // do not enumerate huge tie classes
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << class_size); ++mask) {
        if (std::popcount(mask) != need) continue;
        std::vector<int> tail = below;
        for (int i = 0; i < class_size; ++i)
            if (mask >> i & 1) tail.push_back(boundary_class[static_cast<std::size_t>(i)]);
        if (!holds_for_tail(tail)) return false;
    }
    return true;
}

std::optional<bool> tail_independent_all_orderings(const Graph& g, int t) {
    return for_all_tail_choices(g, t, [&](const std::vector<int>& tail) {
        for (std::size_t i = 0; i < tail.size(); ++i)
            for (std::size_t j = i + 1; j < tail.size(); ++j)
                if (g.adjacent(tail[i], tail[j])) return false;
        return true;
    });
}

std::optional<bool> tail_attachment_all_orderings(const Graph& g, int k, int t) {
    return for_all_tail_choices(g, t, [&](const std::vector<int>& tail) {
        std::vector<char> in_tail(static_cast<std::size_t>(g.order()), 0);
        for (const int v : tail) in_tail[static_cast<std::size_t>(v)] = 1;
        for (const int v : tail) {
            int hits = 0;
            for (const int u : g.neighbors(v))
                if (!in_tail[static_cast<std::size_t>(u)]) ++hits;
            if (hits < k + 1) return false;
        }
        return true;
    });
}

}  // namespace

CriticalityDetail ed_critical_detail(const Graph& g, int k) {
    if (g.order() == 0) throw DomainError("criticality of the null graph is undefined");
    const int base = sub_k(g, k);
    const auto edges = g.edges();
    CriticalityDetail detail;
    detail.vacuous = edges.empty();
    detail.critical = true;
    for (const auto& [u, v] : edges) {
        const int after = sub_k(g.delete_edge(u, v), k);
        if (after <= base) {
            detail.critical = false;
            detail.counterexample = Mutation{Mutation::Kind::delete_edge, u, v, base, after};
            break;
        }
    }
    return detail;
}

CriticalityDetail ea_critical_detail(const Graph& g, int k) {
    if (g.order() == 0) throw DomainError("criticality of the null graph is undefined");
    const int base = sub_k(g, k);
    const auto pairs = complement_pairs(g);
    CriticalityDetail detail;
    detail.vacuous = pairs.empty();
    detail.critical = true;
    for (const auto& [u, v] : pairs) {
        const int after = sub_k(g.add_edge(u, v), k);
        if (after >= base) {
            detail.critical = false;
            detail.counterexample = Mutation{Mutation::Kind::add_edge, u, v, base, after};
            break;
        }
    }
    return detail;
}

CriticalityDetail vd_critical_detail(const Graph& g, int k) {
    if (g.order() == 0) throw DomainError("criticality of the null graph is undefined");
    const int base = sub_k(g, k);
    CriticalityDetail detail;
    detail.critical = true;
    for (int v = 0; v < g.order(); ++v) {
        const int after = sub_after_vertex_delete(g, v, k);
        if (after <= base) {
            detail.critical = false;
            detail.counterexample = Mutation{Mutation::Kind::delete_vertex, v, -1, base, after};
            break;
        }
    }
    return detail;
}

bool is_ed_critical(const Graph& g, int k) { return ed_critical_detail(g, k).critical; }
bool is_ea_critical(const Graph& g, int k) { return ea_critical_detail(g, k).critical; }
bool is_vd_critical(const Graph& g, int k) { return vd_critical_detail(g, k).critical; }

CheckResult check_ed_tail_independent(const Graph& g, int k) {
    return ed_tail_independent_impl(g, sub_k(g, k), is_ed_critical(g, k));
}

CheckResult check_ed_unit_increment(const Graph& g, int k) {
    return ed_unit_increment_impl(g, k, sub_k(g, k), is_ed_critical(g, k));
}

CheckResult check_ea_low_degree_clique(const Graph& g, int k) {
    return ea_low_degree_clique_impl(g, sub_k(g, k), is_ea_critical(g, k));
}

CheckResult check_ea_unit_decrement(const Graph& g, int k) {
    return ea_unit_decrement_impl(g, k, sub_k(g, k), is_ea_critical(g, k));
}

CheckResult check_vd_tail_attachment(const Graph& g, int k) {
    return vd_tail_attachment_impl(g, k, sub_k(g, k), is_vd_critical(g, k));
}

CriticalityReport criticality_report(const Graph& g, int k) {
    if (g.order() == 0) throw DomainError("criticality of the null graph is undefined");
    const auto d = DegreeSequence::of(g);
    const int base = sub_k(d, k);

    CriticalityReport report;
    report.k = k;
    report.n = g.order();
    report.m = g.edge_count();
    report.sub_value = base;

    SubkCounter counter(d);
    const auto degrees = g.degrees();

    const auto edges = g.edges();
    report.ed_vacuous = edges.empty();
    report.ed_critical = true;
    for (const auto& [u, v] : edges) {
        counter.decrement_degree(degrees[static_cast<std::size_t>(u)]);
        counter.decrement_degree(degrees[static_cast<std::size_t>(v)]);
        const int after = counter.value(k);
        counter.increment_degree(degrees[static_cast<std::size_t>(u)] - 1);
        counter.increment_degree(degrees[static_cast<std::size_t>(v)] - 1);
        if (after <= base) {
            report.ed_critical = false;
            if (!report.counterexample)
                report.counterexample = Mutation{Mutation::Kind::delete_edge, u, v, base, after};
            break;
        }
    }

    const auto pairs = complement_pairs(g);
    report.ea_vacuous = pairs.empty();
    report.ea_critical = true;
    for (const auto& [u, v] : pairs) {
        counter.increment_degree(degrees[static_cast<std::size_t>(u)]);
        counter.increment_degree(degrees[static_cast<std::size_t>(v)]);
        const int after = counter.value(k);
        counter.decrement_degree(degrees[static_cast<std::size_t>(u)] + 1);
        counter.decrement_degree(degrees[static_cast<std::size_t>(v)] + 1);
        if (after >= base) {
            report.ea_critical = false;
            if (!report.counterexample)
                report.counterexample = Mutation{Mutation::Kind::add_edge, u, v, base, after};
            break;
        }
    }

    report.vd_critical = true;
    for (int v = 0; v < g.order(); ++v) {
        counter.remove_vertex_degree(degrees[static_cast<std::size_t>(v)]);
        for (const int u : g.neighbors(v))
            counter.decrement_degree(degrees[static_cast<std::size_t>(u)]);
        const int after = counter.value(k);
        for (const int u : g.neighbors(v))
            counter.increment_degree(degrees[static_cast<std::size_t>(u)] - 1);
        counter.add_vertex_degree(degrees[static_cast<std::size_t>(v)]);
        if (after <= base) {
            report.vd_critical = false;
            if (!report.counterexample)
                report.counterexample = Mutation{Mutation::Kind::delete_vertex, v, -1, base, after};
            break;
        }
    }

    report.ed_tail_independent = ed_tail_independent_impl(g, base, report.ed_critical);
    report.ed_unit_increment = ed_unit_increment_impl(g, k, base, report.ed_critical);
    report.ea_low_degree_clique = ea_low_degree_clique_impl(g, base, report.ea_critical);
    report.ea_unit_decrement = ea_unit_decrement_impl(g, k, base, report.ea_critical);
    report.vd_tail_attachment = vd_tail_attachment_impl(g, k, base, report.vd_critical);

    if (report.ed_tail_independent == CheckResult::pass)
        report.tail_independent_all_orderings = tail_independent_all_orderings(g, base);
    if (report.vd_tail_attachment == CheckResult::pass)
        report.tail_attachment_all_orderings = tail_attachment_all_orderings(g, k, base);

    return report;
}

}  // namespace subkdom
