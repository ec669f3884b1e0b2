#pragma once

#include <optional>
#include <vector>

#include "subkdom/degree_sequence.hpp"
#include "subkdom/graph.hpp"

namespace subkdom {

/// Verdict of a structural consequence check: not_applicable when the
/// criticality hypothesis does not hold.
enum class CheckResult { pass, fail, not_applicable };

/// A single graph mutation with the sub_k values before and after; serves as
/// the witness that a graph is not critical.
struct Mutation {
    enum class Kind { delete_edge, add_edge, delete_vertex };
    Kind kind = Kind::delete_edge;
    int u = -1;
    int v = -1;  // -1 for vertex deletions
    int sub_before = 0;
    int sub_after = 0;
};

struct CriticalityDetail {
    bool critical = false;
    bool vacuous = false;  // the mutation set quantified over was empty
    std::optional<Mutation> counterexample;
};

/// Edge-deletion critical: every edge deletion raises sub_k. An edgeless
/// graph is vacuously critical (flagged). These predicates rebuild the graph
/// and recompute sub_k from scratch per mutation; the bulk scan path in
/// criticality_report uses the incremental counter instead.
CriticalityDetail ed_critical_detail(const Graph& g, int k);
/// Edge-addition critical: every complement-edge addition lowers sub_k.
/// A complete graph is vacuously critical (flagged).
CriticalityDetail ea_critical_detail(const Graph& g, int k);
/// Vertex-deletion critical: every vertex deletion raises sub_k. Deleting
/// the only vertex leaves the null graph, whose sub_k counts as 0.
CriticalityDetail vd_critical_detail(const Graph& g, int k);

bool is_ed_critical(const Graph& g, int k);
bool is_ea_critical(const Graph& g, int k);
bool is_vd_critical(const Graph& g, int k);

/// Structural consequences of criticality. All index-based checks use the
/// canonical vertex ordering: degree non-increasing, ties by ascending label,
/// with t = sub_k(G).
///
/// For an edge-deletion-critical graph, the tail {v_{t+1}, ..., v_n} is
/// independent (certifying n - t <= independence number).
CheckResult check_ed_tail_independent(const Graph& g, int k);
/// For an edge-deletion-critical graph with no isolates,
/// floor(t + (1/k) S_t) = n and every edge deletion raises sub_k by exactly 1.
CheckResult check_ed_unit_increment(const Graph& g, int k);
/// For an edge-addition-critical graph, the vertices of degree below d_t form
/// a clique.
CheckResult check_ea_low_degree_clique(const Graph& g, int k);
/// For an edge-addition-critical graph with no isolates, every complement-edge
/// addition lowers sub_k by exactly 1.
CheckResult check_ea_unit_decrement(const Graph& g, int k);
/// For a vertex-deletion-critical graph, every tail vertex has at least k+1
/// neighbors among {v_1, ..., v_t}.
CheckResult check_vd_tail_attachment(const Graph& g, int k);

struct CriticalityReport {
    int k = 1;
    int n = 0;
    int m = 0;
    int sub_value = 0;  // sub_k(G)

    bool ed_critical = false;
    bool ea_critical = false;
    bool vd_critical = false;
    bool ed_vacuous = false;
    bool ea_vacuous = false;

    CheckResult ed_tail_independent = CheckResult::not_applicable;
    CheckResult ed_unit_increment = CheckResult::not_applicable;
    CheckResult ea_low_degree_clique = CheckResult::not_applicable;
    CheckResult ea_unit_decrement = CheckResult::not_applicable;
    CheckResult vd_tail_attachment = CheckResult::not_applicable;

    /// First non-criticality witness found, in ED, EA, VD order.
    std::optional<Mutation> counterexample;

    /// Recorded (not asserted) when the corresponding tail check passed: does
    /// the property hold for every vertex ordering consistent with the degree
    /// sequence, not just the canonical one?
    std::optional<bool> tail_independent_all_orderings;
    std::optional<bool> tail_attachment_all_orderings;
};

CriticalityReport criticality_report(const Graph& g, int k);

/// Incremental sub_k over degree-level counts. Mutation scans adjust one or
/// two degree entries and re-derive sub_k from the level counts in
/// O(distinct degrees) instead of rebuilding the graph.
class SubkCounter {
public:
    explicit SubkCounter(const DegreeSequence& d);

    /// sub_k of the current multiset; 0 when the multiset is empty.
    int value(int k) const;

    void remove_vertex_degree(int d);  // drops one vertex of degree d
    void add_vertex_degree(int d);
    void decrement_degree(int d);      // a vertex of degree d loses an edge
    void increment_degree(int d);      // a vertex of degree d gains an edge

private:
    std::vector<std::int64_t> counts_;  // index = degree value
    std::int64_t n_ = 0;
};

}  // namespace subkdom
