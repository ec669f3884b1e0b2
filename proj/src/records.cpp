#include "subkdom/records.hpp"

#include <json.hpp>

namespace subkdom {

BoundReport make_bound_report(const DegreeSequence& d, int k, bool include_levels) {
    BoundReport report;
    report.n = d.n();
    report.m = d.prefix(d.n()) / 2;
    report.k = k;
    report.sub_k = sub_k(d, k);
    report.fink_jacobson = fink_jacobson_bound(d.n(), d.max_degree(), k);
    report.stratified = best_stratified_bound(d, k);
    if (include_levels) report.stratified_levels = stratified_bounds_per_t(d, k);
    report.caro_roditty = caro_roditty_upper(d.n(), d.min_degree(), k);
    report.k_exceeds_max_degree = k > d.max_degree();
    report.fink_jacobson_tight = report.fink_jacobson == report.sub_k;
    report.stratified_tight =
        report.stratified && report.stratified->bound.ceil() == report.sub_k;
    return report;
}

void attach_oracle(BoundReport& report, const Graph& g, int oracle_cap) {
    const KDomWitness result = k_domination_number(g, report.k, oracle_cap);
    report.gamma_k = result.gamma_k;
    report.witness = result.witness;
    report.equality = result.gamma_k == report.sub_k;
}

bool is_violation(const OutputRecord& record) {
    if (record.bounds) {
        const auto& b = *record.bounds;
        if (b.fink_jacobson > b.sub_k) return true;
        if (b.stratified && b.stratified->bound.ceil() > b.sub_k) return true;
        if (b.gamma_k && b.sub_k > *b.gamma_k) return true;
    }
    if (record.criticality) {
        const auto& c = *record.criticality;
        for (const CheckResult check :
             {c.ed_tail_independent, c.ed_unit_increment, c.ea_low_degree_clique,
              c.ea_unit_decrement, c.vd_tail_attachment})
            if (check == CheckResult::fail) return true;
    }
    return false;
}

namespace {

const char* check_name(CheckResult r) {
    switch (r) {
        case CheckResult::pass: return "pass";
        case CheckResult::fail: return "fail";
        case CheckResult::not_applicable: return "not_applicable";
    }
    return "?";
}

const char* mutation_name(Mutation::Kind kind) {
    switch (kind) {
        case Mutation::Kind::delete_edge: return "delete_edge";
        case Mutation::Kind::add_edge: return "add_edge";
        case Mutation::Kind::delete_vertex: return "delete_vertex";
    }
    return "?";
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string csv_header() {
    return "id,n,m,k,sub_k,fink_jacobson,stratified,gamma_k,equality,"
           "ed_critical,ea_critical,vd_critical";
}

std::string to_csv(const OutputRecord& record) {
    std::string row = std::to_string(record.id);
    std::string n;
    std::string m;
    std::string k;
    std::string sub;
    if (record.bounds) {
        n = std::to_string(record.bounds->n);
        m = std::to_string(record.bounds->m);
        k = std::to_string(record.bounds->k);
        sub = std::to_string(record.bounds->sub_k);
    } else if (record.criticality) {
        n = std::to_string(record.criticality->n);
        m = std::to_string(record.criticality->m);
        k = std::to_string(record.criticality->k);
        sub = std::to_string(record.criticality->sub_value);
    }
    row += "," + n + "," + m + "," + k + "," + sub;

    if (record.bounds) {
        row += "," + std::to_string(record.bounds->fink_jacobson);
        row += ",";
        if (record.bounds->stratified) row += record.bounds->stratified->bound.str();
        row += ",";
        if (record.bounds->gamma_k) row += std::to_string(*record.bounds->gamma_k);
        row += ",";
        if (record.bounds->equality) row += csv_bool(*record.bounds->equality);
    } else {
        row += ",,,,";
    }

    if (record.criticality) {
        row += "," + csv_bool(record.criticality->ed_critical);
        row += "," + csv_bool(record.criticality->ea_critical);
        row += "," + csv_bool(record.criticality->vd_critical);
    } else {
        row += ",,,";
    }
    return row;
}

std::string to_jsonl(const OutputRecord& record) {
    nlohmann::ordered_json j;
    j["id"] = record.id;
    if (!record.graph6.empty()) j["graph6"] = record.graph6;
    if (record.error) {
        j["error"] = *record.error;
        return j.dump();
    }
    if (record.bounds) {
        const auto& b = *record.bounds;
        j["n"] = b.n;
        j["m"] = b.m;
        j["k"] = b.k;
        j["sub_k"] = b.sub_k;
        j["fink_jacobson"] = b.fink_jacobson;
        j["fink_jacobson_tight"] = b.fink_jacobson_tight;
        if (b.stratified) {
            j["stratified"] = {{"t", b.stratified->t}, {"bound", b.stratified->bound.str()}};
        } else {
            j["stratified"] = nullptr;
        }
        j["stratified_tight"] = b.stratified_tight;
        if (!b.stratified_levels.empty()) {
            auto& levels = j["stratified_levels"];
            levels = nlohmann::ordered_json::array();
            for (const auto& level : b.stratified_levels)
                levels.push_back({{"t", level.t}, {"bound", level.bound.str()}});
        }
        if (b.caro_roditty)
            j["caro_roditty"] = *b.caro_roditty;
        else
            j["caro_roditty"] = nullptr;
        j["k_exceeds_max_degree"] = b.k_exceeds_max_degree;
        if (b.gamma_k) {
            j["gamma_k"] = *b.gamma_k;
            j["witness"] = b.witness;
            j["equality"] = *b.equality;
        }
    }
    if (record.criticality) {
        const auto& c = *record.criticality;
        if (!record.bounds) {
            j["n"] = c.n;
            j["m"] = c.m;
            j["k"] = c.k;
            j["sub_k"] = c.sub_value;
        }
        j["ed_critical"] = c.ed_critical;
        j["ed_vacuous"] = c.ed_vacuous;
        j["ea_critical"] = c.ea_critical;
        j["ea_vacuous"] = c.ea_vacuous;
        j["vd_critical"] = c.vd_critical;
        j["checks"] = {{"ed_tail_independent", check_name(c.ed_tail_independent)},
                       {"ed_unit_increment", check_name(c.ed_unit_increment)},
                       {"ea_low_degree_clique", check_name(c.ea_low_degree_clique)},
                       {"ea_unit_decrement", check_name(c.ea_unit_decrement)},
                       {"vd_tail_attachment", check_name(c.vd_tail_attachment)}};
        if (c.counterexample) {
            const auto& cx = *c.counterexample;
            nlohmann::ordered_json mutation;
            mutation["kind"] = mutation_name(cx.kind);
            mutation["u"] = cx.u;
            if (cx.kind != Mutation::Kind::delete_vertex) mutation["v"] = cx.v;
            mutation["sub_before"] = cx.sub_before;
            mutation["sub_after"] = cx.sub_after;
            j["counterexample"] = mutation;
        } else {
            j["counterexample"] = nullptr;
        }
        if (c.tail_independent_all_orderings)
            j["tail_independent_all_orderings"] = *c.tail_independent_all_orderings;
        if (c.tail_attachment_all_orderings)
            j["tail_attachment_all_orderings"] = *c.tail_attachment_all_orderings;
    }
    return j.dump();
}

}  // namespace subkdom
