#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subkdom/criticality.hpp"
#include "subkdom/degree_sequence.hpp"
#include "subkdom/exact.hpp"
#include "subkdom/invariants.hpp"

namespace subkdom {

enum class OutputFormat { jsonl, csv };

/// Per-(graph, k) record of the lower-bound suite, with the optional exact
/// oracle section attached separately. sub_k always attains the maximum of
/// the three lower bounds; the *_tight flags say which others match it.
struct BoundReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    int k = 1;
    int sub_k = 0;
    std::int64_t fink_jacobson = 0;
    std::optional<StratifiedBest> stratified;         // best stratum
    std::vector<StratifiedBest> stratified_levels;    // per valid stratum (verbose mode)
    std::optional<std::int64_t> caro_roditty;         // when some r qualifies
    bool k_exceeds_max_degree = false;                // gamma_k = n regime
    bool fink_jacobson_tight = false;
    bool stratified_tight = false;
    std::optional<int> gamma_k;                       // oracle section
    std::vector<int> witness;
    std::optional<bool> equality;
};

BoundReport make_bound_report(const DegreeSequence& d, int k, bool include_levels = false);

/// Adds gamma_k, witness, and the equality flag. Propagates the oracle's
/// ResourceLimitError on over-cap graphs.
void attach_oracle(BoundReport& report, const Graph& g, int oracle_cap = kDefaultOracleCap);

/// One output line: a bound section, a criticality section, or a per-record
/// error entry, in any combination.
struct OutputRecord {
    std::int64_t id = 0;
    std::string graph6;  // empty when the input was not graph6
    std::optional<BoundReport> bounds;
    std::optional<CriticalityReport> criticality;
    std::optional<std::string> error;
};

/// True iff the record contradicts a proved relation (a bound exceeding
/// sub_k, sub_k exceeding gamma_k, or a failed criticality consequence).
bool is_violation(const OutputRecord& record);

/// Fixed CSV schema shared by every command:
///   id,n,m,k,sub_k,fink_jacobson,stratified,gamma_k,equality,
///   ed_critical,ea_critical,vd_critical
/// Absent values are blank; rationals are rendered as "p/q".
std::string csv_header();
std::string to_csv(const OutputRecord& record);

/// JSON Lines with the field names of the record types; rationals are
/// rendered as "p/q". Key order is fixed, so output is byte-deterministic.
std::string to_jsonl(const OutputRecord& record);

}  // namespace subkdom
