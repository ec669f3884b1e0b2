#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "subkdom/exact.hpp"
#include "subkdom/records.hpp"

namespace subkdom {

enum class Command { compute, bounds, exact, critical, scan, bench };
enum class InputFormat { graph6, edgelist };
enum class ScanFilter { none, equality, critical, violations };

struct RunConfig {
    Command command = Command::compute;
    std::vector<int> ks = {1};
    std::string input_path;  // empty reads stdin
    InputFormat format = InputFormat::graph6;
    OutputFormat output = OutputFormat::jsonl;
    int oracle_cap = kDefaultOracleCap;
    ScanFilter filter = ScanFilter::none;
    std::vector<std::int64_t> bench_sizes = {100000, 1000000, 10000000};
    std::uint64_t bench_seed = 20170309;
    int threads = 1;
};

struct RunStats {
    std::int64_t graphs = 0;
    std::int64_t records = 0;
    std::int64_t errors = 0;
    std::int64_t violations = 0;
    std::int64_t equality = 0;
    std::int64_t ed_critical = 0;
    std::int64_t ea_critical = 0;
    std::int64_t vd_critical = 0;
    std::int64_t ed_vacuous = 0;
    std::int64_t ea_vacuous = 0;
    std::int64_t check_failures = 0;
};

/// Runs one command over the input stream. Records stream to `out` in input
/// order (byte-identical regardless of thread count); per-record diagnostics
/// go to `err`. Returns 0 on success and 1 if any record-level error or
/// theorem-violation record was produced.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
        RunStats* stats = nullptr);

/// Reads config.input_path (or stdin) and writes to stdout/stderr.
int run(const RunConfig& config);

}  // namespace subkdom
