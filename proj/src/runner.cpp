#include "subkdom/runner.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <utility>

#include "subkdom/bench.hpp"
#include "subkdom/criticality.hpp"
#include "subkdom/graph6.hpp"

namespace subkdom {

namespace {

constexpr std::size_t kBatchLines = 64;

struct LineOutput {
    std::string records;
    std::string diagnostics;
    RunStats stats;
};

void merge(RunStats& into, const RunStats& from) {
    into.graphs += from.graphs;
    into.records += from.records;
    into.errors += from.errors;
    into.violations += from.violations;
    into.equality += from.equality;
    into.ed_critical += from.ed_critical;
    into.ea_critical += from.ea_critical;
    into.vd_critical += from.vd_critical;
    into.ed_vacuous += from.ed_vacuous;
    into.ea_vacuous += from.ea_vacuous;
    into.check_failures += from.check_failures;
}

int count_check_failures(const CriticalityReport& c) {
    int failures = 0;
    for (const CheckResult check : {c.ed_tail_independent, c.ed_unit_increment,
                                    c.ea_low_degree_clique, c.ea_unit_decrement,
                                    c.vd_tail_attachment})
        if (check == CheckResult::fail) ++failures;
    return failures;
}

bool passes_filter(const RunConfig& config, const OutputRecord& record) {
    switch (config.filter) {
        case ScanFilter::none:
            return true;
        case ScanFilter::equality:
            return record.bounds && record.bounds->equality && *record.bounds->equality;
        case ScanFilter::critical:
            return record.criticality &&
                   (record.criticality->ed_critical || record.criticality->ea_critical ||
                    record.criticality->vd_critical);
        case ScanFilter::violations:
            return is_violation(record);
    }
    return true;
}

void render_record(const RunConfig& config, const OutputRecord& record, LineOutput& out) {
    ++out.stats.records;
    if (record.error) ++out.stats.errors;
    if (is_violation(record)) ++out.stats.violations;
    if (record.bounds && record.bounds->equality && *record.bounds->equality)
        ++out.stats.equality;
    if (record.criticality) {
        const auto& c = *record.criticality;
        out.stats.ed_critical += c.ed_critical ? 1 : 0;
        out.stats.ea_critical += c.ea_critical ? 1 : 0;
        out.stats.vd_critical += c.vd_critical ? 1 : 0;
        out.stats.ed_vacuous += c.ed_vacuous ? 1 : 0;
        out.stats.ea_vacuous += c.ea_vacuous ? 1 : 0;
        out.stats.check_failures += count_check_failures(c);
    }
    if (config.command == Command::scan && !record.error && !passes_filter(config, record))
        return;
    out.records += config.output == OutputFormat::csv ? to_csv(record) : to_jsonl(record);
    out.records += '\n';
}

void render_error(const RunConfig& config, std::int64_t id, const std::string& graph6,
                  const std::string& message, LineOutput& out) {
    OutputRecord record;
    record.id = id;
    record.graph6 = graph6;
    record.error = message;
    render_record(config, record, out);
    out.diagnostics += "record " + std::to_string(id) + ": " + message + "\n";
}

// One parsed graph, all requested k values.
void process_graph(const RunConfig& config, const Graph& g, std::int64_t id,
                   const std::string& graph6, LineOutput& out) {
    ++out.stats.graphs;
    const auto d = DegreeSequence::of(g);
    for (const int k : config.ks) {
        OutputRecord record;
        record.id = id;
        record.graph6 = graph6;
        if (config.command != Command::critical) {
            record.bounds = make_bound_report(d, k, config.command == Command::bounds);
            if (config.command == Command::exact || config.command == Command::scan) {
                try {
                    attach_oracle(*record.bounds, g, config.oracle_cap);
                } catch (const ResourceLimitError& e) {
                    render_error(config, id, graph6, e.what(), out);
                    continue;
                }
            }
        }
        if (config.command == Command::critical || config.command == Command::scan)
            record.criticality = criticality_report(g, k);
        render_record(config, record, out);
    }
}

// Degree-sequence-only path: bound commands never materialize adjacency and
// never touch the oracle, so over-cap graphs stream through fine.
void process_degrees(const RunConfig& config, const std::vector<int>& degrees, std::int64_t id,
                     const std::string& graph6, LineOutput& out) {
    ++out.stats.graphs;
    const auto d = DegreeSequence::from_degrees(degrees);
    for (const int k : config.ks) {
        OutputRecord record;
        record.id = id;
        record.graph6 = graph6;
        record.bounds = make_bound_report(d, k, config.command == Command::bounds);
        render_record(config, record, out);
    }
}

LineOutput process_graph6_line(const RunConfig& config, const std::string& line,
                               std::int64_t id) {
    LineOutput out;
    try {
        if (config.command == Command::compute || config.command == Command::bounds) {
            process_degrees(config, parse_graph6_degrees(line), id, line, out);
            return out;
        }
        if (config.command == Command::exact || config.command == Command::scan) {
            const std::int64_t order = graph6_order(line);
            if (order > config.oracle_cap) {
                for (std::size_t i = 0; i < config.ks.size(); ++i)
                    render_error(config, id, line,
                                 "graph order " + std::to_string(order) +
                                     " exceeds the oracle cap " +
                                     std::to_string(config.oracle_cap),
                                 out);
                return out;
            }
        }
        process_graph(config, parse_graph6(line), id, line, out);
    } catch (const Error& e) {
        render_error(config, id, line, e.what(), out);
    }
    return out;
}

std::string render_summary(const RunConfig& config, const RunStats& stats) {
    if (config.output == OutputFormat::csv) {
        std::ostringstream line;
        line << "# summary graphs=" << stats.graphs << " records=" << stats.records
             << " equality=" << stats.equality << " ed_critical=" << stats.ed_critical
             << " ea_critical=" << stats.ea_critical << " vd_critical=" << stats.vd_critical
             << " ed_vacuous=" << stats.ed_vacuous << " ea_vacuous=" << stats.ea_vacuous
             << " check_failures=" << stats.check_failures << " violations=" << stats.violations
             << " errors=" << stats.errors << "\n";
        return line.str();
    }
    std::ostringstream line;
    line << "{\"summary\":{\"graphs\":" << stats.graphs << ",\"records\":" << stats.records
         << ",\"equality\":" << stats.equality << ",\"ed_critical\":" << stats.ed_critical
         << ",\"ea_critical\":" << stats.ea_critical << ",\"vd_critical\":" << stats.vd_critical
         << ",\"ed_vacuous\":" << stats.ed_vacuous << ",\"ea_vacuous\":" << stats.ea_vacuous
         << ",\"check_failures\":" << stats.check_failures
         << ",\"violations\":" << stats.violations << ",\"errors\":" << stats.errors << "}}\n";
    return line.str();
}

void stream_graph6(const RunConfig& config, std::istream& in, std::ostream& out,
                   std::ostream& err, RunStats& stats) {
    const int threads = std::max(1, config.threads);
    using Batch = std::vector<std::pair<std::string, std::int64_t>>;

    auto run_batch = [&config](Batch batch) {
        std::vector<LineOutput> results;
        results.reserve(batch.size());
        for (auto& [line, id] : batch) results.push_back(process_graph6_line(config, line, id));
        return results;
    };
    auto write_results = [&](const std::vector<LineOutput>& results) {
        for (const auto& result : results) {
            out << result.records;
            err << result.diagnostics;
            merge(stats, result.stats);
        }
    };

    std::deque<std::future<std::vector<LineOutput>>> pending;
    const auto window = static_cast<std::size_t>(threads) * 2;
    Batch batch;
    std::int64_t id = 0;
    std::string line;

    auto dispatch = [&] {
        if (batch.empty()) return;
        if (threads == 1) {
            write_results(run_batch(std::move(batch)));
        } else {
            while (pending.size() >= window) {
                write_results(pending.front().get());
                pending.pop_front();
            }
            pending.push_back(
                std::async(std::launch::async, run_batch, std::move(batch)));
        }
        batch = Batch{};
    };

    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        batch.emplace_back(std::move(line), ++id);
        if (batch.size() >= kBatchLines) dispatch();
    }
    dispatch();
    while (!pending.empty()) {
        write_results(pending.front().get());
        pending.pop_front();
    }
}

int run_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.bench_sizes.empty()) throw DomainError("bench requires at least one size");
    const int k = config.ks.empty() ? 1 : config.ks.front();
    std::vector<BenchResult> results;
    for (const std::int64_t n : config.bench_sizes) {
        results.push_back(bench_sub_k(n, k, config.bench_seed));
        const auto& r = results.back();
        out << "bench n=" << r.n << " k=" << r.k << " sub_k=" << r.sub_value << " millis="
            << std::fixed << std::setprecision(3) << r.millis << "\n";
    }
    bool ok = true;
    for (std::size_t i = 1; i < results.size(); ++i) {
        const auto& small = results[i - 1];
        const auto& large = results[i];
        if (large.n <= small.n) continue;
        const double size_ratio = static_cast<double>(large.n) / static_cast<double>(small.n);
        // Sub-resolution timings count as linear; clamp the denominator.
        const double time_ratio = large.millis / std::max(small.millis, 0.5);
        const double allowed = 3.0 * size_ratio;
        out << "bench scaling " << small.n << "->" << large.n << " time_ratio="
            << std::fixed << std::setprecision(2) << time_ratio << " allowed=" << allowed
            << (time_ratio <= allowed ? " ok" : " FAIL") << "\n";
        if (time_ratio > allowed) {
            err << "bench: scaling from " << small.n << " to " << large.n
                << " exceeded the linearity budget\n";
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
        RunStats* stats_out) {
    for (const int k : config.ks)
        if (k < 1) throw DomainError("every k must be >= 1");
    if (config.command == Command::bench) return run_bench(config, out, err);

    RunStats stats;
    if (config.output == OutputFormat::csv) out << csv_header() << "\n";

    if (config.format == InputFormat::graph6) {
        stream_graph6(config, in, out, err, stats);
    } else {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        LineOutput result;
        try {
            process_graph(config, parse_edge_list(buffer.str()), 1, "", result);
        } catch (const Error& e) {
            render_error(config, 1, "", e.what(), result);
        }
        out << result.records;
        err << result.diagnostics;
        merge(stats, result.stats);
    }

    if (config.command == Command::scan) out << render_summary(config, stats);
    if (stats_out) *stats_out = stats;
    return stats.errors > 0 || stats.violations > 0 ? 1 : 0;
}

int run(const RunConfig& config) {
    if (!config.input_path.empty()) {
        std::ifstream file(config.input_path);
        if (!file) {
            std::cerr << "cannot open input file: " << config.input_path << "\n";
            return 2;
        }
        return run(config, file, std::cout, std::cerr);
    }
    return run(config, std::cin, std::cout, std::cerr);
}

}  // namespace subkdom
