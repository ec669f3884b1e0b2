#include <CLI11.hpp>

#include <map>
#include <string>
#include <vector>

#include "subkdom/runner.hpp"

namespace {

void add_common_options(CLI::App* cmd, subkdom::RunConfig& config) {
    cmd->add_option("--k", config.ks, "k value for k-domination (repeatable)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("input", config.input_path, "input file (stdin when omitted)");
    cmd->add_option("--format", config.format, "input format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, subkdom::InputFormat>{
                {"graph6", subkdom::InputFormat::graph6},
                {"edgelist", subkdom::InputFormat::edgelist}},
            CLI::ignore_case));
    cmd->add_option("--output", config.output, "output record format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, subkdom::OutputFormat>{
                {"jsonl", subkdom::OutputFormat::jsonl},
                {"csv", subkdom::OutputFormat::csv}},
            CLI::ignore_case));
    cmd->add_option("--oracle-cap", config.oracle_cap,
                    "largest order the exact search accepts")
        ->check(CLI::Range(1, 64));
    cmd->add_option("--threads", config.threads, "worker threads (output order is unaffected)")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "sub-k-domination toolkit: degree-sequence lower bounds for k-domination,\n"
        "an exact k-domination search, and criticality scans over graph corpora"};
    app.require_subcommand(1);

    subkdom::RunConfig config;

    auto* compute = app.add_subcommand(
        "compute", "sub_k and the degree-sequence bound suite (no exact search)");
    add_common_options(compute, config);

    auto* bounds = app.add_subcommand(
        "bounds", "like compute, plus the stratified bound at every valid stratum count");
    add_common_options(bounds, config);

    auto* exact = app.add_subcommand(
        "exact", "bound suite plus the exact k-domination number and equality flag");
    add_common_options(exact, config);

    auto* critical = app.add_subcommand(
        "critical", "edge-deletion / edge-addition / vertex-deletion criticality reports");
    add_common_options(critical, config);

    auto* scan = app.add_subcommand(
        "scan", "bounds, exact values, and criticality in one pass, with filters and a summary");
    add_common_options(scan, config);
    scan->add_option("--filter", config.filter, "emit only matching records")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, subkdom::ScanFilter>{
                {"equality", subkdom::ScanFilter::equality},
                {"critical", subkdom::ScanFilter::critical},
                {"violations", subkdom::ScanFilter::violations}},
            CLI::ignore_case));

    auto* bench = app.add_subcommand(
        "bench", "time the linear degree-sequence pipeline on synthetic sequences");
    bench->add_option("--k", config.ks, "k value (first entry is used)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--bench-sizes", config.bench_sizes, "sequence lengths to time")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", config.bench_seed, "random seed for the synthetic degrees");

    CLI11_PARSE(app, argc, argv);

    if (compute->parsed()) config.command = subkdom::Command::compute;
    if (bounds->parsed()) config.command = subkdom::Command::bounds;
    if (exact->parsed()) config.command = subkdom::Command::exact;
    if (critical->parsed()) config.command = subkdom::Command::critical;
    if (scan->parsed()) config.command = subkdom::Command::scan;
    if (bench->parsed()) config.command = subkdom::Command::bench;

    try {
        return subkdom::run(config);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return 2;
    }
}
