// blockseq: generate and check block-counting sequences a_{m;w}(n).

#include <iostream>

#include <CLI11.hpp>

#include "blockseq/run.hpp"

int main(int argc, char** argv)
{
    using namespace blockseq;

    CLI::App app{"Block-counting sequences: occurrences of w in base-m expansions, mod m"};
    RunConfig cfg;
    std::string command;
    std::string format;
    std::string out_path;

    app.add_option("command", command, "generate | verify | blocks | powers | series | bench")
        ->required()
        ->check(CLI::IsMember({"generate", "verify", "blocks", "powers", "series", "bench"}));
    app.add_option("-m,--base", cfg.base, "base m (2..36)")->capture_default_str();
    app.add_option("-w,--pattern", cfg.pattern, "pattern word w, most significant digit first")
        ->capture_default_str();
    app.add_option("-N,--count", cfg.count, "number of terms")->capture_default_str();
    app.add_option("--format", format, "plain | table | bfile | report")
        ->check(CLI::IsMember({"plain", "table", "bfile", "report"}));
    app.add_option("--out", out_path, "write output to this file");
    app.add_option("--seed", cfg.seed, "seed for oracle spot checks")->capture_default_str();
    app.add_option("--scan-length", cfg.scan_length, "prefix length for powers");
    app.add_option("--order", cfg.order, "series order for series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::usage;
    }

    cfg.subcommand = *parse_subcommand(command);
    if (!format.empty())
        cfg.format = parse_format(format);
    if (!out_path.empty())
        cfg.output_path = out_path;

    return run(cfg, std::cout, std::cerr);
}
