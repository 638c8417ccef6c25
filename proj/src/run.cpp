#include "blockseq/run.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "blockseq/algebra.hpp"
#include "blockseq/bench.hpp"
#include "blockseq/fixture.hpp"
#include "blockseq/morphism.hpp"
#include "blockseq/structure.hpp"
#include "blockseq/window.hpp"

namespace blockseq {

std::optional<Subcommand> parse_subcommand(std::string_view s)
{
    if (s == "generate") return Subcommand::Generate;
    if (s == "verify") return Subcommand::Verify;
    if (s == "blocks") return Subcommand::Blocks;
    if (s == "powers") return Subcommand::Powers;
    if (s == "series") return Subcommand::Series;
    if (s == "bench") return Subcommand::Bench;
    return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view s)
{
    if (s == "plain") return OutputFormat::Plain;
    if (s == "table") return OutputFormat::Table;
    if (s == "bfile") return OutputFormat::Bfile;
    if (s == "report") return OutputFormat::Report;
    return std::nullopt;
}

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::optional<std::size_t> first_difference(const Word& a, const Word& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i])
            return i;
    if (a.size() != b.size())
        return n;
    return std::nullopt;
}

void write_generate(const PatternSpec& spec, const Word& a, OutputFormat fmt, std::ostream& os)
{
    switch (fmt) {
    case OutputFormat::Plain:
        os << a.str() << '\n';
        break;
    case OutputFormat::Bfile:
        for (std::size_t n = 0; n < a.size(); ++n)
            os << n << ' ' << digit_char(a[n]) << '\n';
        break;
    case OutputFormat::Table:
        os << "n\ta(n)\n";
        for (std::size_t n = 0; n < a.size(); ++n)
            os << n << '\t' << digit_char(a[n]) << '\n';
        break;
    case OutputFormat::Report:
        os << format_series_dump(spec.base(), spec.pattern().str(), a);
        break;
    }
}

bool emit(const ClaimReport& r, std::ostream& os)
{
    os << format_report(r) << '\n';
    return r.passed();
}

bool do_verify(const RunConfig& cfg, const PatternSpec& spec, std::ostream& os)
{
    const std::size_t n = cfg.count;
    auto oracle = std::async(std::launch::async, [&] { return oracle_prefix(spec, n); });
    auto window = std::async(std::launch::async, [&] { return generate(spec, n); });
    std::optional<std::future<Word>> morph;
    if (spec.modulus_is_prime())
        morph = std::async(std::launch::async,
                           [&] { return expand_fixed_point(build_morphism(spec), n); });

    const Word o = oracle.get();
    const Word w = window.get();
    ClaimReport agree{"generator-agreement",
                      {{"m", std::to_string(spec.base())},
                       {"w", spec.pattern().str()},
                       {"generators", morph ? "oracle,window,morphism" : "oracle,window"}},
                      n, {}, Verdict::Pass};
    std::optional<std::size_t> diff = first_difference(o, w);
    if (morph) {
        const Word m = morph->get();
        auto d2 = first_difference(o, m);
        if (d2 && (!diff || *d2 < *diff))
            diff = d2;
    }
    if (diff) {
        agree.evidence.push_back(*diff);
        agree.verdict = Verdict::Fail;
    }
    bool ok = emit(agree, os);

    for (const auto& [path, fx] : find_fixtures(fixture_dir(), spec)) {
        const Word got =
            generate(spec, fx.offset + fx.digits.size()).slice(fx.offset, fx.digits.size());
        ClaimReport r{"fixture-match",
                      {{"m", std::to_string(spec.base())},
                       {"w", spec.pattern().str()},
                       {"fixture", path.filename().string()},
                       {"offset", std::to_string(fx.offset)}},
                      fx.digits.size(), {}, Verdict::Pass};
        if (auto d = first_difference(got, fx.digits)) {
            r.evidence.push_back(*d);
            r.verdict = Verdict::Fail;
        }
        ok = emit(r, os) && ok;
    }
    return ok;
}

bool do_bench(const RunConfig& cfg, const PatternSpec& spec, std::ostream& os)
{
    const auto records = bench_all(spec, cfg.count);
    bool agree = true;
    for (const auto& r : records) {
        os << format_bench_record(r) << '\n';
        agree = agree && r.checksum == records.front().checksum;
    }
    os << "checksums=" << (agree ? "agree" : "DIFFER") << '\n';
    return agree;
}

int execute(const RunConfig& cfg, std::ostream& os)
{
    if (cfg.count < 1)
        throw UsageError("--count must be at least 1");
    const PatternSpec spec(cfg.base, cfg.pattern);

    const bool needs_prime = cfg.subcommand == Subcommand::Blocks ||
                             cfg.subcommand == Subcommand::Powers ||
                             cfg.subcommand == Subcommand::Series;
    if (needs_prime && !spec.modulus_is_prime())
        throw UsageError("base " + std::to_string(cfg.base) +
                         " is composite; blocks, powers and series need a prime base");

    const OutputFormat fmt = cfg.format.value_or(
        cfg.subcommand == Subcommand::Generate ? OutputFormat::Plain : OutputFormat::Report);
    if (cfg.subcommand != Subcommand::Generate && fmt != OutputFormat::Report &&
        fmt != OutputFormat::Plain)
        throw UsageError("table and bfile formats apply to generate only");

    bool ok = true;
    switch (cfg.subcommand) {
    case Subcommand::Generate:
        write_generate(spec, generate(spec, cfg.count), fmt, os);
        break;
    case Subcommand::Verify:
        ok = do_verify(cfg, spec, os);
        break;
    case Subcommand::Blocks:
        ok = emit(evaluate_block_dichotomy(spec, generate(spec, cfg.count)), os);
        break;
    case Subcommand::Powers: {
        const Word prefix =
            generate(spec, cfg.scan_length.value_or(default_scan_length(spec.base())));
        ok = emit(evaluate_multiple_property(spec, prefix), os);
        ok = emit(evaluate_power_exclusions(spec, prefix), os) && ok;
        break;
    }
    case Subcommand::Series: {
        const std::size_t order = cfg.order.value_or(std::size_t{1} << 16);
        ok = emit(residual_report(spec, order, cfg.seed), os);
        ok = emit(degree_evidence(spec, order, cfg.seed).report, os) && ok;
        break;
    }
    case Subcommand::Bench:
        ok = do_bench(cfg, spec, os);
        break;
    }
    return ok ? exit_code::ok : exit_code::verification_failure;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    std::ostringstream buffer;
    int status;
    try {
        status = execute(config, buffer);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const InvalidBase& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const InvalidPattern& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const ParseError& e) {
        err << "error: fixture: " << e.what() << '\n';
        return exit_code::io;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::verification_failure;
    }

    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot write " << config.output_path->string() << '\n';
            return exit_code::io;
        }
        file << buffer.str();
        file.flush();
        if (!file) {
            err << "error: write to " << config.output_path->string() << " failed\n";
            return exit_code::io;
        }
    } else {
        out << buffer.str();
    }
    return status;
}

} // namespace blockseq
