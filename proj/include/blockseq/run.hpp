#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace blockseq {

enum class Subcommand { Generate, Verify, Blocks, Powers, Series, Bench };
enum class OutputFormat { Plain, Table, Bfile, Report };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failure = 1;
inline constexpr int usage = 2;
inline constexpr int io = 3;
} // namespace exit_code

struct RunConfig {
    Subcommand subcommand = Subcommand::Generate;
    unsigned base = 2;
    std::string pattern = "1";
    std::size_t count = 1024;
    std::optional<OutputFormat> format;     // plain for generate, report otherwise
    std::optional<std::filesystem::path> output_path;
    std::uint64_t seed = 0x5eed;
    std::optional<std::size_t> scan_length; // powers
    std::optional<std::size_t> order;       // series
};

std::optional<Subcommand> parse_subcommand(std::string_view s);
std::optional<OutputFormat> parse_format(std::string_view s);

/// Executes one subcommand. Output goes to config.output_path when set,
/// otherwise to `out`; diagnostics go to `err`. Returns an exit_code value.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace blockseq
