#pragma once

// Digit-string files shared by fixtures and series dumps:
//
//   p=<base> w=<pattern> N=<count> [offset=<first index>]
//   <count digits, no separators>
//
// A fixture holds a(offset), ..., a(offset + count - 1); dumps omit the offset.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "blockseq/words.hpp"

namespace blockseq {

struct Fixture {
    unsigned base = 2;
    std::string pattern;
    std::size_t offset = 0;
    Word digits;
};

std::string format_series_dump(unsigned base, const std::string& pattern, const Word& digits);

/// Throws ParseError (with line number) on malformed content.
Fixture parse_fixture(const std::string& text);
/// Throws Error if the file cannot be read, ParseError if malformed.
Fixture load_fixture(const std::filesystem::path& path);

/// $BLOCKSEQ_FIXTURES if set, else the fixture directory of the source tree.
std::filesystem::path fixture_dir();

/// Fixtures in `dir` (*.txt) whose header names this base and pattern, sorted
/// by file name.
std::vector<std::pair<std::filesystem::path, Fixture>>
find_fixtures(const std::filesystem::path& dir, const PatternSpec& spec);

} // namespace blockseq
