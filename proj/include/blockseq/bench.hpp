#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockseq/words.hpp"

namespace blockseq {

enum class Generator { Oracle, Window, Morphism };

const char* to_string(Generator g) noexcept;

/// 64-bit FNV-1a over the digit values.
std::uint64_t checksum(const Word& digits);

/// First n_terms values from the chosen route. Morphism needs a prime base.
Word run_generator(Generator g, const PatternSpec& spec, std::size_t n_terms);

struct BenchRecord {
    Generator generator;
    unsigned base;
    std::string pattern;
    std::size_t n_terms;
    double wall_seconds;    // median of the timed passes
    double terms_per_second;
    std::uint64_t checksum;
};

std::string format_bench_record(const BenchRecord& r);

/// One untimed warm-up pass, then the median of `passes` timed passes.
BenchRecord bench_generator(Generator g, const PatternSpec& spec, std::size_t n_terms,
                            unsigned passes = 5);

/// Oracle, window and (for prime bases) morphism, in that order.
std::vector<BenchRecord> bench_all(const PatternSpec& spec, std::size_t n_terms,
                                   unsigned passes = 5);

} // namespace blockseq
