#pragma once

// Window-transform generators for block-counting sequences.
//
// For a pattern w over base m the window of a word v is the index range
// [α_w·|v|, β_w·|v|) with α_w = (w')_m / m^(|w|-1) and β_w = α_w + 1/m^(|w|-1).
// φ_w increments (mod m) every digit inside that window. Starting from the
// block u_0 of length m^|w| holding a single 1 at index (w)_m:
//
//   x-word, x != 0:  u_{k+1} = u_k^x · φ_w(u_k) · u_k^(m-x-1), and u_k is a
//                    prefix of the sequence;
//   0-word:          u_{k+1} = φ_w(u_k) · u_k^(m-1), and the sequence is
//                    w_{-1} w_0 w_1 ... with w_k = u_k^(m-1).
//
// w_{-1} is u_0 when w = "0" and m^|w| zeros otherwise.

#include <cstdint>

#include "blockseq/words.hpp"

namespace blockseq {

struct WindowSpec {
    std::uint64_t alpha_numerator;
    std::uint64_t beta_numerator;
    std::uint64_t denominator;

    /// Window [lo, hi) on a word of the given length. Throws
    /// WindowAlignmentError when length is not a multiple of denominator.
    std::pair<std::size_t, std::size_t> bounds(std::size_t length) const;
};

WindowSpec window_spec(const PatternSpec& spec);

Word phi(const PatternSpec& spec, const Word& v);

Word initial_block(const PatternSpec& spec);

Word step_nonzero(const PatternSpec& spec, const Word& u);
Word step_zero(const PatternSpec& spec, const Word& u);

/// First n_terms values of a_{m;w}, built in a single buffer by block copies.
Word generate(const PatternSpec& spec, std::size_t n_terms);

} // namespace blockseq
