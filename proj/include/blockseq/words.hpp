#pragma once

// Base-m digit words and the brute-force block-counting oracle.
//
// Digits are stored most-significant first, so to_base(6, 2) is "110".
// The canonical expansion of 0 is the one-digit word "0"; this makes
// a_{2;0}(0) = 1.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blockseq/errors.hpp"

namespace blockseq {

using Digit = std::uint8_t;

inline constexpr unsigned kMinBase = 2;
inline constexpr unsigned kMaxBase = 36;

/// Throws InvalidBase unless 2 <= m <= 36.
void require_base(unsigned m);

bool is_prime(unsigned m) noexcept;

char digit_char(Digit d) noexcept;

class Word {
public:
    Word() = default;
    explicit Word(unsigned base);
    Word(unsigned base, std::vector<Digit> digits);

    /// Parses "0110" style text; digits above 9 are written a..z.
    static Word parse(std::string_view text, unsigned base);

    unsigned base() const noexcept { return base_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    Digit operator[](std::size_t i) const noexcept { return digits_[i]; }

    std::span<const Digit> digits() const noexcept { return digits_; }
    std::span<Digit> mutable_digits() noexcept { return digits_; }

    void push_back(Digit d);
    void append(const Word& other);
    void truncate(std::size_t n);

    /// Digits [pos, pos + len), clamped to the word.
    Word slice(std::size_t pos, std::size_t len) const;
    /// Concatenation of `count` copies.
    Word repeat(std::size_t count) const;

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    unsigned base_ = 2;
    std::vector<Digit> digits_;
};

Word operator+(const Word& lhs, const Word& rhs);

/// The pair (m, w). Composite m is allowed; modules that need a prime
/// modulus check modulus_is_prime() themselves.
class PatternSpec {
public:
    PatternSpec(unsigned base, Word pattern);
    PatternSpec(unsigned base, std::string_view pattern);

    unsigned base() const noexcept { return base_; }
    const Word& pattern() const noexcept { return pattern_; }
    bool modulus_is_prime() const noexcept { return prime_; }

    std::size_t length() const noexcept { return pattern_.size(); }
    Digit leading_digit() const noexcept { return pattern_[0]; }
    Digit last_digit() const noexcept { return pattern_[pattern_.size() - 1]; }
    bool is_zero_word() const noexcept { return leading_digit() == 0; }
    /// w = 0^|w|
    bool is_all_zero() const noexcept;

    /// (w)_m, the value of w read in base m.
    std::uint64_t value() const;
    /// w' = w[1..]
    Word tail() const;
    /// w^⋄ = w[..|w|-2]
    Word stem() const;

    std::string str() const;

    friend bool operator==(const PatternSpec&, const PatternSpec&) = default;

private:
    unsigned base_;
    Word pattern_;
    bool prime_;
};

/// Throws InvalidBase or InvalidPattern with a message naming the problem.
void require_prime(const PatternSpec& spec);

std::uint64_t ipow(std::uint64_t b, unsigned e);

Word to_base(std::uint64_t n, unsigned m);
std::uint64_t from_base(const Word& v);

/// Overlapping occurrences of `pattern` in `text`.
std::size_t count_occurrences(const Word& text, const Word& pattern);

std::size_t e_count(const PatternSpec& spec, std::uint64_t n);
Digit a_value(const PatternSpec& spec, std::uint64_t n);

/// Increments every digit mod m.
Word word_plus(const Word& v);

/// a(0), ..., a(n_terms - 1) by direct digit scanning of each n.
Word oracle_prefix(const PatternSpec& spec, std::size_t n_terms);

} // namespace blockseq
