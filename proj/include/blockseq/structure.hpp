#pragma once

// Finite-prefix checks of the combinatorial structure of a_{p;w}:
// the shape of p-blocks (a(pn), ..., a(pn+p-1)) and which powers v^e can
// occur as prefixes.

#include <cstdint>
#include <optional>
#include <vector>

#include "blockseq/report.hpp"
#include "blockseq/words.hpp"

namespace blockseq {

enum class BlockType { Type1, Type2 };

/// Type1: constant block of value base_value. Type2: base_value everywhere
/// except base_value + 1 (mod p) at deviant_index.
struct BlockClass {
    BlockType variant;
    Digit base_value;
    Digit deviant_index; // 0 for Type1

    friend bool operator==(const BlockClass&, const BlockClass&) = default;
};

/// Whether w^⋄ (w without its last letter) is a suffix of the expansion of n.
/// The block pn+i with n = 0 is written "i", so n = 0 contributes the empty
/// expansion here even though [0]_p = "0" elsewhere.
bool stem_is_suffix(const PatternSpec& spec, std::uint64_t n);

/// Classifies the block at index n of `prefix` and checks that it is of type 2
/// exactly when stem_is_suffix(spec, n), with the deviant at w's last letter.
/// For p = 2 every non-constant block is type 2 at either index; the reading
/// with the deviant at w's last letter is returned. Throws ClaimViolation.
BlockClass classify_block(const PatternSpec& spec, std::uint64_t n, const Word& prefix);

/// Runs classify_block over every complete block of `prefix`.
/// evidence = [type-1 count, type-2 count, first violating n if any].
ClaimReport evaluate_block_dichotomy(const PatternSpec& spec, const Word& prefix);

struct PowerPrefixReport {
    std::optional<PatternSpec> pattern;
    unsigned exponent = 2;
    std::size_t prefix_scanned = 0;
    std::vector<std::size_t> found_lengths; // ascending
};

/// Z-array of `s`: z[i] is the length of the longest common prefix of s and
/// s[i..]; z[0] = |s|.
std::vector<std::size_t> self_match_table(std::span<const Digit> s);

/// All L with prefix[0, eL) = (prefix[0, L))^e, in one linear pass.
PowerPrefixReport scan_power_prefixes(const Word& prefix, unsigned exponent);

/// 2^20 for p = 2; p^12 capped at 2^22 otherwise.
std::size_t default_scan_length(unsigned p);

/// Every v^(p+1) prefix with |v| >= 2p^|w| has |v| divisible by p^(|w|-1).
ClaimReport evaluate_multiple_property(const PatternSpec& spec, std::size_t scan_length);
ClaimReport evaluate_multiple_property(const PatternSpec& spec, const Word& prefix);

/// Pattern-specific bounds on power prefixes:
///   w = 0,  p = 2 : no square prefix with |v| >= 5
///   w = 0,  p >= 3: no square prefix with |v| >= p^2
///   w = 10, p = 2 : the only square prefix has |v| = 1
///   w = 10, p >= 3: no v^p prefix with |v| > p^2
///   other |w| > 1 : no v^(p+1) prefix with |v| = i p^(|w|-1), i >= p+1
/// Single nonzero letters carry no exclusion and pass vacuously.
ClaimReport evaluate_power_exclusions(const PatternSpec& spec, std::size_t scan_length);
ClaimReport evaluate_power_exclusions(const PatternSpec& spec, const Word& prefix);

inline ClaimReport check_multiple_property(const PatternSpec& spec, std::size_t scan_length)
{
    return require_pass(evaluate_multiple_property(spec, scan_length));
}

inline ClaimReport check_power_exclusions(const PatternSpec& spec, std::size_t scan_length)
{
    return require_pass(evaluate_power_exclusions(spec, scan_length));
}

} // namespace blockseq
