#pragma once

// p-uniform morphisms with coding, and their construction from the p-kernel
// of a_{p;w}.
//
// The kernel of a sequence a is the set of subsequences n -> a(p^e n + r),
// 0 <= r < p^e. For block-counting sequences it is finite. The maps
// K -> K_j, K_j(n) = K(pn + j), form an automaton reading the digits of n
// least significant first. The fixed point of a uniform morphism is read most
// significant first, so build_morphism reverses that automaton before
// turning its states into letters.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "blockseq/words.hpp"

namespace blockseq {

using Letter = std::uint32_t;

class UniformMorphism {
public:
    /// Validates uniformity, letter ranges, code ranges (< width) and
    /// prolongability of `start`.
    UniformMorphism(unsigned width, std::vector<std::vector<Letter>> images,
                    std::vector<Digit> coding, Letter start);

    unsigned width() const noexcept { return width_; }
    std::size_t alphabet_size() const noexcept { return images_.size(); }
    Letter start() const noexcept { return start_; }
    const std::vector<Letter>& image(Letter a) const { return images_.at(a); }
    Digit code(Letter a) const { return coding_.at(a); }
    const std::vector<Digit>& coding() const noexcept { return coding_; }
    bool identity_coding() const noexcept;

    friend bool operator==(const UniformMorphism&, const UniformMorphism&) = default;

private:
    unsigned width_;
    std::vector<std::vector<Letter>> images_;
    std::vector<Digit> coding_;
    Letter start_;
};

struct KernelElement {
    unsigned exponent = 0;
    Word residue;                  // exactly `exponent` digits, most significant first
    std::vector<Digit> fingerprint; // K(0), ..., K(L-1)
};

struct Kernel {
    std::vector<KernelElement> elements;    // elements[0] is the sequence itself
    std::vector<std::vector<Letter>> children; // children[k][j] = index of K_j
    std::size_t fingerprint_len = 0;
};

std::size_t default_fingerprint_len(const PatternSpec& spec);

/// Breadth-first kernel closure, deduplicated by fingerprint, then re-checked
/// at 2L. Throws KernelOverflow past p^(|w|+3) elements and KernelMismatch if
/// the 2L pass separates an identified pair.
Kernel infer_kernel(const PatternSpec& spec, std::size_t fingerprint_len);
Kernel infer_kernel(const PatternSpec& spec);

/// Letter 0 is the start. Each letter g maps kernel elements to digits;
/// image(g)[j] = g o (K -> K_j) and code(g) = g(root). Throws KernelOverflow
/// past |kernel| * p^3 letters.
UniformMorphism build_morphism(const PatternSpec& spec);
UniformMorphism build_morphism(const Kernel& kernel, unsigned p);

/// i -> v_i with v_i[k] = i+1 (mod p) at k = x and i elsewhere.
UniformMorphism pure_single_letter_morphism(unsigned p, Digit x);

/// Coded prefix of the fixed point grown from the start letter.
Word expand_fixed_point(const UniformMorphism& mu, std::size_t n_terms);

/// Header "width=p start=S", then one "LETTER -> IMAGE ; code=DIGIT" line per
/// letter in order, image letters separated by single spaces.
std::string export_morphism(const UniformMorphism& mu);
UniformMorphism parse_morphism(const std::string& text);

} // namespace blockseq
