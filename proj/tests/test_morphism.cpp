#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "blockseq/morphism.hpp"
#include "blockseq/window.hpp"

using namespace blockseq;

namespace {

std::vector<PatternSpec> all_patterns(unsigned m, std::size_t max_len)
{
    std::vector<PatternSpec> out;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::uint64_t count = ipow(m, static_cast<unsigned>(len));
        for (std::uint64_t v = 0; v < count; ++v) {
            std::vector<Digit> digits(len);
            std::uint64_t x = v;
            for (std::size_t i = len; i-- > 0;) {
                digits[i] = static_cast<Digit>(x % m);
                x /= m;
            }
            out.emplace_back(m, Word(m, std::move(digits)));
        }
    }
    return out;
}

// Brute-force kernel size: distinct prefixes of n -> a(p^e n + r) for all
// e <= depth, r < p^e, computed with the digit-scanning oracle.
std::size_t brute_kernel_size(const PatternSpec& spec, unsigned depth, std::size_t len)
{
    const unsigned p = spec.base();
    std::set<std::vector<Digit>> seen;
    for (unsigned e = 0; e <= depth; ++e) {
        const std::uint64_t pe = ipow(p, e);
        for (std::uint64_t r = 0; r < pe; ++r) {
            std::vector<Digit> fp(len);
            for (std::size_t n = 0; n < len; ++n)
                fp[n] = a_value(spec, pe * n + r);
            seen.insert(std::move(fp));
        }
    }
    return seen.size();
}

} // namespace

TEST_CASE("kernel sizes")
{
    CHECK(infer_kernel(PatternSpec(2, "1")).elements.size() == 2);
    CHECK(infer_kernel(PatternSpec(2, "11")).elements.size() == 4);
    CHECK(infer_kernel(PatternSpec(2, "0")).elements.size() == 4);

    CHECK(brute_kernel_size(PatternSpec(2, "1"), 8, 256) == 2);
    CHECK(brute_kernel_size(PatternSpec(2, "11"), 8, 2048) == 4);
    CHECK(brute_kernel_size(PatternSpec(2, "0"), 8, 512) == 4);
    CHECK(brute_kernel_size(PatternSpec(3, "0"), 6, 512) == 9);
}

TEST_CASE("kernel elements are exact subsequences")
{
    const PatternSpec spec(3, "102");
    const Kernel k = infer_kernel(spec);
    for (const auto& e : k.elements) {
        REQUIRE(e.residue.size() == e.exponent);
        const std::uint64_t pe = ipow(3, e.exponent);
        const std::uint64_t r = from_base(e.residue);
        for (std::size_t n = 0; n < 200; ++n)
            REQUIRE(e.fingerprint[n] == a_value(spec, pe * n + r));
    }
}

TEST_CASE("short fingerprints are caught by the doubled-length pass")
{
    CHECK_THROWS_AS(infer_kernel(PatternSpec(2, "11"), 1), KernelMismatch);
    CHECK_THROWS_AS(infer_kernel(PatternSpec(2, "0110"), 6), KernelMismatch);
    CHECK_THROWS_AS(infer_kernel(PatternSpec(3, "1001"), 8), KernelMismatch);
    CHECK_NOTHROW(infer_kernel(PatternSpec(2, "0110")));
}

TEST_CASE("composite base is rejected")
{
    CHECK_THROWS_AS(infer_kernel(PatternSpec(4, "1")), InvalidBase);
    CHECK_THROWS_AS(build_morphism(PatternSpec(6, "12")), InvalidBase);
}

TEST_CASE("Thue-Morse from the kernel")
{
    const UniformMorphism tm = build_morphism(PatternSpec(2, "1"));
    CHECK(tm == pure_single_letter_morphism(2, 1));
    CHECK(tm.identity_coding());
    CHECK(tm.image(0) == std::vector<Letter>{0, 1});
    CHECK(tm.image(1) == std::vector<Letter>{1, 0});
    CHECK(expand_fixed_point(tm, 8).str() == "01101001");
}

TEST_CASE("Rudin-Shapiro type sequence")
{
    const PatternSpec spec(2, "11");
    const UniformMorphism mu = build_morphism(spec);
    CHECK(mu.alphabet_size() == 4);
    CHECK(mu.width() == 2);
    CHECK_FALSE(mu.identity_coding());
    CHECK(expand_fixed_point(mu, 16).str() == "0001001000011101");
    CHECK(expand_fixed_point(mu, 100'000) == oracle_prefix(spec, 100'000));
}

TEST_CASE("0-words and patterns ending in 0")
{
    // The root's 0-child differs from the root when w ends in 0.
    const Kernel k = infer_kernel(PatternSpec(2, "0"));
    CHECK(k.children[0][0] != 0);

    for (const char* w : {"0", "01", "10", "001"}) {
        const PatternSpec spec(2, w);
        const UniformMorphism mu = build_morphism(spec);
        CHECK(mu.start() == 0);
        CHECK(mu.image(0)[0] == 0);
        CHECK(expand_fixed_point(mu, 4096) == oracle_prefix(spec, 4096));
    }
    CHECK(expand_fixed_point(build_morphism(PatternSpec(2, "01")), 8).str() == "00000100");
}

TEST_CASE("least-significant-first reading of the kernel is not the sequence")
{
    // Coding each kernel element by K(0) and substituting K -> K_0 K_1 yields
    // n -> a(reverse of n), which differs from a for w = 0.
    const PatternSpec spec(2, "0");
    const Kernel k = infer_kernel(spec);
    std::vector<Letter> letters(64);
    std::string coded;
    for (std::size_t n = 0; n < 64; ++n) {
        letters[n] = n == 0 ? 0 : k.children[letters[n / 2]][n % 2];
        coded.push_back(static_cast<char>('0' + k.elements[letters[n]].fingerprint[0]));
    }
    CHECK(coded != oracle_prefix(spec, 64).str());
}

TEST_CASE("single nonzero letter gives the pure morphism up to renaming")
{
    const PatternSpec spec(3, "2");
    const UniformMorphism built = build_morphism(spec);
    const UniformMorphism pure = pure_single_letter_morphism(3, 2);
    REQUIRE(built.alphabet_size() == 3);
    std::set<Digit> codes(built.coding().begin(), built.coding().end());
    CHECK(codes.size() == 3);
    for (Letter a = 0; a < 3; ++a)
        for (unsigned k = 0; k < 3; ++k)
            CHECK(built.code(built.image(a)[k]) ==
                  (k == 2 ? (built.code(a) + 1) % 3 : built.code(a)));
    CHECK(expand_fixed_point(built, 1000) == expand_fixed_point(pure, 1000));
}

TEST_CASE("pure_single_letter_morphism")
{
    const UniformMorphism m31 = pure_single_letter_morphism(3, 1);
    CHECK(m31.image(0) == std::vector<Letter>{0, 1, 0});
    CHECK(m31.image(1) == std::vector<Letter>{1, 2, 1});
    CHECK(m31.image(2) == std::vector<Letter>{2, 0, 2});
    CHECK(pure_single_letter_morphism(5, 4).image(0) == std::vector<Letter>{0, 0, 0, 0, 1});
    CHECK_THROWS_AS(pure_single_letter_morphism(3, 0), InvalidPattern);
    CHECK_THROWS_AS(pure_single_letter_morphism(3, 3), InvalidPattern);
    CHECK_THROWS_AS(pure_single_letter_morphism(4, 1), InvalidBase);
}

TEST_CASE("pure and kernel presentations agree for every single nonzero letter")
{
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        for (unsigned x = 1; x < p; ++x) {
            const PatternSpec spec(p, Word(p, {static_cast<Digit>(x)}));
            const Word pure = expand_fixed_point(pure_single_letter_morphism(p, static_cast<Digit>(x)), 100'000);
            REQUIRE(pure == expand_fixed_point(build_morphism(spec), 100'000));
            REQUIRE(pure == oracle_prefix(spec, 100'000));
        }
    }
}

TEST_CASE("coded fixed point agrees with the oracle for every pattern up to length 3")
{
    constexpr std::size_t n = 100'000;
    for (unsigned p : {2u, 3u, 5u}) {
        for (const auto& spec : all_patterns(p, 3)) {
            INFO(spec.str());
            const UniformMorphism mu = build_morphism(spec);
            for (Letter a = 0; a < mu.alphabet_size(); ++a)
                REQUIRE(mu.image(a).size() == p);
            REQUIRE(expand_fixed_point(mu, n) == oracle_prefix(spec, n));
        }
    }
}

TEST_CASE("UniformMorphism validation")
{
    CHECK_THROWS_AS(UniformMorphism(2, {{0, 1}, {1}}, {0, 1}, 0), Error);
    CHECK_THROWS_AS(UniformMorphism(2, {{1, 0}, {1, 0}}, {0, 1}, 0), Error);
    CHECK_THROWS_AS(UniformMorphism(2, {{0, 2}, {1, 0}}, {0, 1}, 0), Error);
    CHECK_THROWS_AS(UniformMorphism(2, {{0, 1}, {1, 0}}, {0, 2}, 0), Error);
    CHECK_NOTHROW(UniformMorphism(2, {{0, 1}, {1, 0}}, {0, 1}, 0));
}

TEST_CASE("export format")
{
    const UniformMorphism tm = pure_single_letter_morphism(2, 1);
    CHECK(export_morphism(tm) == "width=2 start=0\n0 -> 0 1 ; code=0\n1 -> 1 0 ; code=1\n");
}

TEST_CASE("export then parse is the identity")
{
    for (unsigned p : {2u, 3u, 5u})
        for (const auto& spec : all_patterns(p, 2)) {
            const UniformMorphism mu = build_morphism(spec);
            const std::string text = export_morphism(mu);
            REQUIRE(parse_morphism(text) == mu);
            REQUIRE(export_morphism(parse_morphism(text)) == text);
        }
}

TEST_CASE("parse errors carry line numbers")
{
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_morphism(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("width=2\n") == 1);
    CHECK(line_of("width=2 start=0\n0 -> 0 1 ; code=0\n1 -> 1 x ; code=1\n") == 3);
    CHECK(line_of("width=2 start=0\n0 -> 0 1 code=0\n") == 2);
    CHECK(line_of("width=2 start=0\n1 -> 0 1 ; code=0\n") == 2);
    CHECK(line_of("width=2 start=1\n0 -> 0 1 ; code=0\n1 -> 0 1 ; code=1\n") == 3);
}
