#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

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

Word w2(const char* s) { return Word::parse(s, 2); }

} // namespace

TEST_CASE("window bounds")
{
    const WindowSpec ws = window_spec(PatternSpec(2, "11"));
    CHECK(ws.alpha_numerator == 1);
    CHECK(ws.beta_numerator == 2);
    CHECK(ws.denominator == 2);

    const WindowSpec single = window_spec(PatternSpec(5, "3"));
    CHECK(single.alpha_numerator == 0);
    CHECK(single.denominator == 1);

    const WindowSpec deep = window_spec(PatternSpec(3, "120"));
    CHECK(deep.alpha_numerator == 6);
    CHECK(deep.denominator == 9);
    CHECK(deep.bounds(27) == std::pair<std::size_t, std::size_t>{18, 21});
    CHECK_THROWS_AS(deep.bounds(12), WindowAlignmentError);
}

TEST_CASE("phi")
{
    CHECK(phi(PatternSpec(2, "11"), w2("0001")).str() == "0010");
    CHECK(phi(PatternSpec(2, "01"), w2("0100")).str() == "0111");
    CHECK(phi(PatternSpec(2, "1"), w2("01")).str() == "10");
    CHECK_THROWS_AS(phi(PatternSpec(2, "11"), w2("010")), WindowAlignmentError);
    CHECK_THROWS_AS(phi(PatternSpec(2, "11"), Word(2)), WindowAlignmentError);
}

TEST_CASE("phi applied m times is the identity")
{
    for (unsigned m : {2u, 3u, 4u, 5u}) {
        for (const auto& spec : all_patterns(m, 2)) {
            const Word v = generate(spec, ipow(m, 3));
            Word x = v;
            for (unsigned i = 0; i < m; ++i)
                x = phi(spec, x);
            REQUIRE(x == v);
        }
    }
}

TEST_CASE("initial_block")
{
    CHECK(initial_block(PatternSpec(2, "11")).str() == "0001");
    CHECK(initial_block(PatternSpec(2, "01")).str() == "0100");
    const PatternSpec s32(3, "2");
    CHECK(initial_block(s32).str() == "001");
    CHECK(initial_block(s32) == oracle_prefix(s32, 3));
}

TEST_CASE("step_nonzero")
{
    const PatternSpec rs(2, "11");
    const Word s1 = step_nonzero(rs, w2("0001"));
    CHECK(s1.str() == "00010010");
    CHECK(step_nonzero(rs, s1).str() == "0001001000011101");
    CHECK(step_nonzero(PatternSpec(2, "1"), w2("01")).str() == "0110");
    CHECK_THROWS_AS(step_nonzero(PatternSpec(2, "01"), w2("0100")), WrongVariantError);
}

TEST_CASE("step_zero")
{
    const PatternSpec s01(2, "01");
    const Word s1 = step_zero(s01, w2("0100"));
    CHECK(s1.str() == "01110100");
    CHECK(step_zero(s01, s1).str() == "0111101101110100");
    CHECK(step_zero(PatternSpec(2, "0"), w2("10")).str() == "0110");
    CHECK_THROWS_AS(step_zero(PatternSpec(2, "11"), w2("0001")), WrongVariantError);
}

TEST_CASE("generate examples")
{
    CHECK(generate(PatternSpec(2, "11"), 32).str() == "00010010000111010001001011100010");
    CHECK(generate(PatternSpec(2, "01"), 8).str() == "00000100");

    const PatternSpec zero(2, "0");
    CHECK(generate(zero, 8).str() == "10100110");
    CHECK(oracle_prefix(zero, 8).str() == "10100110");

    // Every truncation point, including inside the first block.
    const Word full = generate(PatternSpec(3, "021"), 500);
    for (std::size_t n = 1; n < 500; n += 7)
        CHECK(generate(PatternSpec(3, "021"), n) == full.slice(0, n));
}

TEST_CASE("all-zero patterns of length > 1 start with zeros")
{
    // [n]_m for n < m^|w| never contains 0^|w| once |w| >= 2.
    for (unsigned m : {2u, 3u, 5u})
        for (const char* w : {"00", "000"}) {
            const PatternSpec spec(m, w);
            CHECK(generate(spec, 2000) == oracle_prefix(spec, 2000));
            CHECK(generate(spec, 2000)[0] == 0);
        }
}

TEST_CASE("generate agrees with the oracle")
{
    constexpr std::size_t n = 100'000;
    std::size_t checked = 0;
    for (unsigned m : {2u, 3u, 4u, 5u}) {
        for (const auto& spec : all_patterns(m, 3)) {
            INFO(spec.str());
            REQUIRE(generate(spec, n) == oracle_prefix(spec, n));
            ++checked;
        }
    }
    CHECK(checked == 14 + 39 + 84 + 155);
}

TEST_CASE("block length grows by a factor of m per step")
{
    for (unsigned m : {2u, 3u, 5u}) {
        for (const auto& spec : all_patterns(m, 2)) {
            Word u = initial_block(spec);
            for (unsigned k = 1; k <= 4; ++k) {
                u = spec.is_zero_word() ? step_zero(spec, u) : step_nonzero(spec, u);
                REQUIRE(u.size() == ipow(m, static_cast<unsigned>(spec.length()) + k));
            }
        }
    }
}

TEST_CASE("non-0-words: u_k is a prefix of the sequence")
{
    for (unsigned m : {2u, 3u, 4u}) {
        for (const auto& spec : all_patterns(m, 2)) {
            if (spec.is_zero_word())
                continue;
            Word u = initial_block(spec);
            for (int k = 0; k < 4; ++k)
                u = step_nonzero(spec, u);
            REQUIRE(u == oracle_prefix(spec, u.size()));
        }
    }
}

TEST_CASE("non-0-words: blocks t m^k .. (t+1) m^k repeat the prefix for t != x")
{
    for (unsigned m : {2u, 3u, 5u}) {
        for (const auto& spec : all_patterns(m, 2)) {
            if (spec.is_zero_word())
                continue;
            const unsigned x = spec.leading_digit();
            for (unsigned k = static_cast<unsigned>(spec.length()); k <= 6; ++k) {
                const std::size_t len = ipow(m, k);
                const Word a = generate(spec, m * len);
                const Word head = a.slice(0, len);
                for (unsigned t = 0; t < m; ++t) {
                    const Word chunk = a.slice(t * len, len);
                    if (t == x)
                        REQUIRE(chunk == phi(spec, head));
                    else
                        REQUIRE(chunk == head);
                }
            }
        }
    }
}

TEST_CASE("0-words: a(r + y m^(k+1)) = a(r) for (w)_m < m^k <= r < m^(k+1)")
{
    for (unsigned m : {2u, 3u}) {
        for (const auto& spec : all_patterns(m, 3)) {
            if (!spec.is_zero_word())
                continue;
            const std::uint64_t t = spec.value();
            for (unsigned k = 1; k <= 6; ++k) {
                const std::uint64_t lo = ipow(m, k), hi = lo * m;
                if (t >= lo)
                    continue;
                const Word a = generate(spec, hi * m);
                for (std::uint64_t y = 1; y < m; ++y)
                    for (std::uint64_t r = lo; r < hi; ++r)
                        REQUIRE(a[r + y * hi] == a[r]);
            }
        }
    }
}

TEST_CASE("0-word chunks for w = 01 in base 2")
{
    const PatternSpec spec(2, "01");
    Word u = initial_block(spec);
    std::vector<std::string> chunks{u.str()};
    for (int k = 0; k < 3; ++k) {
        u = step_zero(spec, u);
        chunks.push_back(u.str());
    }
    CHECK(chunks[1] == "01110100");
    CHECK(chunks[2] == "0111101101110100");
    CHECK(chunks[3] == "01111011100010110111101101110100");
    CHECK(generate(spec, 64).str() == "0000" + chunks[0] + chunks[1] + chunks[2] + chunks[3]);
}

TEST_CASE("composite bases are allowed")
{
    for (unsigned m : {4u, 6u, 8u, 9u, 10u})
        for (const auto& spec : all_patterns(m, 2))
            REQUIRE(generate(spec, 10'000) == oracle_prefix(spec, 10'000));
}
