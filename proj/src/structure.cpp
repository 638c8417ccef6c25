#include "blockseq/structure.hpp"

#include <algorithm>

#include "blockseq/window.hpp"

namespace blockseq {

bool stem_is_suffix(const PatternSpec& spec, std::uint64_t n)
{
    const Word stem = spec.stem();
    if (stem.empty())
        return true;
    if (n == 0)
        return false;
    const Word digits = to_base(n, spec.base());
    if (stem.size() > digits.size())
        return false;
    const auto d = digits.digits();
    const auto s = stem.digits();
    return std::equal(s.begin(), s.end(), d.end() - static_cast<std::ptrdiff_t>(s.size()));
}

namespace {

std::vector<std::pair<std::string, std::string>> pattern_params(const PatternSpec& spec)
{
    return {{"p", std::to_string(spec.base())}, {"w", spec.pattern().str()}};
}

ClaimReport block_violation(const PatternSpec& spec, std::uint64_t n, std::size_t scanned)
{
    ClaimReport r{"block-dichotomy", pattern_params(spec), scanned, {n}, Verdict::Fail};
    return r;
}

} // namespace

BlockClass classify_block(const PatternSpec& spec, std::uint64_t n, const Word& prefix)
{
    require_prime(spec);
    const unsigned p = spec.base();
    if ((n + 1) * p > prefix.size())
        throw Error("prefix of length " + std::to_string(prefix.size()) +
                    " does not cover block " + std::to_string(n));
    const auto b = prefix.digits().subspan(n * p, p);
    const bool expect_type2 = stem_is_suffix(spec, n);

    if (std::all_of(b.begin(), b.end(), [&](Digit x) { return x == b[0]; })) {
        if (expect_type2)
            throw ClaimViolation(block_violation(spec, n, prefix.size()));
        return {BlockType::Type1, b[0], 0};
    }

    const Digit d = spec.last_digit();
    const Digit t = b[(d + 1) % p];
    bool shape = b[d] == (t + 1) % p;
    for (unsigned i = 0; i < p && shape; ++i)
        if (i != d && b[i] != t)
            shape = false;
    if (!shape || !expect_type2)
        throw ClaimViolation(block_violation(spec, n, prefix.size()));
    return {BlockType::Type2, t, d};
}

ClaimReport evaluate_block_dichotomy(const PatternSpec& spec, const Word& prefix)
{
    require_prime(spec);
    const std::size_t blocks = prefix.size() / spec.base();
    std::uint64_t type1 = 0, type2 = 0;
    for (std::size_t n = 0; n < blocks; ++n) {
        try {
            if (classify_block(spec, n, prefix).variant == BlockType::Type1)
                ++type1;
            else
                ++type2;
        } catch (const ClaimViolation&) {
            return {"block-dichotomy", pattern_params(spec), prefix.size(), {type1, type2, n},
                    Verdict::Fail};
        }
    }
    return {"block-dichotomy", pattern_params(spec), prefix.size(), {type1, type2},
            Verdict::Pass};
}

std::vector<std::size_t> self_match_table(std::span<const Digit> s)
{
    const std::size_t n = s.size();
    std::vector<std::size_t> z(n, 0);
    if (n == 0)
        return z;
    z[0] = n;
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (i < r)
            z[i] = std::min(r - i, z[i - l]);
        while (i + z[i] < n && s[z[i]] == s[i + z[i]])
            ++z[i];
        if (i + z[i] > r) {
            l = i;
            r = i + z[i];
        }
    }
    return z;
}

PowerPrefixReport scan_power_prefixes(const Word& prefix, unsigned exponent)
{
    if (exponent < 2)
        throw Error("power exponent must be at least 2");
    PowerPrefixReport report;
    report.exponent = exponent;
    report.prefix_scanned = prefix.size();
    const auto z = self_match_table(prefix.digits());
    for (std::size_t len = 1; len * exponent <= prefix.size(); ++len)
        if (z[len] >= (exponent - 1) * len)
            report.found_lengths.push_back(len);
    return report;
}

std::size_t default_scan_length(unsigned p)
{
    constexpr std::size_t cap = std::size_t{1} << 22;
    if (p == 2)
        return std::size_t{1} << 20;
    std::size_t n = 1;
    for (int i = 0; i < 12 && n < cap; ++i)
        n *= p;
    return std::min(n, cap);
}

ClaimReport evaluate_multiple_property(const PatternSpec& spec, const Word& prefix)
{
    require_prime(spec);
    const unsigned p = spec.base();
    const auto k = static_cast<unsigned>(spec.length());
    const std::uint64_t threshold = 2 * ipow(p, k);
    const std::uint64_t modulus = ipow(p, k - 1);

    auto scan = scan_power_prefixes(prefix, p + 1);
    ClaimReport r{"power-length-divisibility", pattern_params(spec), prefix.size(), {},
                  Verdict::Pass};
    r.params.emplace_back("e", std::to_string(p + 1));
    r.params.emplace_back("min_len", std::to_string(threshold));
    r.params.emplace_back("divisor", std::to_string(modulus));
    for (std::size_t len : scan.found_lengths) {
        r.evidence.push_back(len);
        if (len >= threshold && len % modulus != 0)
            r.verdict = Verdict::Fail;
    }
    return r;
}

ClaimReport evaluate_multiple_property(const PatternSpec& spec, std::size_t scan_length)
{
    require_prime(spec);
    return evaluate_multiple_property(spec, generate(spec, scan_length));
}

ClaimReport evaluate_power_exclusions(const PatternSpec& spec, const Word& prefix)
{
    require_prime(spec);
    const unsigned p = spec.base();
    const auto k = static_cast<unsigned>(spec.length());
    const std::string w = spec.pattern().str();
    ClaimReport r{"", pattern_params(spec), prefix.size(), {}, Verdict::Pass};

    auto record = [&](unsigned exponent, auto violates) {
        r.params.emplace_back("e", std::to_string(exponent));
        for (std::size_t len : scan_power_prefixes(prefix, exponent).found_lengths) {
            r.evidence.push_back(len);
            if (violates(len))
                r.verdict = Verdict::Fail;
        }
    };

    if (w == "0") {
        const std::size_t bound = p == 2 ? 5 : std::size_t{p} * p;
        r.claim = "square-prefix-bound";
        r.params.emplace_back("max_len_exclusive", std::to_string(bound));
        record(2, [&](std::size_t len) { return len >= bound; });
    } else if (w == "10" && p == 2) {
        r.claim = "square-prefix-only-length-1";
        record(2, [](std::size_t len) { return len != 1; });
    } else if (w == "10") {
        const std::size_t bound = std::size_t{p} * p;
        r.claim = "p-power-prefix-bound";
        r.params.emplace_back("max_len", std::to_string(bound));
        record(p, [&](std::size_t len) { return len > bound; });
    } else if (k > 1) {
        const std::uint64_t unit = ipow(p, k - 1);
        r.claim = "power-prefix-exclusion";
        r.params.emplace_back("unit", std::to_string(unit));
        record(p + 1, [&](std::size_t len) { return len % unit == 0 && len / unit >= p + 1; });
    } else {
        r.claim = "no-exclusion-single-letter";
    }
    return r;
}

ClaimReport evaluate_power_exclusions(const PatternSpec& spec, std::size_t scan_length)
{
    require_prime(spec);
    return evaluate_power_exclusions(spec, generate(spec, scan_length));
}

} // namespace blockseq
