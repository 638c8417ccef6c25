#include "blockseq/window.hpp"

#include <algorithm>
#include <vector>

namespace blockseq {

std::pair<std::size_t, std::size_t> WindowSpec::bounds(std::size_t length) const
{
    if (length == 0 || length % denominator != 0)
        throw WindowAlignmentError("word length " + std::to_string(length) +
                                   " is not a positive multiple of " +
                                   std::to_string(denominator));
    const std::size_t scale = length / denominator;
    return {alpha_numerator * scale, beta_numerator * scale};
}

WindowSpec window_spec(const PatternSpec& spec)
{
    const std::uint64_t alpha = from_base(spec.tail());
    return {alpha, alpha + 1, ipow(spec.base(), static_cast<unsigned>(spec.length() - 1))};
}

namespace {

void increment_range(std::span<Digit> d, std::size_t lo, std::size_t hi, unsigned m)
{
    hi = std::min(hi, d.size());
    for (std::size_t i = lo; i < hi; ++i)
        d[i] = static_cast<Digit>(d[i] + 1u == m ? 0 : d[i] + 1);
}

void require_base_match(const PatternSpec& spec, const Word& u)
{
    if (u.base() != spec.base())
        throw InvalidBase("word base does not match pattern base");
}

} // namespace

Word phi(const PatternSpec& spec, const Word& v)
{
    require_base_match(spec, v);
    const auto [lo, hi] = window_spec(spec).bounds(v.size());
    Word out = v;
    increment_range(out.mutable_digits(), lo, hi, spec.base());
    return out;
}

Word initial_block(const PatternSpec& spec)
{
    std::vector<Digit> u(ipow(spec.base(), static_cast<unsigned>(spec.length())), 0);
    u[spec.value()] = 1;
    return Word(spec.base(), std::move(u));
}

Word step_nonzero(const PatternSpec& spec, const Word& u)
{
    if (spec.is_zero_word())
        throw WrongVariantError("step_nonzero needs a pattern with a nonzero first digit");
    require_base_match(spec, u);
    const unsigned m = spec.base();
    const unsigned x = spec.leading_digit();
    Word out = u.repeat(x);
    out.append(phi(spec, u));
    out.append(u.repeat(m - x - 1));
    return out;
}

Word step_zero(const PatternSpec& spec, const Word& u)
{
    if (!spec.is_zero_word())
        throw WrongVariantError("step_zero needs a pattern with first digit 0");
    require_base_match(spec, u);
    Word out = phi(spec, u);
    out.append(u.repeat(spec.base() - 1));
    return out;
}

namespace {

// Copies out[src, src + len) to dest, clipped to the buffer end. Returns the
// number of digits written.
std::size_t copy_clipped(std::vector<Digit>& out, std::size_t src, std::size_t len,
                         std::size_t dest)
{
    if (dest >= out.size())
        return 0;
    const std::size_t n = std::min(len, out.size() - dest);
    std::copy_n(out.begin() + static_cast<std::ptrdiff_t>(src), n,
                out.begin() + static_cast<std::ptrdiff_t>(dest));
    return n;
}

void generate_nonzero(const PatternSpec& spec, std::vector<Digit>& out)
{
    const unsigned m = spec.base();
    const unsigned x = spec.leading_digit();
    const WindowSpec ws = window_spec(spec);
    const std::size_t n = out.size();

    std::size_t len = ipow(m, static_cast<unsigned>(spec.length()));
    if (spec.value() < n)
        out[spec.value()] = 1;

    // out[0, len) holds u_k; u_{k+1} = u_k^x φ(u_k) u_k^(m-x-1).
    while (len < n) {
        const auto [lo, hi] = ws.bounds(len);
        for (unsigned b = 1; b < m; ++b) {
            const std::size_t dest = b * len;
            const std::size_t written = copy_clipped(out, 0, len, dest);
            if (written == 0)
                break;
            if (b == x && lo < written)
                increment_range(std::span(out).subspan(dest, written), lo, hi, m);
        }
        len *= m;
    }
}

void generate_zero(const PatternSpec& spec, std::vector<Digit>& out)
{
    const unsigned m = spec.base();
    const WindowSpec ws = window_spec(spec);
    const std::size_t n = out.size();
    const std::size_t block = ipow(m, static_cast<unsigned>(spec.length()));

    // w_{-1}
    if (spec.length() == 1 && n > 0)
        out[0] = 1;
    if (n <= block)
        return;

    // w_0 = u_0^(m-1) at [block, m·block).
    const std::size_t t = spec.value();
    for (unsigned c = 0; c + 1 < m; ++c) {
        const std::size_t pos = block + c * block + t;
        if (pos < n)
            out[pos] = 1;
    }

    // w_k sits at [block·m^k, block·m^(k+1)). Its first copy of u_k is
    // φ(u_{k-1}) followed by w_{k-1}, where u_{k-1} is the first copy inside
    // w_{k-1}.
    std::size_t prev = block; // |u_{k-1}| and start of w_{k-1}
    while (prev * m < n) {
        const std::size_t start = prev * m;
        const std::size_t u_len = start;
        const auto [lo, hi] = ws.bounds(prev);

        std::size_t written = copy_clipped(out, prev, prev, start);
        if (lo < written)
            increment_range(std::span(out).subspan(start, written), lo, hi, m);
        copy_clipped(out, prev, start - prev, start + prev);
        for (unsigned c = 1; c + 1 < m; ++c)
            if (copy_clipped(out, start, u_len, start + c * u_len) == 0)
                break;
        prev = start;
    }
}

} // namespace

Word generate(const PatternSpec& spec, std::size_t n_terms)
{
    std::vector<Digit> out(n_terms, 0);
    if (spec.is_zero_word())
        generate_zero(spec, out);
    else
        generate_nonzero(spec, out);
    return Word(spec.base(), std::move(out));
}

} // namespace blockseq
