#include "blockseq/words.hpp"

#include <algorithm>

namespace blockseq {

void require_base(unsigned m)
{
    if (m < kMinBase || m > kMaxBase)
        throw InvalidBase("base must lie in [2, 36], got " + std::to_string(m));
}

bool is_prime(unsigned m) noexcept
{
    if (m < 2)
        return false;
    for (unsigned d = 2; d * d <= m; ++d)
        if (m % d == 0)
            return false;
    return true;
}

char digit_char(Digit d) noexcept
{
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}

namespace {

int char_digit(char c) noexcept
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'z')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'Z')
        return c - 'A' + 10;
    return -1;
}

} // namespace

Word::Word(unsigned base) : base_(base)
{
    require_base(base);
}

Word::Word(unsigned base, std::vector<Digit> digits) : base_(base), digits_(std::move(digits))
{
    require_base(base);
    for (Digit d : digits_)
        if (d >= base)
            throw InvalidPattern("digit " + std::to_string(d) + " out of range for base " +
                                 std::to_string(base));
}

Word Word::parse(std::string_view text, unsigned base)
{
    require_base(base);
    std::vector<Digit> digits;
    digits.reserve(text.size());
    for (char c : text) {
        int d = char_digit(c);
        if (d < 0 || static_cast<unsigned>(d) >= base)
            throw InvalidPattern(std::string("invalid digit '") + c + "' for base " +
                                 std::to_string(base));
        digits.push_back(static_cast<Digit>(d));
    }
    Word w(base);
    w.digits_ = std::move(digits);
    return w;
}

void Word::push_back(Digit d)
{
    if (d >= base_)
        throw InvalidPattern("digit out of range");
    digits_.push_back(d);
}

void Word::append(const Word& other)
{
    if (other.base_ != base_)
        throw InvalidBase("cannot concatenate words over different bases");
    digits_.insert(digits_.end(), other.digits_.begin(), other.digits_.end());
}

void Word::truncate(std::size_t n)
{
    if (n < digits_.size())
        digits_.resize(n);
}

Word Word::slice(std::size_t pos, std::size_t len) const
{
    Word out(base_);
    if (pos >= digits_.size())
        return out;
    len = std::min(len, digits_.size() - pos);
    out.digits_.assign(digits_.begin() + static_cast<std::ptrdiff_t>(pos),
                       digits_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return out;
}

Word Word::repeat(std::size_t count) const
{
    Word out(base_);
    out.digits_.reserve(digits_.size() * count);
    for (std::size_t i = 0; i < count; ++i)
        out.digits_.insert(out.digits_.end(), digits_.begin(), digits_.end());
    return out;
}

std::string Word::str() const
{
    std::string s(digits_.size(), '0');
    std::transform(digits_.begin(), digits_.end(), s.begin(), digit_char);
    return s;
}

Word operator+(const Word& lhs, const Word& rhs)
{
    Word out = lhs;
    out.append(rhs);
    return out;
}

PatternSpec::PatternSpec(unsigned base, Word pattern)
    : base_(base), pattern_(std::move(pattern)), prime_(is_prime(base))
{
    require_base(base);
    if (pattern_.base() != base)
        throw InvalidPattern("pattern base does not match spec base");
    if (pattern_.empty())
        throw InvalidPattern("pattern must be non-empty");
}

PatternSpec::PatternSpec(unsigned base, std::string_view pattern)
    : PatternSpec(base, Word::parse(pattern, base))
{
}

bool PatternSpec::is_all_zero() const noexcept
{
    auto d = pattern_.digits();
    return std::all_of(d.begin(), d.end(), [](Digit x) { return x == 0; });
}

std::uint64_t PatternSpec::value() const
{
    return from_base(pattern_);
}

Word PatternSpec::tail() const
{
    return pattern_.slice(1, pattern_.size() - 1);
}

Word PatternSpec::stem() const
{
    return pattern_.slice(0, pattern_.size() - 1);
}

std::string PatternSpec::str() const
{
    return "m=" + std::to_string(base_) + " w=" + pattern_.str();
}

void require_prime(const PatternSpec& spec)
{
    if (!spec.modulus_is_prime())
        throw InvalidBase("base " + std::to_string(spec.base()) +
                          " is composite; this operation needs a prime base");
}

std::uint64_t ipow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

Word to_base(std::uint64_t n, unsigned m)
{
    require_base(m);
    std::vector<Digit> digits;
    do {
        digits.push_back(static_cast<Digit>(n % m));
        n /= m;
    } while (n != 0);
    std::reverse(digits.begin(), digits.end());
    return Word(m, std::move(digits));
}

std::uint64_t from_base(const Word& v)
{
    std::uint64_t r = 0;
    for (Digit d : v.digits())
        r = r * v.base() + d;
    return r;
}

std::size_t count_occurrences(const Word& text, const Word& pattern)
{
    const auto t = text.digits();
    const auto w = pattern.digits();
    if (w.empty() || w.size() > t.size())
        return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + w.size() <= t.size(); ++i)
        if (std::equal(w.begin(), w.end(), t.begin() + static_cast<std::ptrdiff_t>(i)))
            ++count;
    return count;
}

std::size_t e_count(const PatternSpec& spec, std::uint64_t n)
{
    return count_occurrences(to_base(n, spec.base()), spec.pattern());
}

Digit a_value(const PatternSpec& spec, std::uint64_t n)
{
    return static_cast<Digit>(e_count(spec, n) % spec.base());
}

Word word_plus(const Word& v)
{
    Word out = v;
    for (Digit& d : out.mutable_digits())
        d = static_cast<Digit>((d + 1) % v.base());
    return out;
}

Word oracle_prefix(const PatternSpec& spec, std::size_t n_terms)
{
    std::vector<Digit> out(n_terms);
    for (std::size_t n = 0; n < n_terms; ++n)
        out[n] = a_value(spec, n);
    return Word(spec.base(), std::move(out));
}

} // namespace blockseq
