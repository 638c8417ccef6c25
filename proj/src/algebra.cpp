#include "blockseq/algebra.hpp"

#include <algorithm>
#include <random>

#include "blockseq/structure.hpp"
#include "blockseq/window.hpp"

namespace blockseq {

FpPoly::FpPoly(unsigned p) : p_(p)
{
    if (!is_prime(p))
        throw InvalidBase("F_p needs a prime p, got " + std::to_string(p));
}

FpPoly::FpPoly(unsigned p, std::vector<std::uint32_t> coefficients) : FpPoly(p)
{
    c_.reserve(coefficients.size());
    for (auto x : coefficients)
        c_.push_back(static_cast<Digit>(x % p));
    normalize();
}

FpPoly FpPoly::monomial(unsigned p, std::size_t degree, std::uint32_t coefficient)
{
    std::vector<std::uint32_t> c(degree + 1, 0);
    c[degree] = coefficient;
    return FpPoly(p, std::move(c));
}

void FpPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const
{
    FpPoly r(p_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = static_cast<Digit>((coeff(i) + o.coeff(i)) % p_);
    r.normalize();
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const
{
    FpPoly r(p_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = static_cast<Digit>((coeff(i) + p_ - o.coeff(i)) % p_);
    r.normalize();
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const
{
    FpPoly r(p_);
    if (is_zero() || o.is_zero())
        return r;
    std::vector<unsigned> acc(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            acc[i + j] = (acc[i + j] + c_[i] * o.c_[j]) % p_;
    r.c_.assign(acc.begin(), acc.end());
    r.normalize();
    return r;
}

TruncatedSeries::TruncatedSeries(unsigned p, std::size_t order) : p_(p), c_(order, 0)
{
    if (!is_prime(p))
        throw InvalidBase("F_p needs a prime p, got " + std::to_string(p));
}

TruncatedSeries::TruncatedSeries(unsigned p, std::vector<Digit> coefficients)
    : TruncatedSeries(p, std::size_t{0})
{
    c_ = std::move(coefficients);
    for (Digit& x : c_)
        x = static_cast<Digit>(x % p);
}

std::optional<std::size_t> TruncatedSeries::first_nonzero() const noexcept
{
    auto it = std::find_if(c_.begin(), c_.end(), [](Digit x) { return x != 0; });
    if (it == c_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - c_.begin());
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    TruncatedSeries r(p_, std::min(order(), o.order()));
    for (std::size_t i = 0; i < r.order(); ++i)
        r.c_[i] = static_cast<Digit>((c_[i] + o.c_[i]) % p_);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const
{
    TruncatedSeries r(p_, std::min(order(), o.order()));
    for (std::size_t i = 0; i < r.order(); ++i)
        r.c_[i] = static_cast<Digit>((c_[i] + p_ - o.c_[i]) % p_);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const FpPoly& q) const
{
    TruncatedSeries r(p_, order());
    const auto& qc = q.coefficients();
    for (std::size_t i = 0; i < order(); ++i) {
        unsigned acc = 0;
        for (std::size_t j = 0; j < qc.size() && j <= i; ++j)
            acc += qc[j] * c_[i - j];
        r.c_[i] = static_cast<Digit>(acc % p_);
    }
    return r;
}

TruncatedSeries series_from_sequence(const PatternSpec& spec, std::size_t order,
                                     std::uint64_t seed)
{
    require_prime(spec);
    const Word a = generate(spec, order);
    if (order > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, order - 1);
        const std::size_t samples = (order + 99) / 100;
        for (std::size_t s = 0; s < samples; ++s) {
            const std::size_t n = pick(rng);
            if (a[n] != a_value(spec, n))
                throw Error("window generator disagrees with the oracle at n=" +
                            std::to_string(n) + " for " + spec.str() +
                            " (seed " + std::to_string(seed) + ")");
        }
    }
    return TruncatedSeries(spec.base(), std::vector<Digit>(a.digits().begin(), a.digits().end()));
}

TruncatedSeries frobenius_power(const TruncatedSeries& f)
{
    const unsigned p = f.modulus();
    TruncatedSeries r(p, f.order());
    for (std::size_t n = 0; n * p < f.order(); ++n)
        r.set(n * p, f.coeff(n));
    return r;
}

FpPoly frobenius_multiplier(unsigned p)
{
    return FpPoly(p, std::vector<std::uint32_t>(p, 1));
}

namespace {

struct RhsShape {
    std::uint64_t period;  // M = p^|w|
    std::uint64_t offset;  // exponent of the first term
};

RhsShape rhs_shape(const PatternSpec& spec)
{
    const std::uint64_t period = ipow(spec.base(), static_cast<unsigned>(spec.length()));
    const std::uint64_t offset = spec.value() + (spec.is_zero_word() ? period : 0);
    return {period, offset};
}

} // namespace

RationalFunction rhs_rational(const PatternSpec& spec)
{
    require_prime(spec);
    const unsigned p = spec.base();
    const auto [period, offset] = rhs_shape(spec);
    return {FpPoly::monomial(p, offset),
            FpPoly::monomial(p, period) - FpPoly::monomial(p, 0)};
}

TruncatedSeries rhs_series(const PatternSpec& spec, std::size_t order)
{
    require_prime(spec);
    const unsigned p = spec.base();
    const auto [period, offset] = rhs_shape(spec);
    // t^c / (t^M - 1) = -Σ_{j>=0} t^(c + jM)
    TruncatedSeries r(p, order);
    for (std::uint64_t e = offset; e < order; e += period)
        r.set(e, static_cast<Digit>(p - 1));
    return r;
}

TruncatedSeries functional_equation_residual(const PatternSpec& spec, std::size_t order,
                                             std::uint64_t seed)
{
    require_prime(spec);
    const TruncatedSeries f = series_from_sequence(spec, order, seed);
    const TruncatedSeries lhs = frobenius_power(f) * frobenius_multiplier(spec.base()) - f;
    return lhs - rhs_series(spec, order);
}

ClaimReport residual_report(const PatternSpec& spec, std::size_t order, std::uint64_t seed)
{
    const auto nz = functional_equation_residual(spec, order, seed).first_nonzero();
    ClaimReport r{"functional-equation-residual",
                  {{"p", std::to_string(spec.base())}, {"w", spec.pattern().str()}},
                  order, {}, Verdict::Pass};
    if (nz) {
        r.evidence.push_back(*nz);
        r.verdict = Verdict::Fail;
    }
    return r;
}

PeriodicityScan scan_eventual_period(std::span<const Digit> s, std::size_t max_period,
                                     std::size_t max_preperiod)
{
    PeriodicityScan out;
    if (max_preperiod >= s.size())
        return out;
    const auto tail = s.subspan(max_preperiod);
    const auto z = self_match_table(tail);
    for (std::size_t period = 1; period <= max_period && period < tail.size(); ++period) {
        if (z[period] == tail.size() - period) {
            out.found = true;
            out.period = period;
            std::size_t pre = max_preperiod;
            while (pre > 0 && s[pre - 1] == s[pre - 1 + period])
                --pre;
            out.preperiod = pre;
            return out;
        }
    }
    return out;
}

DegreeEvidence degree_evidence(const PatternSpec& spec, std::size_t order, std::uint64_t seed)
{
    require_prime(spec);
    DegreeEvidence ev;
    ev.order = order;
    const TruncatedSeries f = series_from_sequence(spec, order, seed);
    const TruncatedSeries residual =
        frobenius_power(f) * frobenius_multiplier(spec.base()) - f - rhs_series(spec, order);
    ev.residual_first_nonzero = residual.first_nonzero();
    ev.periodicity = scan_eventual_period(f.coefficients(), order / 4, order / 4);
    ev.verdict = ev.periodicity.found ? Verdict::Fail : Verdict::Pass;

    ev.report = {"degree-evidence",
                 {{"p", std::to_string(spec.base())},
                  {"w", spec.pattern().str()},
                  {"level", "evidence"},
                  {"residual", ev.residual_first_nonzero
                                   ? "nonzero@" + std::to_string(*ev.residual_first_nonzero)
                                   : "zero"}},
                 order,
                 {},
                 ev.verdict};
    if (ev.periodicity.found)
        ev.report.evidence = {ev.periodicity.period, ev.periodicity.preperiod};
    return ev;
}

} // namespace blockseq
