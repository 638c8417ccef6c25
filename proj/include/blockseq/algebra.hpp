#pragma once

// Dense polynomials and truncated power series over F_p, and the functional
// equation satisfied by f = Σ a_{p;w}(n) t^n:
//
//   (1 + t + ... + t^(p-1)) f^p - f = t^c / (t^M - 1)
//
// with M = p^|w|, c = (w)_p for a nonzero first letter and c = M + (w)_p for
// a 0-word. Over F_p, 1/(t^M - 1) = -Σ_{j>=0} t^(jM), and f^p = f(t^p).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockseq/report.hpp"
#include "blockseq/words.hpp"

namespace blockseq {

class FpPoly {
public:
    explicit FpPoly(unsigned p);
    /// Coefficients in ascending degree, reduced mod p and normalized.
    FpPoly(unsigned p, std::vector<std::uint32_t> coefficients);

    static FpPoly monomial(unsigned p, std::size_t degree, std::uint32_t coefficient = 1);

    unsigned modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    Digit coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    const std::vector<Digit>& coefficients() const noexcept { return c_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;

    friend bool operator==(const FpPoly&, const FpPoly&) = default;

private:
    void normalize();

    unsigned p_;
    std::vector<Digit> c_;
};

class TruncatedSeries {
public:
    TruncatedSeries(unsigned p, std::size_t order);
    TruncatedSeries(unsigned p, std::vector<Digit> coefficients);

    unsigned modulus() const noexcept { return p_; }
    std::size_t order() const noexcept { return c_.size(); }
    Digit coeff(std::size_t i) const noexcept { return c_[i]; }
    void set(std::size_t i, Digit v) { c_.at(i) = static_cast<Digit>(v % p_); }
    const std::vector<Digit>& coefficients() const noexcept { return c_; }

    bool is_zero() const noexcept { return !first_nonzero(); }
    std::optional<std::size_t> first_nonzero() const noexcept;

    // Results carry the smaller of the two orders.
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const FpPoly& q) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    unsigned p_;
    std::vector<Digit> c_;
};

/// Coefficients from the window generator; ⌈N/100⌉ indices drawn with `seed`
/// are re-checked against the digit-scanning oracle (throws Error on mismatch).
TruncatedSeries series_from_sequence(const PatternSpec& spec, std::size_t order,
                                     std::uint64_t seed = 0x5eed);

/// f^p = f(t^p), truncated at the order of f.
TruncatedSeries frobenius_power(const TruncatedSeries& f);

/// 1 + t + ... + t^(p-1)
FpPoly frobenius_multiplier(unsigned p);

struct RationalFunction {
    FpPoly numerator;
    FpPoly denominator;
};

/// t^c and t^M - 1 as above.
RationalFunction rhs_rational(const PatternSpec& spec);

/// Closed-form expansion of rhs_rational to the given order.
TruncatedSeries rhs_series(const PatternSpec& spec, std::size_t order);

TruncatedSeries functional_equation_residual(const PatternSpec& spec, std::size_t order,
                                             std::uint64_t seed = 0x5eed);

/// evidence = [first nonzero index] on failure, empty on success.
ClaimReport residual_report(const PatternSpec& spec, std::size_t order,
                            std::uint64_t seed = 0x5eed);

struct PeriodicityScan {
    bool found = false;
    std::size_t period = 0;
    std::size_t preperiod = 0;
};

/// Looks for a period P <= max_period holding on s[max_preperiod..]; on
/// success also reports the least preperiod for that P.
PeriodicityScan scan_eventual_period(std::span<const Digit> s, std::size_t max_period,
                                     std::size_t max_preperiod);

/// Evidence, not proof, that f has degree exactly p: the residual vanishes to
/// `order` (so the degree divides p) and no eventual period with period and
/// preperiod <= order/4 exists (so f is not rational). The verdict reflects
/// the periodicity scan; the residual outcome is carried alongside.
struct DegreeEvidence {
    std::size_t order = 0;
    std::optional<std::size_t> residual_first_nonzero;
    PeriodicityScan periodicity;
    Verdict verdict = Verdict::Pass;
    ClaimReport report;
};

DegreeEvidence degree_evidence(const PatternSpec& spec, std::size_t order,
                               std::uint64_t seed = 0x5eed);

} // namespace blockseq
