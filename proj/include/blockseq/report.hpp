#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blockseq/errors.hpp"

namespace blockseq {

enum class Verdict { Pass, Fail };

const char* to_string(Verdict v) noexcept;

/// One checked claim. Serialized as a single line:
///   claim=ID key=value ... N=SCAN evidence=[a,b,...] verdict=PASS
struct ClaimReport {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    std::size_t scan_length = 0;
    std::vector<std::uint64_t> evidence;
    Verdict verdict = Verdict::Pass;

    bool passed() const noexcept { return verdict == Verdict::Pass; }
};

std::string format_report(const ClaimReport& r);

/// Thrown when a checked claim fails; carries the full report.
class ClaimViolation : public Error {
public:
    explicit ClaimViolation(ClaimReport report)
        : Error("claim violated: " + format_report(report)), report_(std::move(report))
    {
    }

    const ClaimReport& report() const noexcept { return report_; }

private:
    ClaimReport report_;
};

/// Returns r, or throws ClaimViolation if it failed.
const ClaimReport& require_pass(const ClaimReport& r);

} // namespace blockseq
