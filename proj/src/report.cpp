#include "blockseq/report.hpp"

#include <sstream>

namespace blockseq {

const char* to_string(Verdict v) noexcept
{
    return v == Verdict::Pass ? "PASS" : "FAIL";
}

std::string format_report(const ClaimReport& r)
{
    std::ostringstream os;
    os << "claim=" << r.claim;
    for (const auto& [key, value] : r.params)
        os << ' ' << key << '=' << value;
    os << " N=" << r.scan_length << " evidence=[";
    for (std::size_t i = 0; i < r.evidence.size(); ++i)
        os << (i ? "," : "") << r.evidence[i];
    os << "] verdict=" << to_string(r.verdict);
    return os.str();
}

const ClaimReport& require_pass(const ClaimReport& r)
{
    if (!r.passed())
        throw ClaimViolation(r);
    return r;
}

} // namespace blockseq
