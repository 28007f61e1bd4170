#include "fglh/check.hpp"

#include <algorithm>

namespace fglh {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return "PASS";
    case Verdict::Fail:
        return "FAIL";
    case Verdict::Skip:
        return "SKIP";
    }
    return "?";
}

CheckResult residual_check(std::string name, const GradedPoly& residual, const PrintStyle& style)
{
    CheckResult r;
    r.name = std::move(name);
    r.verdict = residual.is_zero() ? Verdict::Pass : Verdict::Fail;
    if (!residual.is_zero()) {
        r.residual_text = to_string(residual, style);
        r.residual = residual;
    }
    return r;
}

CheckResult skipped_check(std::string name, std::string note)
{
    return CheckResult{std::move(name), Verdict::Skip, std::nullopt, {}, std::move(note)};
}

CheckResult failed_check(std::string name, std::string note)
{
    return CheckResult{std::move(name), Verdict::Fail, std::nullopt, {}, std::move(note)};
}

bool all_passed(const std::vector<CheckResult>& checks)
{
    return std::none_of(checks.begin(), checks.end(), [] (const CheckResult& c) { return c.failed(); });
}

} // namespace fglh
