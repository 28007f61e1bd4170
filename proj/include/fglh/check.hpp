#pragma once

#include "fglh/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fglh {

enum class Verdict { Pass, Fail, Skip };

std::string to_string(Verdict v);

/// Outcome of one identity check. A failing check carries its residual
/// (left side minus right side) both as a polynomial and pretty-printed.
struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::optional<GradedPoly> residual;
    std::string residual_text;
    std::string note;

    bool passed() const noexcept { return verdict == Verdict::Pass; }
    bool failed() const noexcept { return verdict == Verdict::Fail; }
};

/// Pass iff residual is zero.
CheckResult residual_check(std::string name, const GradedPoly& residual, const PrintStyle& style = {});
CheckResult skipped_check(std::string name, std::string note);
CheckResult failed_check(std::string name, std::string note);

bool all_passed(const std::vector<CheckResult>& checks);

} // namespace fglh
