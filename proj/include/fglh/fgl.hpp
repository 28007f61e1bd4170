#pragma once

#include "fglh/series.hpp"

#include <optional>
#include <vector>

namespace fglh {

/// A classical formal group law F(x, y) with coefficients in the base ring.
class ClassicalFGL {
public:
    explicit ClassicalFGL(TruncSeries F);

    const TruncSeries& series() const noexcept { return F_; }
    const TablePtr& table() const noexcept { return F_.table(); }
    int degree() const noexcept { return F_.degree(); }

private:
    TruncSeries F_;
};

/// Unit, associativity and commutativity of a classical law.
std::vector<CheckResult> check_classical(const ClassicalFGL& F);

/// θ with F(x, θ(x)) = 0.
TruncSeries classical_inverse(const ClassicalFGL& F);

/// φ^(n): φ^(1) = x, φ^(-1) = θ, φ^(n) = F(x, φ^(n-1)), and symmetrically for n < 0.
TruncSeries power_system(const ClassicalFGL& F, int n);

/// A series 𝔉 ∈ H⊗̂H[[x⊗1, 1⊗x]] over a validated Hopf algebra, with an optional
/// inverse series Θ ∈ H[[x]]. Holding a non-group series is allowed; the axioms
/// are checked on demand.
class FormalGroupH {
public:
    FormalGroupH(HopfPtr hopf, TruncSeries F, std::optional<TruncSeries> theta = std::nullopt);

    const HopfPtr& hopf() const noexcept { return hopf_; }
    const TablePtr& table() const noexcept { return F_.table(); }
    const TruncSeries& series() const noexcept { return F_; }
    const std::optional<TruncSeries>& theta() const noexcept { return theta_; }
    int degree() const noexcept { return F_.degree(); }

    FormalGroupH with_theta(TruncSeries theta) const { return FormalGroupH(hopf_, F_, std::move(theta)); }

private:
    HopfPtr hopf_;
    TruncSeries F_;
    std::optional<TruncSeries> theta_;
};

/// The extended diagonal Δ̃ applied on tensor leg `leg` of s, where s has as many
/// variables as legs and variable i belongs to leg i+1. Coefficients get Δ on that
/// leg and the leg's variable is replaced by 𝔉 on the two new legs.
TruncSeries extended_diagonal_on_leg(const FormalGroupH& G, const TruncSeries& s, int leg);

/// Δ̃(s) = (Δs)(𝔉) for a one-variable series s ∈ H[[x]].
TruncSeries extended_diagonal(const FormalGroupH& G, const TruncSeries& s);

CheckResult check_associativity(const FormalGroupH& G);

/// Residuals of both unit axioms, computed structurally and from the coefficient
/// form Σ a ε(b) = δ.
struct CounitResiduals {
    GradedPoly structural_left;
    GradedPoly structural_right;
    GradedPoly coefficient_left;
    GradedPoly coefficient_right;
};

CounitResiduals counit_residuals(const FormalGroupH& G);

/// counit.left and counit.right; each passes only if both routes give zero.
std::vector<CheckResult> check_counit(const FormalGroupH& G);

/// 𝔊 = (μ∘(id⊗S))𝔉 and its mirror (μ∘(S⊗id))𝔉.
TruncSeries g_series(const FormalGroupH& G);
TruncSeries g_series_mirror(const FormalGroupH& G);

/// Solves 𝔊(x, Θ(x)) = 0 one total degree at a time.
TruncSeries solve_theta(const FormalGroupH& G);

/// Both inverse conditions for the given Θ.
std::vector<CheckResult> check_inverse(const FormalGroupH& G, const TruncSeries& theta);

CheckResult check_commutative(const FormalGroupH& G);

struct AxiomReport {
    std::vector<CheckResult> checks;
    std::optional<TruncSeries> theta;

    bool passed() const { return all_passed(checks); }
};

/// Associativity, both counits, the inverse (the stored Θ when present, else the
/// solved one) and optionally commutativity.
AxiomReport check_axioms(const FormalGroupH& G, bool commutative = true);

struct BaseGroupResult {
    ClassicalFGL F;
    std::optional<TruncSeries> theta; ///< classical inverse, when solvable
    std::vector<CheckResult> checks;

    bool passed() const { return all_passed(checks); }
};

/// F = (ε⊗ε)𝔉 with its classical axioms, plus θ = ε(Θ) when G carries or admits Θ.
BaseGroupResult base_group(const FormalGroupH& G);

/// (Δ𝔊)(𝔉(x⊗1,1⊗x), ((S⊗S)𝔉)(y⊗1,1⊗y)) against F(𝔊(x,y)⊗1, 1⊗𝔊(x,y)).
CheckResult check_g_identity(const FormalGroupH& G);

/// Variable names of the four-variable context used by check_g_identity.
std::vector<std::string> g_identity_var_names();

} // namespace fglh
