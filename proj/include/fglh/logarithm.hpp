#pragma once

#include "fglh/cobar.hpp"
#include "fglh/extensions.hpp"

#include <optional>
#include <vector>

namespace fglh {

/// ω̃(x) = (id⊗ε̃)∂𝔉(x,z)/∂z at z = 0, via the derivative.
TruncSeries omega_from_derivative(const FormalGroupH& G);
/// The same series read off the A_{i,1} column: Σ ((id⊗ε)A_{i,1}) xⁱ.
TruncSeries omega_from_coefficients(const FormalGroupH& G);

/// ω̃, after checking that both routes agree and that its constant coefficient
/// has weight-0 part 1. Throws PreconditionError otherwise.
TruncSeries omega_series(const FormalGroupH& G);

/// 𝔤 = ∫₀ˣ dt/ω̃(t).
TruncSeries log_series(const FormalGroupH& G);

struct LogData {
    TruncSeries omega;
    TruncSeries g;
    TensorElem cocycle;
    /// cocycle.x-independence, cocycle.counit.left, cocycle.counit.right
    std::vector<CheckResult> checks;

    bool passed() const { return all_passed(checks); }
};

/// 𝔠 = (Δ𝔤)(𝔉) - (𝔤⊗1)(x⊗1) - (1⊗𝔤)(1⊗x), with the assertion that this
/// difference does not depend on the variables.
LogData extract_cocycle(const FormalGroupH& G);

/// 𝔠 + x⊗1 + 1⊗x with Θ = -(μ∘(id⊗S))𝔠 - x. The cocycle must be symmetric.
FormalGroupH linear_group(const HopfPtr& H, const TensorElem& c, int degree);

/// x⊗1 + 1⊗x over H.
FormalGroupH additive_group(const HopfPtr& H, int degree);

/// An isomorphism built from a coboundary witness, or the refusal certificate.
struct IsoResult {
    CoboundaryResult coboundary;
    std::optional<HopfFglHom> hom;
    std::vector<CheckResult> checks; ///< check_hom on the constructed Φ

    bool refused() const { return !hom; }
    bool passed() const { return hom && all_passed(checks); }
};

/// 𝔥(x) = λ' + 𝔤(x) onto x⊗1 + 1⊗x, where Δλ - λ⊗1 - 1⊗λ = 𝔠 and λ' = -λ.
IsoResult trivialize(const FormalGroupH& G);

/// Φ(x) = λ + x from the linear group of c1 to that of c2, where
/// Δλ - λ⊗1 - 1⊗λ = c2 - c1.
IsoResult iso_linear(const HopfPtr& H, const TensorElem& c1, const TensorElem& c2, int degree);

/// Rebuilds 𝔉 as (Δ𝔤)⁻¹(𝔠 + 𝔤(x)⊗1 + 1⊗𝔤(x)) and compares exactly.
CheckResult reconstruct(const FormalGroupH& G);

} // namespace fglh
