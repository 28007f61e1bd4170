#pragma once

#include "fglh/fgl.hpp"

namespace fglh {

/// (η⊗η)F: the classical law with its coefficients read as scalars in H⊗H.
FormalGroupH trivial_extension(const ClassicalFGL& F, const HopfPtr& H);

struct PowerResult {
    FormalGroupH group;
    AxiomReport report;
};

/// 𝔉^(n) = ((n)⊗(n))𝔉, revalidated against the axioms.
PowerResult fgl_power(const FormalGroupH& G, int n);

/// A candidate homomorphism Φ: 𝔉₁ → 𝔉₂ over the same Hopf algebra.
struct HopfFglHom {
    FormalGroupH source;
    FormalGroupH target;
    TruncSeries phi;
};

/// The defining identity (ΔΦ)(𝔉₁) = 𝔉₂(Φ⊗1, 1⊗Φ) ("hom"), and the covered
/// classical homomorphism ε(Φ) between the base groups ("hom.covered").
std::vector<CheckResult> check_hom(const HopfFglHom& h);

/// Φ₂∘Φ₁ as a homomorphism 𝔉₁ → 𝔉₃.
HopfFglHom compose(const HopfFglHom& first, const HopfFglHom& second);

} // namespace fglh
