#pragma once

#include "fglh/hopf.hpp"

#include <optional>
#include <vector>

namespace fglh {

/// The cobar differential of a 1-leg element: Δλ - λ⊗1 - 1⊗λ.
GradedPoly cobar_differential(const HopfPresentation& h, const GradedPoly& lambda, WeightBound bound = std::nullopt);

/// (id⊗Δ)c + 1⊗c - (Δ⊗id)c - c⊗1 = 0 ("cocycle.closed") and
/// (id⊗ε)c = 0 = (ε⊗id)c ("cocycle.counit.left", "cocycle.counit.right").
std::vector<CheckResult> check_cocycle(const HopfAlgebra& H, const TensorElem& c);

/// Evidence that c is not a coboundary in weight `weight`: a functional φ on the
/// equations such that φ(dm) + ψ(ε(m)) = 0 for every weight-`weight` monomial m,
/// while φ(c) ≠ 0. φ pairs with 2-leg polynomials and ψ with base-ring polynomials
/// by summing coefficient products over shared monomials.
struct InconsistencyCertificate {
    int weight = 0;
    GradedPoly phi;   ///< 2-leg functional, as coefficients on monomials
    GradedPoly psi;   ///< base-ring functional on the ε(λ) = 0 equations
    Rational value;   ///< φ(c), nonzero
};

struct CoboundaryResult {
    bool coboundary = false;
    int degree = 0; ///< weights ≤ degree were decided
    std::optional<GradedPoly> witness;
    std::optional<InconsistencyCertificate> certificate;
    /// With the integrality report: whether some witness has integer coefficients,
    /// and one such witness when it exists.
    std::optional<bool> integral;
    std::optional<GradedPoly> integral_witness;
};

/// Solves Δλ - λ⊗1 - 1⊗λ = c with ε(λ) = 0, one weight at a time up to `degree`,
/// by exact elimination over ℚ. Requires check_cocycle(c) to pass. With
/// `integrality` the same systems are also solved over ℤ.
CoboundaryResult coboundary_solve(const HopfAlgebra& H, const TensorElem& c, int degree, bool integrality = false);

/// An integer solution of A x = b (A given row-wise, n columns), if one exists.
std::optional<std::vector<mpz_class>> integer_solve(std::vector<std::vector<mpz_class>> A, std::vector<mpz_class> b,
                                                    std::size_t n);

/// Independently re-checks an inconsistency certificate against c.
bool verify_certificate(const HopfAlgebra& H, const TensorElem& c, const InconsistencyCertificate& cert);

/// All monomials of the given weight in the base-ring and leg-1 Hopf slots.
std::vector<Monomial> monomials_of_weight(const GeneratorTable& t, int weight);

/// Σ coefficient products over shared monomials.
Rational pair(const GradedPoly& functional, const GradedPoly& p);

} // namespace fglh
