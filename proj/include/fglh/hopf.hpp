#pragma once

#include "fglh/check.hpp"
#include "fglh/error.hpp"
#include "fglh/poly.hpp"

#include <array>
#include <memory>
#include <vector>

namespace fglh {

enum class StructureMap { Delta, Epsilon, Antipode };

/// Element of H^⊗legs over R. H-generators carry their leg in the slot layout;
/// base-ring generators are shared by all legs.
class TensorElem {
public:
    TensorElem(int legs, GradedPoly body);

    int legs() const noexcept { return legs_; }
    const GradedPoly& body() const noexcept { return body_; }
    bool is_zero() const noexcept { return body_.is_zero(); }

    bool operator==(const TensorElem& o) const { return legs_ == o.legs_ && body_ == o.body_; }

private:
    int legs_;
    GradedPoly body_;
};

std::string to_string(const TensorElem& e);

/// Free commutative Hopf algebra over R given by structure-map images on its
/// H-generators (index i of each vector belongs to table->hopf(i)).
struct HopfPresentation {
    TablePtr table;
    std::vector<GradedPoly> delta;    ///< 2-leg images Δ(h)
    std::vector<GradedPoly> counit;   ///< base-ring images ε(h)
    std::vector<GradedPoly> antipode; ///< 1-leg images S(h)

    /// Every H-generator primitive: Δh = h⊗1 + 1⊗h, εh = 0, Sh = -h.
    static HopfPresentation primitive(TablePtr table);
};

struct ValidationReport {
    int degree = 0;
    bool cocommutative = false;
    std::vector<CheckResult> checks;

    bool passed() const { return all_passed(checks); }
};

/// Checks coassociativity, both counit laws, both antipode laws and
/// weight-homogeneity on every generator up to weight `degree`, and records
/// cocommutativity. Throws StructuralError if an image uses slots outside its
/// leg context.
ValidationReport validate_hopf(const HopfPresentation& h, int degree);

class HopfValidationError : public Error {
public:
    explicit HopfValidationError(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// A presentation that passed validate_hopf. Every other module takes one of these.
class HopfAlgebra {
public:
    /// Validates at `degree`; throws HopfValidationError on any failed identity.
    static std::shared_ptr<const HopfAlgebra> create(HopfPresentation presentation, int degree);

    const HopfPresentation& presentation() const noexcept { return presentation_; }
    const TablePtr& table() const noexcept { return presentation_.table; }
    bool cocommutative() const noexcept { return report_.cocommutative; }
    int validated_degree() const noexcept { return report_.degree; }
    const ValidationReport& report() const noexcept { return report_; }

private:
    HopfAlgebra(HopfPresentation p, ValidationReport r) : presentation_(std::move(p)), report_(std::move(r)) {}

    HopfPresentation presentation_;
    ValidationReport report_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// Leg machinery on raw bodies. `legs` is the arity of the input; variable slots
// are left untouched, so the same calls act coefficient-wise on series.

/// Slot map sending leg l to to[l] (index 1..kMaxLegs; -1 drops terms using that leg).
SlotMap leg_slot_map(const GeneratorTable& table, const std::array<int, kMaxLegs + 1>& to);
GradedPoly relabel_legs(const GradedPoly& body, const std::array<int, kMaxLegs + 1>& to);

GradedPoly apply_on_leg(const HopfPresentation& h, const GradedPoly& body, int legs, int leg, StructureMap f,
                        WeightBound bound);
/// μ on legs (first, first+1); later legs move down by one.
GradedPoly contract_legs(const GradedPoly& body, int legs, int first);
/// id⊗…⊗ε⊗…⊗id evaluated term by term from the counit images, without the
/// substitution machinery. Used as the independent coefficient-form route.
GradedPoly counit_on_leg_termwise(const HopfPresentation& h, const GradedPoly& body, int legs, int leg);

TensorElem apply_on_leg(const HopfAlgebra& h, const TensorElem& e, int leg, StructureMap f);
/// μ collapsing legs (first, second); the legs must be adjacent.
TensorElem contract_mu(const TensorElem& e, int first, int second);
/// Exchanges the two legs of a 2-leg element.
TensorElem swap_legs(const TensorElem& e);

/// R-algebra endomorphism of H, stored by its images of the H-generators
/// (1-leg polynomials) up to weight `degree`.
class EndoMap {
public:
    EndoMap(HopfPtr hopf, std::vector<GradedPoly> images, int degree);

    static EndoMap identity(HopfPtr hopf, int degree);
    /// η∘ε
    static EndoMap unit_counit(HopfPtr hopf, int degree);
    static EndoMap antipode(HopfPtr hopf, int degree);

    const HopfPtr& hopf() const noexcept { return hopf_; }
    int degree() const noexcept { return degree_; }
    const std::vector<GradedPoly>& images() const noexcept { return images_; }
    const GradedPoly& image(std::size_t generator) const { return images_.at(generator); }

    /// Applies the endomorphism to the given leg of a body with `legs` legs.
    GradedPoly apply(const GradedPoly& body, int legs, int leg) const;
    /// Applies it to a 1-leg element of H.
    GradedPoly operator()(const GradedPoly& element) const { return apply(element, 1, 1); }

    bool operator==(const EndoMap& o) const;

private:
    HopfPtr hopf_;
    std::vector<GradedPoly> images_;
    int degree_;
};

/// f⋆g = μ∘(f⊗g)∘Δ.
EndoMap convolution(const EndoMap& f, const EndoMap& g);

/// The convolution power (n) of the identity: (1)=id, (-1)=S, (0)=η∘ε,
/// (n)=(n-1)⋆(1) for n>1 and (n)=(n+1)⋆(-1) for n<-1.
EndoMap conv_power(const HopfPtr& hopf, int n, int degree);

} // namespace fglh
