#include "fglh/extensions.hpp"

#include "fglh/error.hpp"

namespace fglh {

FormalGroupH trivial_extension(const ClassicalFGL& F, const HopfPtr& H)
{
    GradedPoly body = retable(F.series().body(), H->table());
    return FormalGroupH(H, TruncSeries::from_body(std::move(body), 2, 2, F.degree()));
}

PowerResult fgl_power(const FormalGroupH& G, int n)
{
    const EndoMap p = conv_power(G.hopf(), n, G.degree());
    FormalGroupH power(G.hopf(), map_coefficients(G.series(), CoefficientMap::endomorphism_each_leg(p)));
    AxiomReport report = check_axioms(power, G.hopf()->cocommutative());
    return {std::move(power), std::move(report)};
}

std::vector<CheckResult> check_hom(const HopfFglHom& h)
{
    if (!same_table(h.source.table(), h.target.table()) || h.source.hopf() != h.target.hopf())
        throw StructuralError("homomorphisms are defined between formal groups over the same Hopf algebra");
    const TruncSeries& phi = h.phi;
    if (phi.nvars() != 1 || phi.legs() != 1)
        throw StructuralError("Φ is a one-variable series with one-leg coefficients");
    const HopfPtr& H = h.source.hopf();
    const int T = std::min({phi.degree(), h.source.degree(), h.target.degree()});
    const TruncSeries Phi = phi.truncated(T);
    const TruncSeries F1 = h.source.series().truncated(T), F2 = h.target.series().truncated(T);

    std::vector<CheckResult> checks;
    try {
        const TruncSeries lhs = substitute(map_coefficients(Phi, CoefficientMap::structure(H, 1, StructureMap::Delta)), {F1});
        const TruncSeries left = relabel(Phi, {0, 1, 2, 3}, {0, -1, -1, -1}, 2, 2);
        const TruncSeries right = relabel(Phi, {0, 2, 3, 3}, {1, -1, -1, -1}, 2, 2);
        const TruncSeries rhs = substitute(F2, {left, right});
        checks.push_back(residual_check("hom", (lhs - rhs).body(), PrintStyle{2, default_var_names()}));
    } catch (const DivergenceError& e) {
        checks.push_back(failed_check("hom", e.what()));
    }

    try {
        const TruncSeries phi0 = map_coefficients(Phi, CoefficientMap::counit_all(H));
        const TruncSeries base1 = map_coefficients(F1, CoefficientMap::counit_all(H));
        const TruncSeries base2 = map_coefficients(F2, CoefficientMap::counit_all(H));
        const TruncSeries lhs = substitute(phi0, {base1});
        const TruncSeries px = relabel(phi0, {0, 1, 2, 3}, {0, -1, -1, -1}, 0, 2);
        const TruncSeries py = relabel(phi0, {0, 1, 2, 3}, {1, -1, -1, -1}, 0, 2);
        const TruncSeries rhs = substitute(base2, {px, py});
        checks.push_back(residual_check("hom.covered", (lhs - rhs).body(), PrintStyle{0, default_var_names()}));
    } catch (const DivergenceError& e) {
        checks.push_back(failed_check("hom.covered", e.what()));
    }
    return checks;
}

HopfFglHom compose(const HopfFglHom& first, const HopfFglHom& second)
{
    const int T = std::min(first.phi.degree(), second.phi.degree());
    return {first.source, second.target, substitute(second.phi.truncated(T), {first.phi.truncated(T)})};
}

} // namespace fglh
