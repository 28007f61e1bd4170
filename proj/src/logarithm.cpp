#include "fglh/logarithm.hpp"

#include "fglh/error.hpp"

namespace fglh {

namespace {

GradedPoly var_power(const TablePtr& t, int v, int e)
{
    return power(GradedPoly::slot(t, t->var_slot(v)), unsigned(e), std::nullopt);
}

/// s⊗1 in the (x⊗1, 1⊗x) layout, and 1⊗s.
TruncSeries on_left(const TruncSeries& s)
{
    return relabel(s, {0, 1, 2, 3}, {0, -1, -1, -1}, 2, 2);
}

TruncSeries on_right(const TruncSeries& s)
{
    return relabel(s, {0, 2, 3, 3}, {1, -1, -1, -1}, 2, 2);
}

TruncSeries delta_series(const HopfPtr& H, const TruncSeries& s)
{
    return map_coefficients(s, CoefficientMap::structure(H, 1, StructureMap::Delta));
}

IsoResult build_iso(const CoboundaryResult& cob, const FormalGroupH& source, const FormalGroupH& target,
                    const TruncSeries& g, bool negate)
{
    IsoResult r{cob, std::nullopt, {}};
    if (!cob.coboundary)
        return r;
    const GradedPoly lambda = negate ? -*cob.witness : *cob.witness;
    const TruncSeries phi = TruncSeries::from_body(lambda, 1, 1, g.degree()) + g;
    r.hom = HopfFglHom{source, target, phi};
    r.checks = check_hom(*r.hom);
    return r;
}

} // namespace

TruncSeries omega_from_derivative(const FormalGroupH& G)
{
    const TruncSeries dz = partial_derivative(G.series(), 1);
    const TruncSeries e = map_coefficients(dz, CoefficientMap::structure(G.hopf(), 2, StructureMap::Epsilon));
    return relabel(set_variable_zero(e, 1), {0, 1, 2, 3}, {0, -1, -1, -1}, 1, 1);
}

TruncSeries omega_from_coefficients(const FormalGroupH& G)
{
    const TablePtr& t = G.table();
    const HopfPresentation& h = G.hopf()->presentation();
    GradedPoly body(t);
    for (const auto& [e, A] : G.series().coefficients())
        if (e[1] == 1)
            body += counit_on_leg_termwise(h, A.body(), 2, 2) * var_power(t, 0, e[0]);
    return TruncSeries::from_body(body, 1, 1, std::max(G.degree() - 1, 0));
}

TruncSeries omega_series(const FormalGroupH& G)
{
    const TruncSeries a = omega_from_derivative(G);
    const TruncSeries b = omega_from_coefficients(G);
    if (!(a == b))
        throw Error("ω̃ disagrees between the derivative and the coefficient column: " + to_string(a) + " vs " +
                    to_string(b));
    const Rational lead = a.body().constant_term();
    if (lead != 1)
        throw PreconditionError("ω̃ has constant coefficient with weight-0 part " + to_string(lead) +
                                " instead of 1, so 𝔉 is not a formal group at this truncation");
    return a;
}

TruncSeries log_series(const FormalGroupH& G)
{
    return formal_integral(reciprocal(omega_series(G)));
}

LogData extract_cocycle(const FormalGroupH& G)
{
    const TruncSeries omega = omega_series(G);
    const TruncSeries g = formal_integral(reciprocal(omega));
    const int T = std::min(g.degree(), G.degree());
    const TruncSeries gT = g.truncated(T);

    const TruncSeries lhs = substitute(delta_series(G.hopf(), gT), {G.series().truncated(T)});
    const TruncSeries D = lhs - on_left(gT) - on_right(gT);

    const TensorElem c = D.coefficient(VarExponents{0, 0, 0, 0});
    const TruncSeries dependent = D - TruncSeries::from_body(c.body(), 2, 2, T);

    LogData data{omega, g, c, {}};
    data.checks.push_back(residual_check("cocycle.x-independence", dependent.body(), PrintStyle{2, default_var_names()}));
    const HopfAlgebra& H = *G.hopf();
    data.checks.push_back(residual_check("cocycle.counit.left", apply_on_leg(H, c, 2, StructureMap::Epsilon).body(),
                                         PrintStyle{1, default_var_names()}));
    data.checks.push_back(residual_check("cocycle.counit.right", apply_on_leg(H, c, 1, StructureMap::Epsilon).body(),
                                         PrintStyle{1, default_var_names()}));
    return data;
}

FormalGroupH linear_group(const HopfPtr& H, const TensorElem& c, int degree)
{
    if (c.legs() != 2)
        throw StructuralError("a linear group needs a two-leg cochain");
    if (!(swap_legs(c) == c))
        throw PreconditionError("linear groups need a symmetric cochain; " + to_string(c) + " is not");
    const TablePtr& t = H->table();
    const GradedPoly x = GradedPoly::slot(t, t->var_slot(0)), y = GradedPoly::slot(t, t->var_slot(1));
    const TruncSeries F = TruncSeries::from_body(c.body() + x + y, 2, 2, degree);
    const TensorElem s = contract_mu(apply_on_leg(*H, c, 2, StructureMap::Antipode), 1, 2);
    const TruncSeries theta = TruncSeries::from_body(-s.body() - x, 1, 1, degree);
    return FormalGroupH(H, F, theta);
}

FormalGroupH additive_group(const HopfPtr& H, int degree)
{
    const TablePtr& t = H->table();
    return FormalGroupH(H, TruncSeries::from_body(GradedPoly::slot(t, t->var_slot(0)) + GradedPoly::slot(t, t->var_slot(1)),
                                                  2, 2, degree));
}

IsoResult trivialize(const FormalGroupH& G)
{
    const LogData log = extract_cocycle(G);
    for (const auto& c : log.checks)
        if (!c.passed())
            throw PreconditionError("cannot trivialize: " + c.name + " fails with residual " + c.residual_text);
    const int T = std::min(log.g.degree(), G.degree());
    const CoboundaryResult cob = coboundary_solve(*G.hopf(), log.cocycle, T);
    return build_iso(cob, G, additive_group(G.hopf(), G.degree()), log.g.truncated(T), true);
}

IsoResult iso_linear(const HopfPtr& H, const TensorElem& c1, const TensorElem& c2, int degree)
{
    const TensorElem diff(2, c2.body() - c1.body());
    const CoboundaryResult cob = coboundary_solve(*H, diff, degree);
    const TruncSeries x = TruncSeries::variable(H->table(), 1, 1, degree, 0);
    return build_iso(cob, linear_group(H, c1, degree), linear_group(H, c2, degree), x, false);
}

CheckResult reconstruct(const FormalGroupH& G)
{
    const LogData log = extract_cocycle(G);
    const int T = std::min(log.g.degree(), G.degree());
    const TruncSeries g = log.g.truncated(T);
    const TruncSeries inverse = comp_inverse(delta_series(G.hopf(), g));
    const TruncSeries arg = TruncSeries::from_body(log.cocycle.body(), 2, 2, T) + on_left(g) + on_right(g);
    const TruncSeries rebuilt = substitute(inverse, {arg});
    return residual_check("reconstruct", (rebuilt - G.series().truncated(T)).body(), PrintStyle{2, default_var_names()});
}

} // namespace fglh
