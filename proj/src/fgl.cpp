#include "fglh/fgl.hpp"

#include "fglh/error.hpp"

namespace fglh {

namespace {

TruncSeries var(const TablePtr& t, int nvars, int legs, int degree, int v)
{
    return TruncSeries::variable(t, nvars, legs, degree, v);
}

TruncSeries zero_series(const TablePtr& t, int nvars, int legs, int degree)
{
    return TruncSeries(t, nvars, legs, degree);
}

/// Θ with g(x, Θ(x)) = 0 for a two-variable series g whose y-linear coefficient
/// has a nonzero weight-0 part. Newton-style: each round fixes one more degree.
TruncSeries solve_second_argument(const TruncSeries& g)
{
    const TablePtr& t = g.table();
    const int legs = g.legs(), T = g.degree();
    const GradedPoly b01 = g.coefficient(0, 1).body();
    const Rational unit = b01.constant_term();
    if (unit == 0)
        throw PreconditionError("inverse element not solvable at this truncation: the y-linear coefficient is not a unit");
    const Rational inv_unit = 1 / unit;
    const TruncSeries inverse_lead =
        Rational(inv_unit) * reciprocal(TruncSeries::from_body(b01 * inv_unit, 1, legs, T));

    const TruncSeries x = var(t, 1, legs, T, 0);
    TruncSeries theta = zero_series(t, 1, legs, T);
    try {
        for (int round = 0; round <= T + 1; ++round) {
            const TruncSeries r = substitute(g, {x, theta});
            if (r.is_zero())
                return theta;
            theta = theta - r * inverse_lead;
        }
    } catch (const DivergenceError&) {
    }
    throw PreconditionError("inverse element not solvable at this truncation");
}

/// Places a one-leg, two-variable series on the given leg and variables of a larger context.
TruncSeries place(const TruncSeries& s, const std::array<int, kMaxLegs + 1>& legs_to,
                  const std::array<int, kMaxVars>& vars_to, int legs, int nvars)
{
    return relabel(s, legs_to, vars_to, legs, nvars);
}

GradedPoly coefficient_form_counit(const FormalGroupH& G, bool left)
{
    const HopfPresentation& h = G.hopf()->presentation();
    const TablePtr& t = G.table();
    const int free_var = left ? 0 : 1;
    GradedPoly out(t);
    for (const auto& [e, A] : G.series().coefficients()) {
        if (e[std::size_t(1 - free_var)] != 0)
            continue;
        GradedPoly c = counit_on_leg_termwise(h, A.body(), 2, left ? 2 : 1);
        if (e[std::size_t(free_var)] == 1)
            c -= GradedPoly::constant(t, 1);
        out += c * power(GradedPoly::slot(t, t->var_slot(free_var)), unsigned(e[std::size_t(free_var)]), std::nullopt);
    }
    // the unit term itself when A_{1,0} (resp. A_{0,1}) vanishes
    if (G.series().coefficient(left ? VarExponents{1, 0, 0, 0} : VarExponents{0, 1, 0, 0}).is_zero())
        out -= GradedPoly::slot(t, t->var_slot(free_var));
    return truncate_weight(out, G.degree());
}

} // namespace

ClassicalFGL::ClassicalFGL(TruncSeries F) : F_(std::move(F))
{
    if (F_.nvars() != 2 || F_.legs() != 0)
        throw StructuralError("a classical formal group law is a two-variable series with base-ring coefficients");
}

std::vector<CheckResult> check_classical(const ClassicalFGL& law)
{
    const TruncSeries& F = law.series();
    const TablePtr& t = law.table();
    const int T = law.degree();
    const PrintStyle style{0, default_var_names()};
    std::vector<CheckResult> checks;

    const TruncSeries x = var(t, 2, 0, T, 0), y = var(t, 2, 0, T, 1);
    checks.push_back(residual_check("unit.left", (set_variable_zero(F, 1) - x).body(), style));
    checks.push_back(residual_check("unit.right", (set_variable_zero(F, 0) - y).body(), style));

    const TruncSeries X = var(t, 3, 0, T, 0), Y = var(t, 3, 0, T, 1), Z = var(t, 3, 0, T, 2);
    const TruncSeries Fxy = place(F, {0, 1, 2, 3}, {0, 1, -1, -1}, 0, 3);
    const TruncSeries Fyz = place(F, {0, 1, 2, 3}, {1, 2, -1, -1}, 0, 3);
    try {
        checks.push_back(residual_check("associativity", (substitute(F, {X, Fyz}) - substitute(F, {Fxy, Z})).body(), style));
    } catch (const DivergenceError& e) {
        checks.push_back(failed_check("associativity", e.what()));
    }

    const TruncSeries swapped = place(F, {0, 1, 2, 3}, {1, 0, -1, -1}, 0, 2);
    checks.push_back(residual_check("commutativity", (F - swapped).body(), style));
    return checks;
}

TruncSeries classical_inverse(const ClassicalFGL& F)
{
    return solve_second_argument(F.series());
}

TruncSeries power_system(const ClassicalFGL& law, int n)
{
    const TablePtr& t = law.table();
    const int T = law.degree();
    const TruncSeries x = var(t, 1, 0, T, 0);
    if (n == 0)
        return zero_series(t, 1, 0, T);
    const TruncSeries step = n > 0 ? x : classical_inverse(law);
    TruncSeries phi = step;
    for (int k = 1; k < std::abs(n); ++k)
        phi = substitute(law.series(), {step, phi});
    return phi;
}

FormalGroupH::FormalGroupH(HopfPtr hopf, TruncSeries F, std::optional<TruncSeries> theta)
    : hopf_(std::move(hopf)), F_(std::move(F)), theta_(std::move(theta))
{
    if (!hopf_)
        throw StructuralError("formal group needs a Hopf algebra");
    if (F_.nvars() != 2 || F_.legs() != 2)
        throw StructuralError("a formal group series has two variables and two-leg coefficients");
    if (!same_table(F_.table(), hopf_->table()))
        throw StructuralError("formal group series is not over its Hopf algebra's generator table");
    if (theta_) {
        if (theta_->nvars() != 1 || theta_->legs() != 1)
            throw StructuralError("Θ is a one-variable series with one-leg coefficients");
        if (!same_table(theta_->table(), hopf_->table()))
            throw StructuralError("Θ is not over the Hopf algebra's generator table");
        if (theta_->degree() != F_.degree())
            throw StructuralError("Θ and 𝔉 must share the degree bound");
    }
}

TruncSeries extended_diagonal_on_leg(const FormalGroupH& G, const TruncSeries& s, int leg)
{
    const int L = s.legs();
    if (s.nvars() != L)
        throw StructuralError("extended diagonal needs one variable per tensor leg");
    if (leg < 1 || leg > L)
        throw StructuralError("extended diagonal leg out of range");
    if (L + 1 > kMaxLegs)
        throw PreconditionError("extended diagonal would need more than " + std::to_string(kMaxLegs) + " legs");

    const TablePtr& t = G.table();
    const int T = std::min(s.degree(), G.degree());
    const TruncSeries delta = map_coefficients(s, CoefficientMap::structure(G.hopf(), leg, StructureMap::Delta));
    const TruncSeries F = G.series().truncated(T);

    std::vector<TruncSeries> args;
    for (int v = 0; v < L; ++v) {
        if (v < leg - 1)
            args.push_back(var(t, L + 1, L + 1, T, v));
        else if (v == leg - 1)
            args.push_back(place(F, {0, leg, leg + 1, 3}, {leg - 1, leg, -1, -1}, L + 1, L + 1));
        else
            args.push_back(var(t, L + 1, L + 1, T, v + 1));
    }
    return substitute(delta, args);
}

TruncSeries extended_diagonal(const FormalGroupH& G, const TruncSeries& s)
{
    if (s.nvars() != 1 || s.legs() != 1)
        throw StructuralError("extended diagonal takes a one-variable series over H");
    return extended_diagonal_on_leg(G, s, 1);
}

CheckResult check_associativity(const FormalGroupH& G)
{
    const TruncSeries lhs = extended_diagonal_on_leg(G, G.series(), 2);
    const TruncSeries rhs = extended_diagonal_on_leg(G, G.series(), 1);
    return residual_check("associativity", (lhs - rhs).body(), PrintStyle{3, default_var_names()});
}

CounitResiduals counit_residuals(const FormalGroupH& G)
{
    const TablePtr& t = G.table();
    const int T = G.degree();
    const TruncSeries& F = G.series();
    const TruncSeries left = map_coefficients(F, CoefficientMap::structure(G.hopf(), 2, StructureMap::Epsilon));
    const TruncSeries right = map_coefficients(F, CoefficientMap::structure(G.hopf(), 1, StructureMap::Epsilon));
    return {
        (set_variable_zero(left, 1) - var(t, 2, 1, T, 0)).body(),
        (set_variable_zero(right, 0) - var(t, 2, 1, T, 1)).body(),
        coefficient_form_counit(G, true),
        coefficient_form_counit(G, false),
    };
}

std::vector<CheckResult> check_counit(const FormalGroupH& G)
{
    const CounitResiduals r = counit_residuals(G);
    const PrintStyle style{1, default_var_names()};
    auto side = [&] (const std::string& name, const GradedPoly& structural, const GradedPoly& coefficient) {
        CheckResult c = residual_check(name, structural, style);
        if (!(structural == coefficient)) {
            c.verdict = Verdict::Fail;
            c.note = "structural and coefficient-form counit checks disagree (coefficient form: " +
                     to_string(coefficient, style) + ")";
        }
        return c;
    };
    return {side("counit.left", r.structural_left, r.coefficient_left),
            side("counit.right", r.structural_right, r.coefficient_right)};
}

TruncSeries g_series(const FormalGroupH& G)
{
    const TruncSeries s = map_coefficients(G.series(), CoefficientMap::structure(G.hopf(), 2, StructureMap::Antipode));
    return map_coefficients(s, CoefficientMap::multiply_legs(1));
}

TruncSeries g_series_mirror(const FormalGroupH& G)
{
    const TruncSeries s = map_coefficients(G.series(), CoefficientMap::structure(G.hopf(), 1, StructureMap::Antipode));
    return map_coefficients(s, CoefficientMap::multiply_legs(1));
}

TruncSeries solve_theta(const FormalGroupH& G)
{
    return solve_second_argument(g_series(G));
}

std::vector<CheckResult> check_inverse(const FormalGroupH& G, const TruncSeries& theta)
{
    const PrintStyle style{1, default_var_names()};
    const TruncSeries x = var(G.table(), 1, 1, theta.degree(), 0);
    std::vector<CheckResult> checks;
    try {
        checks.push_back(residual_check("inverse", substitute(g_series(G), {x, theta}).body(), style));
    } catch (const DivergenceError& e) {
        checks.push_back(failed_check("inverse", e.what()));
    }
    try {
        checks.push_back(residual_check("inverse.mirror", substitute(g_series_mirror(G), {theta, x}).body(), style));
    } catch (const DivergenceError& e) {
        checks.push_back(failed_check("inverse.mirror", e.what()));
    }
    return checks;
}

CheckResult check_commutative(const FormalGroupH& G)
{
    const TruncSeries& F = G.series();
    const TruncSeries swapped = relabel(F, {0, 2, 1, 3}, {1, 0, 2, 3}, 2, 2);
    CheckResult c = residual_check("commutativity", (F - swapped).body(), PrintStyle{2, default_var_names()});
    if (!G.hopf()->cocommutative())
        c.note = "the Hopf algebra is not cocommutative, so commutativity is outside its intended setting";
    return c;
}

AxiomReport check_axioms(const FormalGroupH& G, bool commutative)
{
    AxiomReport report;
    try {
        report.checks.push_back(check_associativity(G));
    } catch (const DivergenceError& e) {
        report.checks.push_back(failed_check("associativity", e.what()));
    }

    const std::vector<CheckResult> counit = check_counit(G);
    report.checks.insert(report.checks.end(), counit.begin(), counit.end());

    if (all_passed(counit)) {
        std::optional<TruncSeries> theta = G.theta();
        if (!theta) {
            try {
                theta = solve_theta(G);
            } catch (const PreconditionError& e) {
                report.checks.push_back(failed_check("inverse", e.what()));
            }
        }
        if (theta) {
            const std::vector<CheckResult> inv = check_inverse(G, *theta);
            report.checks.insert(report.checks.end(), inv.begin(), inv.end());
            report.theta = theta;
        }
    } else {
        report.checks.push_back(skipped_check("inverse", "requires the counit axiom"));
    }

    if (commutative)
        report.checks.push_back(check_commutative(G));
    return report;
}

BaseGroupResult base_group(const FormalGroupH& G)
{
    BaseGroupResult r{ClassicalFGL(map_coefficients(G.series(), CoefficientMap::counit_all(G.hopf()))), std::nullopt, {}};
    for (CheckResult c : check_classical(r.F)) {
        c.name = "base." + c.name;
        r.checks.push_back(std::move(c));
    }

    try {
        r.theta = classical_inverse(r.F);
    } catch (const PreconditionError& e) {
        r.checks.push_back(failed_check("base.inverse", e.what()));
        return r;
    }

    std::optional<TruncSeries> Theta = G.theta();
    if (!Theta) {
        try {
            Theta = solve_theta(G);
        } catch (const PreconditionError& e) {
            r.checks.push_back(skipped_check("base.theta", std::string("Θ unavailable: ") + e.what()));
            return r;
        }
    }
    const TruncSeries eps_theta = map_coefficients(*Theta, CoefficientMap::counit_all(G.hopf()));
    r.checks.push_back(residual_check("base.theta", (eps_theta - *r.theta).body(), PrintStyle{0, default_var_names()}));
    return r;
}

std::vector<std::string> g_identity_var_names()
{
    return {"x1", "x2", "y1", "y2"};
}

CheckResult check_g_identity(const FormalGroupH& G)
{
    const HopfPtr& H = G.hopf();
    const TruncSeries& F = G.series();
    try {
        const TruncSeries g = g_series(G);
        const TruncSeries dg = map_coefficients(g, CoefficientMap::structure(H, 1, StructureMap::Delta));
        const TruncSeries SS = map_coefficients(map_coefficients(F, CoefficientMap::structure(H, 1, StructureMap::Antipode)),
                                                CoefficientMap::structure(H, 2, StructureMap::Antipode));
        const TruncSeries X = place(F, {0, 1, 2, 3}, {0, 1, -1, -1}, 2, 4);
        const TruncSeries Y = place(SS, {0, 1, 2, 3}, {2, 3, -1, -1}, 2, 4);
        const TruncSeries lhs = substitute(dg, {X, Y});

        const TruncSeries base = map_coefficients(F, CoefficientMap::counit_all(H));
        const TruncSeries g1 = place(g, {0, 1, 2, 3}, {0, 2, -1, -1}, 2, 4);
        const TruncSeries g2 = place(g, {0, 2, 3, 3}, {1, 3, -1, -1}, 2, 4);
        const TruncSeries rhs = substitute(base, {g1, g2});
        return residual_check("g-identity", (lhs - rhs).body(), PrintStyle{2, g_identity_var_names()});
    } catch (const DivergenceError& e) {
        return failed_check("g-identity", e.what());
    }
}

} // namespace fglh
