#include "fglh/series.hpp"

#include <algorithm>

namespace fglh {

namespace {

void require_same_shape(const TruncSeries& a, const TruncSeries& b)
{
    if (a.nvars() != b.nvars() || a.legs() != b.legs() || a.degree() != b.degree())
        throw StructuralError("series shape mismatch: (" + std::to_string(a.nvars()) + " vars, " +
                              std::to_string(a.legs()) + " legs, T=" + std::to_string(a.degree()) + ") vs (" +
                              std::to_string(b.nvars()) + " vars, " + std::to_string(b.legs()) + " legs, T=" +
                              std::to_string(b.degree()) + ")");
    if (!same_table(a.table(), b.table()))
        throw StructuralError("series over different generator tables");
}

Scalars join(Scalars a, Scalars b)
{
    return a == Scalars::Integer && b == Scalars::Integer ? Scalars::Integer : Scalars::Rational;
}

} // namespace

TruncSeries::TruncSeries(TablePtr table, int nvars, int legs, int degree, Scalars scalars)
    : body_(std::move(table)), nvars_(nvars), legs_(legs), degree_(degree), scalars_(scalars)
{
    if (nvars_ < 0 || nvars_ > kMaxVars)
        throw StructuralError("series carry at most " + std::to_string(kMaxVars) + " variables");
    if (legs_ < 0 || legs_ > kMaxLegs)
        throw StructuralError("series coefficients carry 0.." + std::to_string(kMaxLegs) + " legs");
    if (degree_ < 0)
        throw PreconditionError("degree bound must be non-negative");
}

TruncSeries TruncSeries::from_body(GradedPoly body, int nvars, int legs, int degree, Scalars scalars)
{
    TruncSeries s(body.table(), nvars, legs, degree, scalars);
    const auto& t = *s.table();
    for (const auto& [m, c] : body.terms())
        for (std::size_t slot = 0; slot < t.slot_count(); ++slot) {
            if (m[slot] == 0)
                continue;
            const SlotInfo info = t.describe(slot);
            if (info.kind == SlotKind::Variable && int(info.index) >= nvars)
                throw StructuralError("series body uses variable " + std::to_string(info.index) + " of a " +
                                      std::to_string(nvars) + "-variable series");
            if (info.kind == SlotKind::Hopf && info.leg > legs)
                throw StructuralError("series coefficient uses leg " + std::to_string(info.leg) + " of a " +
                                      std::to_string(legs) + "-leg series");
        }
    if (scalars == Scalars::Integer && !body.is_integral())
        throw PreconditionError("integer-scalar series with non-integral coefficients");
    s.body_ = truncate_weight(body, degree);
    return s;
}

TruncSeries TruncSeries::variable(TablePtr table, int nvars, int legs, int degree, int var)
{
    if (var < 0 || var >= nvars)
        throw StructuralError("variable index out of range");
    const std::size_t slot = table->var_slot(var);
    return from_body(GradedPoly::slot(table, slot), nvars, legs, degree);
}

TruncSeries TruncSeries::constant(const TensorElem& c, int nvars, int degree)
{
    return from_body(c.body(), nvars, c.legs(), degree);
}

TensorElem TruncSeries::coefficient(const VarExponents& e) const
{
    const auto& t = *table();
    GradedPoly out(table());
    for (const auto& [m, c] : body_.terms()) {
        bool match = true;
        for (int v = 0; v < kMaxVars && match; ++v)
            match = m[t.var_slot(v)] == e[std::size_t(v)];
        if (!match)
            continue;
        Monomial rest = m;
        for (int v = 0; v < kMaxVars; ++v)
            rest[t.var_slot(v)] = 0;
        out.add_term(rest, c);
    }
    return TensorElem(legs_, std::move(out));
}

std::map<VarExponents, GradedPoly> split_by_variables(const GradedPoly& body)
{
    const auto& t = *body.table();
    std::map<VarExponents, GradedPoly> out;
    for (const auto& [m, c] : body.terms()) {
        VarExponents e{};
        Monomial rest = m;
        for (int v = 0; v < kMaxVars; ++v) {
            e[std::size_t(v)] = m[t.var_slot(v)];
            rest[t.var_slot(v)] = 0;
        }
        out.try_emplace(e, body.table()).first->second.add_term(rest, c);
    }
    return out;
}

std::map<VarExponents, TensorElem> TruncSeries::coefficients() const
{
    std::map<VarExponents, TensorElem> out;
    for (auto& [e, p] : split_by_variables(body_))
        out.emplace(e, TensorElem(legs_, std::move(p)));
    return out;
}

TruncSeries TruncSeries::truncated(int degree) const
{
    if (degree > degree_)
        throw PreconditionError("cannot raise a series' degree bound from " + std::to_string(degree_) + " to " +
                                std::to_string(degree));
    TruncSeries s = *this;
    s.degree_ = degree;
    s.body_ = truncate_weight(body_, degree);
    return s;
}

TruncSeries TruncSeries::with_scalars(Scalars sc) const
{
    if (sc == Scalars::Integer && !body_.is_integral())
        throw PreconditionError("series has non-integral coefficients");
    TruncSeries s = *this;
    s.scalars_ = sc;
    return s;
}

bool TruncSeries::operator==(const TruncSeries& o) const
{
    return nvars_ == o.nvars_ && legs_ == o.legs_ && degree_ == o.degree_ && body_ == o.body_;
}

std::string to_string(const TruncSeries& s, std::vector<std::string> var_names)
{
    return to_string(s.body(), PrintStyle{s.legs(), std::move(var_names)});
}

TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b, SeriesOp op)
{
    require_same_shape(a, b);
    const PolyOp pop = op == SeriesOp::Add ? PolyOp::Add : op == SeriesOp::Sub ? PolyOp::Sub : PolyOp::Mul;
    TruncSeries r(a.table(), a.nvars(), a.legs(), a.degree(), join(a.scalars(), b.scalars()));
    return TruncSeries::from_body(poly_arith(a.body(), b.body(), pop, a.degree()), a.nvars(), a.legs(), a.degree(),
                                  r.scalars());
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b)
{
    return series_arith(a, b, SeriesOp::Add);
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b)
{
    return series_arith(a, b, SeriesOp::Sub);
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    return series_arith(a, b, SeriesOp::Mul);
}

TruncSeries operator-(const TruncSeries& a)
{
    return TruncSeries::from_body(-a.body(), a.nvars(), a.legs(), a.degree(), a.scalars());
}

TruncSeries operator*(const Rational& c, const TruncSeries& a)
{
    return TruncSeries::from_body(a.body() * c, a.nvars(), a.legs(), a.degree(),
                                  is_integer(c) ? a.scalars() : Scalars::Rational);
}

CoefficientMap CoefficientMap::structure(HopfPtr hopf, int leg, StructureMap f)
{
    const int delta = f == StructureMap::Delta ? 1 : f == StructureMap::Epsilon ? -1 : 0;
    return CoefficientMap(
        [hopf, leg, f] (const GradedPoly& body, int legs, WeightBound bound) {
            return apply_on_leg(hopf->presentation(), body, legs, leg, f, bound);
        },
        [delta] (int legs) { return legs + delta; });
}

CoefficientMap CoefficientMap::multiply_legs(int first)
{
    return CoefficientMap([first] (const GradedPoly& body, int legs, WeightBound) { return contract_legs(body, legs, first); },
                          [] (int legs) { return legs - 1; });
}

CoefficientMap CoefficientMap::endomorphism(EndoMap f, int leg)
{
    return CoefficientMap(
        [f = std::move(f), leg] (const GradedPoly& body, int legs, WeightBound bound) {
            GradedPoly r = f.apply(body, legs, leg);
            return bound ? truncate_weight(r, *bound) : r;
        },
        [] (int legs) { return legs; });
}

CoefficientMap CoefficientMap::endomorphism_each_leg(EndoMap f)
{
    return CoefficientMap(
        [f = std::move(f)] (const GradedPoly& body, int legs, WeightBound bound) {
            GradedPoly r = body;
            for (int leg = 1; leg <= legs; ++leg)
                r = f.apply(r, legs, leg);
            return bound ? truncate_weight(r, *bound) : r;
        },
        [] (int legs) { return legs; });
}

CoefficientMap CoefficientMap::counit_all(HopfPtr hopf)
{
    return CoefficientMap(
        [hopf] (const GradedPoly& body, int legs, WeightBound bound) {
            GradedPoly r = body;
            for (int l = legs; l >= 1; --l)
                r = apply_on_leg(hopf->presentation(), r, l, l, StructureMap::Epsilon, bound);
            return r;
        },
        [] (int) { return 0; });
}

CoefficientMap CoefficientMap::swap_legs()
{
    return CoefficientMap(
        [] (const GradedPoly& body, int legs, WeightBound) {
            if (legs != 2)
                throw PreconditionError("leg swap is defined on 2-leg coefficients");
            return relabel_legs(body, {0, 2, 1, 3});
        },
        [] (int legs) { return legs; });
}

CoefficientMap CoefficientMap::to_rationals()
{
    return CoefficientMap([] (const GradedPoly& body, int, WeightBound) { return body; }, [] (int legs) { return legs; },
                          true);
}

int CoefficientMap::result_legs(int legs) const
{
    const int r = legs_(legs);
    if (r < 0 || r > kMaxLegs)
        throw PreconditionError("coefficient map would produce " + std::to_string(r) + " legs");
    return r;
}

TruncSeries map_coefficients(const TruncSeries& s, const CoefficientMap& m)
{
    const int legs = m.result_legs(s.legs());
    return TruncSeries::from_body(m.apply(s.body(), s.legs(), s.degree()), s.nvars(), legs, s.degree(),
                                  m.result_scalars(s.scalars()));
}

TruncSeries relabel(const TruncSeries& s, const std::array<int, kMaxLegs + 1>& leg_to,
                    const std::array<int, kMaxVars>& var_to, int legs, int nvars)
{
    const auto& t = *s.table();
    SlotMap map = leg_slot_map(t, leg_to);
    for (int v = 0; v < kMaxVars; ++v)
        map[t.var_slot(v)] = var_to[std::size_t(v)] < 0 ? -1 : int(t.var_slot(var_to[std::size_t(v)]));
    return TruncSeries::from_body(remap_slots(s.body(), map), nvars, legs, s.degree(), s.scalars());
}

TruncSeries set_variable_zero(const TruncSeries& s, int var)
{
    std::array<int, kMaxVars> vars{0, 1, 2, 3};
    vars[std::size_t(var)] = -1;
    return relabel(s, {0, 1, 2, 3}, vars, s.legs(), s.nvars());
}

TruncSeries substitute(const TruncSeries& s, std::span<const TruncSeries> args)
{
    if (int(args.size()) != s.nvars())
        throw StructuralError("substitution needs one argument per variable (" + std::to_string(s.nvars()) +
                              "), got " + std::to_string(args.size()));
    if (args.empty())
        return s;
    const TruncSeries& ctx = args.front();
    for (const auto& a : args) {
        if (a.nvars() != ctx.nvars() || a.legs() != ctx.legs() || a.degree() != ctx.degree() ||
            !same_table(a.table(), ctx.table()))
            throw StructuralError("substitution arguments must share variables, legs and degree bound");
        if (a.body().constant_term() != 0)
            throw DivergenceError("substitution diverges: argument has nonzero weight-0 constant term");
    }
    if (!same_table(s.table(), ctx.table()))
        throw StructuralError("substitution across different generator tables");
    if (s.legs() > ctx.legs())
        throw StructuralError("outer series has more legs than the substitution context");

    const auto& t = *s.table();
    SlotImages images(t.slot_count(), nullptr);
    for (int v = 0; v < s.nvars(); ++v)
        images[t.var_slot(v)] = &args[std::size_t(v)].body();
    const int degree = std::min(s.degree(), ctx.degree());
    return TruncSeries::from_body(substitute_slots(s.body(), images, degree), ctx.nvars(), ctx.legs(), degree,
                                  join(s.scalars(), ctx.scalars()));
}

TruncSeries substitute(const TruncSeries& s, std::initializer_list<TruncSeries> args)
{
    return substitute(s, std::span<const TruncSeries>(args.begin(), args.size()));
}

TruncSeries partial_derivative(const TruncSeries& s, int var)
{
    if (var < 0 || var >= s.nvars())
        throw StructuralError("derivative variable out of range");
    const std::size_t slot = s.table()->var_slot(var);
    GradedPoly out(s.table());
    for (const auto& [m, c] : s.body().terms()) {
        if (m[slot] == 0)
            continue;
        Monomial d = m;
        d[slot] -= 1;
        out.add_term(d, c * m[slot]);
    }
    return TruncSeries::from_body(std::move(out), s.nvars(), s.legs(), std::max(s.degree() - 1, 0), s.scalars());
}

TruncSeries formal_integral(const TruncSeries& s)
{
    if (s.nvars() != 1)
        throw PreconditionError("formal integral is defined for one-variable series");
    if (s.scalars() == Scalars::Integer)
        throw PreconditionError("formal integral requires ℚ scalars");
    const std::size_t slot = s.table()->var_slot(0);
    GradedPoly out(s.table());
    for (const auto& [m, c] : s.body().terms()) {
        Monomial i = m;
        if (i[slot] == 0xFF)
            throw StructuralError("monomial exponent overflow (exponents are limited to 255)");
        i[slot] += 1;
        out.add_term(i, c / Rational(i[slot]));
    }
    return TruncSeries::from_body(std::move(out), 1, s.legs(), s.degree() + 1, s.scalars());
}

TruncSeries reciprocal(const TruncSeries& s)
{
    if (s.body().constant_term() != 1)
        throw PreconditionError("reciprocal: leading coefficient not a unit (weight-0 scalar part must be 1)");
    const TruncSeries one =
        TruncSeries::from_body(GradedPoly::constant(s.table(), 1), s.nvars(), s.legs(), s.degree(), s.scalars());
    const TruncSeries rest = s - one; // every monomial has positive total degree
    // 1/(1+r) = 1 - r(1 - r(1 - ...)); each round fixes one more degree
    TruncSeries acc = one;
    for (int k = 0; k < s.degree(); ++k)
        acc = one - rest * acc;
    return acc;
}

TruncSeries comp_inverse(const TruncSeries& s)
{
    if (s.nvars() != 1)
        throw PreconditionError("compositional inverse is defined for one-variable series");
    if (!s.coefficient(0).is_zero())
        throw PreconditionError("compositional inverse needs a zero constant coefficient");
    const TensorElem lead = s.coefficient(1);
    const Rational unit = lead.body().constant_term();
    if (unit == 0)
        throw PreconditionError("compositional inverse needs a linear coefficient with nonzero weight-0 part");

    const int degree = s.degree();
    const TruncSeries x = TruncSeries::variable(s.table(), 1, s.legs(), degree, 0);
    const TruncSeries lead_series = TruncSeries::from_body(lead.body() * (1 / unit), 1, s.legs(), degree);
    const TruncSeries inv_unit =
        TruncSeries::from_body(GradedPoly::constant(s.table(), 1 / unit), 1, s.legs(), degree);
    const TruncSeries lead_inverse = reciprocal(lead_series) * inv_unit;

    // u ← u + (x - s(u))·b₀⁻¹ raises the valuation of the defect by one per round
    TruncSeries u = x * lead_inverse;
    for (int k = 0; k <= degree; ++k) {
        const TruncSeries defect = x - substitute(s, {u});
        if (defect.is_zero())
            break;
        u = u + defect * lead_inverse;
    }
    return u.with_scalars(s.scalars() == Scalars::Integer && u.body().is_integral() ? Scalars::Integer
                                                                                    : Scalars::Rational);
}

} // namespace fglh
