#include "fglh/hopf.hpp"

#include <algorithm>

namespace fglh {

namespace {

struct SlotUsage {
    int max_leg = 0;
    bool base = false;
    bool vars = false;
};

SlotUsage slot_usage(const GradedPoly& p)
{
    SlotUsage u;
    const auto& t = *p.table();
    for (const auto& [m, c] : p.terms())
        for (std::size_t s = 0; s < t.slot_count(); ++s) {
            if (m[s] == 0)
                continue;
            const SlotInfo info = t.describe(s);
            if (info.kind == SlotKind::Hopf)
                u.max_leg = std::max(u.max_leg, info.leg);
            else if (info.kind == SlotKind::Variable)
                u.vars = true;
            else
                u.base = true;
        }
    return u;
}

void require_leg(int legs, int leg)
{
    if (leg < 1 || leg > legs)
        throw PreconditionError("leg " + std::to_string(leg) + " out of range for a " + std::to_string(legs) +
                                "-leg element");
}

GradedPoly generator_on_leg(const TablePtr& t, std::size_t h, int leg)
{
    return GradedPoly::slot(t, t->hopf_slot(h, leg));
}

GradedPoly off_weight_part(const GradedPoly& p, int w)
{
    GradedPoly r(p.table());
    for (const auto& [m, c] : p.terms())
        if (p.weight(m) != w)
            r.add_term(m, c);
    return r;
}

} // namespace

TensorElem::TensorElem(int legs, GradedPoly body) : legs_(legs), body_(std::move(body))
{
    if (legs_ < 0 || legs_ > kMaxLegs)
        throw StructuralError("tensor elements carry 0.." + std::to_string(kMaxLegs) + " legs");
    const SlotUsage u = slot_usage(body_);
    if (u.vars)
        throw StructuralError("tensor element contains series variables");
    if (u.max_leg > legs_)
        throw StructuralError("leg index " + std::to_string(u.max_leg) + " exceeds arity " + std::to_string(legs_));
}

std::string to_string(const TensorElem& e)
{
    return to_string(e.body(), PrintStyle{e.legs()});
}

HopfPresentation HopfPresentation::primitive(TablePtr table)
{
    HopfPresentation h{table, {}, {}, {}};
    for (std::size_t i = 0; i < table->hopf_count(); ++i) {
        h.delta.push_back(generator_on_leg(table, i, 1) + generator_on_leg(table, i, 2));
        h.counit.push_back(GradedPoly(table));
        h.antipode.push_back(-generator_on_leg(table, i, 1));
    }
    return h;
}

SlotMap leg_slot_map(const GeneratorTable& table, const std::array<int, kMaxLegs + 1>& to)
{
    SlotMap map = identity_slot_map();
    for (int leg = 1; leg <= kMaxLegs; ++leg)
        for (std::size_t h = 0; h < table.hopf_count(); ++h)
            map[table.hopf_slot(h, leg)] = to[std::size_t(leg)] < 0 ? -1 : int(table.hopf_slot(h, to[std::size_t(leg)]));
    return map;
}

GradedPoly relabel_legs(const GradedPoly& body, const std::array<int, kMaxLegs + 1>& to)
{
    return remap_slots(body, leg_slot_map(*body.table(), to));
}

GradedPoly apply_on_leg(const HopfPresentation& h, const GradedPoly& body, int legs, int leg, StructureMap f,
                        WeightBound bound)
{
    require_leg(legs, leg);
    if (!same_table(body.table(), h.table))
        throw StructuralError("element is not over this Hopf algebra's generator table");
    const auto& t = *h.table;
    const std::size_t nh = t.hopf_count();
    std::vector<GradedPoly> placed;
    placed.reserve(nh);
    SlotImages images(t.slot_count(), nullptr);

    switch (f) {
    case StructureMap::Delta: {
        if (legs + 1 > kMaxLegs)
            throw PreconditionError("DELTA would need " + std::to_string(legs + 1) + " legs; at most " +
                                    std::to_string(kMaxLegs) + " are supported");
        std::array<int, kMaxLegs + 1> shift{0, 1, 2, 3};
        for (int l = leg + 1; l <= kMaxLegs; ++l)
            shift[std::size_t(l)] = l + 1 <= kMaxLegs ? l + 1 : -1;
        const GradedPoly shifted = relabel_legs(body, shift);
        for (std::size_t g = 0; g < nh; ++g)
            placed.push_back(relabel_legs(h.delta[g], {0, leg, leg + 1, -1}));
        for (std::size_t g = 0; g < nh; ++g)
            images[t.hopf_slot(g, leg)] = &placed[g];
        return substitute_slots(shifted, images, bound);
    }
    case StructureMap::Epsilon: {
        for (std::size_t g = 0; g < nh; ++g)
            images[t.hopf_slot(g, leg)] = &h.counit[g];
        const GradedPoly evaluated = substitute_slots(body, images, bound);
        std::array<int, kMaxLegs + 1> shift{0, 1, 2, 3};
        shift[std::size_t(leg)] = -1;
        for (int l = leg + 1; l <= kMaxLegs; ++l)
            shift[std::size_t(l)] = l - 1;
        return relabel_legs(evaluated, shift);
    }
    case StructureMap::Antipode: {
        for (std::size_t g = 0; g < nh; ++g)
            placed.push_back(relabel_legs(h.antipode[g], {0, leg, -1, -1}));
        for (std::size_t g = 0; g < nh; ++g)
            images[t.hopf_slot(g, leg)] = &placed[g];
        return substitute_slots(body, images, bound);
    }
    }
    throw StructuralError("unknown structure map");
}

GradedPoly contract_legs(const GradedPoly& body, int legs, int first)
{
    if (legs < 2)
        throw PreconditionError("μ needs at least two legs");
    require_leg(legs, first);
    require_leg(legs, first + 1);
    std::array<int, kMaxLegs + 1> to{0, 1, 2, 3};
    for (int l = first + 1; l <= kMaxLegs; ++l)
        to[std::size_t(l)] = l - 1;
    return relabel_legs(body, to);
}

GradedPoly counit_on_leg_termwise(const HopfPresentation& h, const GradedPoly& body, int legs, int leg)
{
    require_leg(legs, leg);
    const auto& t = *h.table;
    const TablePtr& tp = h.table;
    GradedPoly out(tp);
    for (const auto& [m, c] : body.terms()) {
        // ε of the leg's monomial, as a product of the generators' counit images
        GradedPoly factor = GradedPoly::constant(tp, c);
        Monomial rest;
        for (std::size_t s = 0; s < t.slot_count(); ++s) {
            if (m[s] == 0)
                continue;
            const SlotInfo info = t.describe(s);
            if (info.kind == SlotKind::Hopf && info.leg == leg) {
                factor = factor * power(h.counit[info.index], m[s], std::nullopt);
            } else if (info.kind == SlotKind::Hopf && info.leg > leg) {
                rest[t.hopf_slot(info.index, info.leg - 1)] = m[s];
            } else {
                rest[s] = m[s];
            }
        }
        out += factor * GradedPoly::monomial(tp, rest);
    }
    return out;
}

TensorElem apply_on_leg(const HopfAlgebra& h, const TensorElem& e, int leg, StructureMap f)
{
    const int legs = e.legs() + (f == StructureMap::Delta ? 1 : f == StructureMap::Epsilon ? -1 : 0);
    if (f == StructureMap::Delta && legs > kMaxLegs)
        throw PreconditionError("DELTA overflow beyond " + std::to_string(kMaxLegs) + " legs");
    return TensorElem(legs, apply_on_leg(h.presentation(), e.body(), e.legs(), leg, f, std::nullopt));
}

TensorElem contract_mu(const TensorElem& e, int first, int second)
{
    if (second != first + 1)
        throw PreconditionError("μ contracts adjacent legs only");
    return TensorElem(e.legs() - 1, contract_legs(e.body(), e.legs(), first));
}

TensorElem swap_legs(const TensorElem& e)
{
    if (e.legs() != 2)
        throw PreconditionError("leg swap is defined on 2-leg elements");
    return TensorElem(2, relabel_legs(e.body(), {0, 2, 1, 3}));
}

ValidationReport validate_hopf(const HopfPresentation& h, int degree)
{
    if (!h.table)
        throw StructuralError("Hopf presentation without a generator table");
    if (degree < 0)
        throw PreconditionError("degree bound must be non-negative");
    const auto& t = *h.table;
    const std::size_t nh = t.hopf_count();
    if (h.delta.size() != nh || h.counit.size() != nh || h.antipode.size() != nh)
        throw StructuralError("structure-map images must be given for every H-generator");

    for (std::size_t g = 0; g < nh; ++g) {
        const std::string& name = t.hopf(g).name;
        for (const GradedPoly* p : {&h.delta[g], &h.counit[g], &h.antipode[g]})
            if (!same_table(p->table(), h.table))
                throw StructuralError("image of '" + name + "' uses a different generator table");
        const SlotUsage d = slot_usage(h.delta[g]), e = slot_usage(h.counit[g]), s = slot_usage(h.antipode[g]);
        if (d.vars || d.max_leg > 2)
            throw StructuralError("Δ(" + name + ") must be a 2-leg element");
        if (e.vars || e.max_leg > 0)
            throw StructuralError("ε(" + name + ") must involve base-ring generators only");
        if (s.vars || s.max_leg > 1)
            throw StructuralError("S(" + name + ") must be a 1-leg element");
    }

    ValidationReport report;
    report.degree = degree;
    report.cocommutative = true;
    const WeightBound bound = degree;
    for (std::size_t g = 0; g < nh; ++g) {
        const std::string& name = t.hopf(g).name;
        const int w = t.hopf(g).weight;
        const GradedPoly gen = truncate_weight(generator_on_leg(h.table, g, 1), degree);
        const GradedPoly counit = truncate_weight(h.counit[g], degree);
        const GradedPoly& d = h.delta[g];

        report.checks.push_back(residual_check("homogeneity.delta(" + name + ")", off_weight_part(d, w), {2}));
        report.checks.push_back(residual_check("homogeneity.counit(" + name + ")", off_weight_part(counit, w), {0}));
        report.checks.push_back(
            residual_check("homogeneity.antipode(" + name + ")", off_weight_part(h.antipode[g], w), {1}));

        const GradedPoly left_assoc = apply_on_leg(h, d, 2, 1, StructureMap::Delta, bound);
        const GradedPoly right_assoc = apply_on_leg(h, d, 2, 2, StructureMap::Delta, bound);
        report.checks.push_back(residual_check("coassociativity(" + name + ")", left_assoc - right_assoc, {3}));

        const GradedPoly eps_left = apply_on_leg(h, d, 2, 1, StructureMap::Epsilon, bound);
        const GradedPoly eps_right = apply_on_leg(h, d, 2, 2, StructureMap::Epsilon, bound);
        report.checks.push_back(residual_check("counit.left(" + name + ")", eps_left - gen, {1}));
        report.checks.push_back(residual_check("counit.right(" + name + ")", eps_right - gen, {1}));

        const GradedPoly s_left = contract_legs(apply_on_leg(h, d, 2, 1, StructureMap::Antipode, bound), 2, 1);
        const GradedPoly s_right = contract_legs(apply_on_leg(h, d, 2, 2, StructureMap::Antipode, bound), 2, 1);
        report.checks.push_back(
            residual_check("antipode.left(" + name + ")", truncate_weight(s_left - counit, degree), {1}));
        report.checks.push_back(
            residual_check("antipode.right(" + name + ")", truncate_weight(s_right - counit, degree), {1}));

        if (relabel_legs(d, {0, 2, 1, 3}) != d)
            report.cocommutative = false;
    }
    return report;
}

HopfValidationError::HopfValidationError(ValidationReport report)
    : Error("Hopf presentation failed validation"), report_(std::move(report))
{
}

std::shared_ptr<const HopfAlgebra> HopfAlgebra::create(HopfPresentation presentation, int degree)
{
    ValidationReport report = validate_hopf(presentation, degree);
    if (!report.passed())
        throw HopfValidationError(std::move(report));
    return std::shared_ptr<const HopfAlgebra>(new HopfAlgebra(std::move(presentation), std::move(report)));
}

EndoMap::EndoMap(HopfPtr hopf, std::vector<GradedPoly> images, int degree)
    : hopf_(std::move(hopf)), images_(std::move(images)), degree_(degree)
{
    if (!hopf_)
        throw StructuralError("endomorphism without a Hopf algebra");
    const auto& t = *hopf_->table();
    if (images_.size() != t.hopf_count())
        throw StructuralError("an endomorphism needs one image per H-generator");
    for (auto& img : images_) {
        if (!same_table(img.table(), hopf_->table()))
            throw StructuralError("endomorphism image over a different generator table");
        const SlotUsage u = slot_usage(img);
        if (u.vars || u.max_leg > 1)
            throw StructuralError("endomorphism images must be 1-leg elements of H");
        img = truncate_weight(img, degree_);
    }
}

EndoMap EndoMap::identity(HopfPtr hopf, int degree)
{
    std::vector<GradedPoly> images;
    for (std::size_t g = 0; g < hopf->table()->hopf_count(); ++g)
        images.push_back(generator_on_leg(hopf->table(), g, 1));
    return EndoMap(std::move(hopf), std::move(images), degree);
}

EndoMap EndoMap::unit_counit(HopfPtr hopf, int degree)
{
    std::vector<GradedPoly> images = hopf->presentation().counit;
    return EndoMap(std::move(hopf), std::move(images), degree);
}

EndoMap EndoMap::antipode(HopfPtr hopf, int degree)
{
    std::vector<GradedPoly> images = hopf->presentation().antipode;
    return EndoMap(std::move(hopf), std::move(images), degree);
}

GradedPoly EndoMap::apply(const GradedPoly& body, int legs, int leg) const
{
    require_leg(legs, leg);
    const auto& t = *hopf_->table();
    std::vector<GradedPoly> placed;
    placed.reserve(images_.size());
    for (const auto& img : images_)
        placed.push_back(relabel_legs(img, {0, leg, -1, -1}));
    SlotImages slots(t.slot_count(), nullptr);
    for (std::size_t g = 0; g < placed.size(); ++g)
        slots[t.hopf_slot(g, leg)] = &placed[g];
    return substitute_slots(body, slots, degree_);
}

bool EndoMap::operator==(const EndoMap& o) const
{
    if (!same_table(hopf_->table(), o.hopf_->table()))
        return false;
    const int d = std::min(degree_, o.degree_);
    for (std::size_t g = 0; g < images_.size(); ++g)
        if (truncate_weight(images_[g], d) != truncate_weight(o.images_[g], d))
            return false;
    return true;
}

EndoMap convolution(const EndoMap& f, const EndoMap& g)
{
    if (!same_table(f.hopf()->table(), g.hopf()->table()))
        throw StructuralError("convolution of endomorphisms of different Hopf algebras");
    const auto& h = f.hopf()->presentation();
    const int degree = std::min(f.degree(), g.degree());
    std::vector<GradedPoly> images;
    for (std::size_t i = 0; i < h.delta.size(); ++i) {
        const GradedPoly split = truncate_weight(h.delta[i], degree);
        const GradedPoly mapped = g.apply(f.apply(split, 2, 1), 2, 2);
        images.push_back(contract_legs(mapped, 2, 1));
    }
    return EndoMap(f.hopf(), std::move(images), degree);
}

EndoMap conv_power(const HopfPtr& hopf, int n, int degree)
{
    if (n == 0)
        return EndoMap::unit_counit(hopf, degree);
    const EndoMap step = n > 0 ? EndoMap::identity(hopf, degree) : EndoMap::antipode(hopf, degree);
    EndoMap acc = step;
    for (int k = 1; k < std::abs(n); ++k)
        acc = convolution(acc, step);
    return acc;
}

} // namespace fglh
