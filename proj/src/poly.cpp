#include "fglh/poly.hpp"

#include "fglh/error.hpp"
#include "fglh/kernels.hpp"

#include <algorithm>
#include <sstream>

namespace fglh {

bool Monomial::is_one() const noexcept
{
    return std::all_of(exps.begin(), exps.end(), [] (std::uint8_t e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r;
    if (!kernels::active().add_exponents(a.exps.data(), b.exps.data(), r.exps.data()))
        throw StructuralError("monomial exponent overflow (exponents are limited to 255)");
    return r;
}

GradedPoly::GradedPoly(TablePtr table) : table_(std::move(table))
{
    if (!table_)
        throw StructuralError("polynomial without a generator table");
}

GradedPoly GradedPoly::constant(TablePtr table, const Rational& c)
{
    GradedPoly p(std::move(table));
    p.add_term(Monomial{}, c);
    return p;
}

GradedPoly GradedPoly::slot(TablePtr table, std::size_t slot, const Rational& c)
{
    if (slot >= table->slot_count())
        throw StructuralError("slot index out of range");
    Monomial m;
    m[slot] = 1;
    return monomial(std::move(table), m, c);
}

GradedPoly GradedPoly::monomial(TablePtr table, const Monomial& m, const Rational& c)
{
    GradedPoly p(std::move(table));
    p.add_term(m, c);
    return p;
}

Rational GradedPoly::constant_term() const
{
    return coefficient(Monomial{});
}

Rational GradedPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int GradedPoly::weight(const Monomial& m) const
{
    return int(kernels::active().weighted_degree(m.exps.data(), table_->slot_weights().data()));
}

std::optional<int> GradedPoly::max_weight() const
{
    std::optional<int> r;
    for (const auto& [m, c] : terms_)
        r = std::max(r.value_or(0), weight(m));
    return r;
}

std::optional<int> GradedPoly::min_weight() const
{
    std::optional<int> r;
    for (const auto& [m, c] : terms_) {
        const int w = weight(m);
        r = r ? std::min(*r, w) : w;
    }
    return r;
}

bool GradedPoly::is_homogeneous(int w) const
{
    return std::all_of(terms_.begin(), terms_.end(), [&] (const auto& t) { return weight(t.first) == w; });
}

bool GradedPoly::is_integral() const
{
    return std::all_of(terms_.begin(), terms_.end(), [] (const auto& t) { return is_integer(t.second); });
}

void GradedPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        it->second.canonicalize();
        if (it->second == 0)
            terms_.erase(it);
    }
}

void GradedPoly::require_same_table(const GradedPoly& o) const
{
    if (!same_table(table_, o.table_))
        throw StructuralError("polynomials over different generator tables");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o)
{
    require_same_table(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o)
{
    require_same_table(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    Rational k = c;
    k.canonicalize();
    for (auto& [m, v] : terms_)
        v *= k;
    return *this;
}

GradedPoly GradedPoly::operator-() const
{
    GradedPoly r = *this;
    for (auto& [m, v] : r.terms_)
        v = -v;
    return r;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b)
{
    return multiply(a, b, std::nullopt);
}

bool GradedPoly::operator==(const GradedPoly& o) const
{
    return same_table(table_, o.table_) && terms_ == o.terms_;
}

GradedPoly poly_arith(const GradedPoly& a, const GradedPoly& b, PolyOp op, WeightBound bound)
{
    switch (op) {
    case PolyOp::Add:
        return bound ? truncate_weight(a + b, *bound) : a + b;
    case PolyOp::Sub:
        return bound ? truncate_weight(a - b, *bound) : a - b;
    case PolyOp::Mul:
        return multiply(a, b, bound);
    }
    throw StructuralError("unknown polynomial operation");
}

namespace {

struct WeightedTerm {
    const Monomial* mono;
    const Rational* coeff;
    int weight;
};

std::vector<WeightedTerm> weighted_terms(const GradedPoly& p)
{
    std::vector<WeightedTerm> out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms())
        out.push_back({&m, &c, p.weight(m)});
    std::stable_sort(out.begin(), out.end(), [] (const auto& x, const auto& y) { return x.weight < y.weight; });
    return out;
}

} // namespace

GradedPoly multiply(const GradedPoly& a, const GradedPoly& b, WeightBound bound)
{
    if (!same_table(a.table(), b.table()))
        throw StructuralError("polynomials over different generator tables");
    GradedPoly r(a.table());
    if (a.is_zero() || b.is_zero())
        return r;
    const auto ta = weighted_terms(a);
    const auto tb = weighted_terms(b);
    const auto& k = kernels::active();
    Rational prod;
    Monomial m;
    for (const auto& x : ta) {
        if (bound && x.weight + tb.front().weight > *bound)
            break;
        for (const auto& y : tb) {
            if (bound && x.weight + y.weight > *bound)
                break;
            if (!k.add_exponents(x.mono->exps.data(), y.mono->exps.data(), m.exps.data()))
                throw StructuralError("monomial exponent overflow (exponents are limited to 255)");
            mpq_mul(prod.get_mpq_t(), x.coeff->get_mpq_t(), y.coeff->get_mpq_t());
            r.add_term(m, prod);
        }
    }
    return r;
}

GradedPoly power(const GradedPoly& a, unsigned k, WeightBound bound)
{
    GradedPoly result = GradedPoly::constant(a.table(), 1);
    GradedPoly base = a;
    while (k > 0) {
        if (k & 1u)
            result = multiply(result, base, bound);
        k >>= 1u;
        if (k > 0)
            base = multiply(base, base, bound);
    }
    return bound ? truncate_weight(result, *bound) : result;
}

GradedPoly truncate_weight(const GradedPoly& p, int w)
{
    GradedPoly r(p.table());
    for (const auto& [m, c] : p.terms())
        if (p.weight(m) <= w)
            r.add_term(m, c);
    return r;
}

GradedPoly substitute_slots(const GradedPoly& p, const SlotImages& images, WeightBound bound)
{
    const auto& table = p.table();
    const std::size_t nslots = table->slot_count();
    if (images.size() < nslots)
        throw StructuralError("slot image list shorter than the slot layout");
    for (std::size_t s = 0; s < nslots; ++s)
        if (images[s] && !same_table(images[s]->table(), table))
            throw StructuralError("substitution image over a different generator table");

    // Group terms by their substituted part so each distinct product of image
    // powers is formed once and multiplied against the sum of kept parts.
    std::map<Monomial, GradedPoly> groups;
    for (const auto& [m, c] : p.terms()) {
        Monomial mapped, kept;
        for (std::size_t s = 0; s < nslots; ++s)
            (images[s] ? mapped : kept)[s] = m[s];
        auto it = groups.try_emplace(mapped, table).first;
        it->second.add_term(kept, c);
    }

    std::vector<std::vector<GradedPoly>> powers(nslots);
    auto image_power = [&] (std::size_t s, unsigned e) -> const GradedPoly& {
        auto& cache = powers[s];
        if (cache.empty())
            cache.push_back(GradedPoly::constant(table, 1));
        while (cache.size() <= e)
            cache.push_back(multiply(cache.back(), *images[s], bound));
        return cache[e];
    };

    GradedPoly result(table);
    for (const auto& [mapped, kept] : groups) {
        GradedPoly factor = GradedPoly::constant(table, 1);
        for (std::size_t s = 0; s < nslots; ++s)
            if (mapped[s] != 0)
                factor = multiply(factor, image_power(s, mapped[s]), bound);
        result += multiply(kept, factor, bound);
    }
    return result;
}

SlotMap identity_slot_map()
{
    SlotMap m{};
    for (std::size_t s = 0; s < kMaxSlots; ++s)
        m[s] = int(s);
    return m;
}

GradedPoly remap_slots(const GradedPoly& p, const SlotMap& target)
{
    GradedPoly r(p.table());
    const std::size_t nslots = p.table()->slot_count();
    for (const auto& [m, c] : p.terms()) {
        Monomial out;
        bool dropped = false;
        for (std::size_t s = 0; s < nslots && !dropped; ++s) {
            if (m[s] == 0)
                continue;
            if (target[s] < 0) {
                dropped = true;
                continue;
            }
            const unsigned e = unsigned(out[std::size_t(target[s])]) + m[s];
            if (e > 0xFFu)
                throw StructuralError("monomial exponent overflow (exponents are limited to 255)");
            out[std::size_t(target[s])] = static_cast<std::uint8_t>(e);
        }
        if (!dropped)
            r.add_term(out, c);
    }
    return r;
}

GradedPoly retable(const GradedPoly& p, const TablePtr& target)
{
    const auto& src = *p.table();
    if (same_table(p.table(), target))
        return GradedPoly(target) += p;
    SlotMap map{};
    map.fill(-1);
    for (std::size_t b = 0; b < src.base_count(); ++b) {
        auto j = target->find_base(src.base(b).name);
        if (!j || target->base(*j).weight != src.base(b).weight)
            throw StructuralError("base-ring generator '" + src.base(b).name + "' has no counterpart in the target ring");
        map[src.base_slot(b)] = int(target->base_slot(*j));
    }
    for (std::size_t h = 0; h < src.hopf_count(); ++h) {
        auto j = target->find_hopf(src.hopf(h).name);
        if (!j || target->hopf(*j).weight != src.hopf(h).weight)
            throw StructuralError("Hopf generator '" + src.hopf(h).name + "' has no counterpart in the target algebra");
        for (int leg = 1; leg <= kMaxLegs; ++leg)
            map[src.hopf_slot(h, leg)] = int(target->hopf_slot(*j, leg));
    }
    for (int v = 0; v < kMaxVars; ++v)
        map[src.var_slot(v)] = int(target->var_slot(v));

    GradedPoly r(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial out;
        for (std::size_t s = 0; s < src.slot_count(); ++s)
            if (m[s] != 0)
                out[std::size_t(map[s])] = m[s];
        r.add_term(out, c);
    }
    return r;
}

namespace {

std::optional<std::size_t> resolve_slot_name(const GeneratorTable& table, const std::string& name)
{
    const auto at = name.find('@');
    const std::string base = name.substr(0, at);
    int leg = 1;
    if (at != std::string::npos) {
        try {
            leg = std::stoi(name.substr(at + 1));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (leg < 1 || leg > kMaxLegs)
            return std::nullopt;
    }
    if (auto h = table.find_hopf(base))
        return table.hopf_slot(*h, leg);
    if (at != std::string::npos)
        return std::nullopt;
    if (auto b = table.find_base(base))
        return table.base_slot(*b);
    const auto vars = default_var_names();
    for (int v = 0; v < kMaxVars; ++v)
        if (vars[std::size_t(v)] == base)
            return table.var_slot(v);
    return std::nullopt;
}

} // namespace

namespace {

int inferred_legs(const GradedPoly& p)
{
    int legs = 0;
    const auto& t = *p.table();
    for (const auto& [m, c] : p.terms())
        for (std::size_t s = 0; s < t.slot_count(); ++s)
            if (m[s] != 0) {
                const SlotInfo info = t.describe(s);
                if (info.kind == SlotKind::Hopf)
                    legs = std::max(legs, info.leg);
            }
    return legs;
}

} // namespace

GradedPoly eval_hom(const GradedPoly& p, const std::map<std::string, GradedPoly>& images, WeightBound bound,
                    Homogeneity homogeneity)
{
    const auto& table = *p.table();
    SlotImages slots(table.slot_count(), nullptr);
    for (const auto& [name, image] : images) {
        auto s = resolve_slot_name(table, name);
        if (!s)
            throw StructuralError("unknown generator '" + name + "' in homomorphism images");
        if (homogeneity == Homogeneity::Require && !image.is_homogeneous(table.slot_weight(*s)))
            throw PreconditionError("image of '" + name + "' is not homogeneous of weight " +
                                    std::to_string(table.slot_weight(*s)));
        slots[*s] = &image;
    }
    for (const auto& [m, c] : p.terms())
        for (std::size_t s = 0; s < table.slot_count(); ++s)
            if (m[s] != 0 && !slots[s])
                throw MissingImageError(table.slot_name(s, inferred_legs(p), default_var_names()));
    return substitute_slots(p, slots, bound);
}


std::string to_string(const GradedPoly& p, const PrintStyle& style)
{
    if (p.is_zero())
        return "0";
    const auto& t = *p.table();
    const int legs = style.legs >= 0 ? style.legs : inferred_legs(p);

    std::vector<std::pair<int, const GradedPoly::TermMap::value_type*>> order;
    for (const auto& term : p.terms())
        order.emplace_back(p.weight(term.first), &term);
    // weight ascending, then earlier slots first
    std::stable_sort(order.begin(), order.end(), [] (const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        return a.second->first > b.second->first;
    });

    std::ostringstream out;
    bool first = true;
    for (const auto& [w, term] : order) {
        const auto& [m, c] = *term;
        std::string factors;
        for (std::size_t s = 0; s < t.slot_count(); ++s) {
            if (m[s] == 0)
                continue;
            if (!factors.empty())
                factors += '*';
            factors += t.slot_name(s, legs, style.var_names);
            if (m[s] > 1)
                factors += "^" + std::to_string(m[s]);
        }
        const bool negative = c < 0;
        const Rational mag = abs(c);
        std::string body;
        if (factors.empty())
            body = to_string(mag);
        else if (mag == 1)
            body = factors;
        else
            body = to_string(mag) + "*" + factors;
        if (first)
            out << (negative ? "-" : "") << body;
        else
            out << (negative ? " - " : " + ") << body;
        first = false;
    }
    return out.str();
}

} // namespace fglh
