#include "fglh/generators.hpp"

#include "fglh/error.hpp"

#include <cctype>
#include <set>

namespace fglh {

namespace {

bool is_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

} // namespace

bool is_reserved_name(std::string_view name)
{
    return name == "x" || name == "y" || name == "z" || name == "w";
}

std::vector<std::string> default_var_names()
{
    return {"x", "y", "z", "w"};
}

GeneratorTable::GeneratorTable(std::vector<Generator> generators) : generators_(std::move(generators))
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        (generators_[i].kind == GenKind::BaseRing ? base_ : hopf_).push_back(i);
    for (std::size_t b = 0; b < base_.size(); ++b)
        weights_[base_slot(b)] = static_cast<std::uint8_t>(base(b).weight);
    for (int leg = 1; leg <= kMaxLegs; ++leg)
        for (std::size_t h = 0; h < hopf_.size(); ++h)
            weights_[hopf_slot(h, leg)] = static_cast<std::uint8_t>(hopf(h).weight);
    for (int v = 0; v < kMaxVars; ++v)
        weights_[var_slot(v)] = 1;
}

std::shared_ptr<const GeneratorTable> GeneratorTable::create(std::vector<Generator> generators)
{
    std::set<std::string> seen;
    std::size_t nb = 0, nh = 0;
    for (const auto& g : generators) {
        if (!is_identifier(g.name))
            throw StructuralError("invalid generator name '" + g.name + "'");
        if (is_reserved_name(g.name))
            throw StructuralError("'" + g.name + "' is reserved for series variables");
        if (!seen.insert(g.name).second)
            throw StructuralError("duplicate generator '" + g.name + "'");
        if (g.weight < 1 || g.weight > 255)
            throw StructuralError("generator '" + g.name + "' needs a weight in 1..255");
        (g.kind == GenKind::BaseRing ? nb : nh) += 1;
    }
    if (nb + kMaxLegs * nh + kMaxVars > kMaxSlots)
        throw StructuralError("too many generators: " + std::to_string(nb) + " base-ring and " + std::to_string(nh) +
                              " Hopf generators exceed the " + std::to_string(kMaxSlots) + "-slot monomial layout");
    return std::shared_ptr<const GeneratorTable>(new GeneratorTable(std::move(generators)));
}

SlotInfo GeneratorTable::describe(std::size_t slot) const
{
    const std::size_t nb = base_.size(), nh = hopf_.size();
    if (slot < nb)
        return {SlotKind::BaseRing, slot, 0};
    if (slot < nb + kMaxLegs * nh) {
        const std::size_t r = slot - nb;
        return {SlotKind::Hopf, r % nh, int(r / nh) + 1};
    }
    return {SlotKind::Variable, slot - nb - kMaxLegs * nh, 0};
}

std::optional<std::size_t> GeneratorTable::find_base(std::string_view name) const
{
    for (std::size_t i = 0; i < base_.size(); ++i)
        if (base(i).name == name)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> GeneratorTable::find_hopf(std::string_view name) const
{
    for (std::size_t i = 0; i < hopf_.size(); ++i)
        if (hopf(i).name == name)
            return i;
    return std::nullopt;
}

std::string GeneratorTable::slot_name(std::size_t slot, int legs, const std::vector<std::string>& var_names) const
{
    const SlotInfo info = describe(slot);
    switch (info.kind) {
    case SlotKind::BaseRing:
        return base(info.index).name;
    case SlotKind::Hopf:
        if (legs < 2 && info.leg == 1)
            return hopf(info.index).name;
        return hopf(info.index).name + "@" + std::to_string(info.leg);
    case SlotKind::Variable:
        if (info.index < var_names.size())
            return var_names[info.index];
        return "v" + std::to_string(info.index);
    }
    return {};
}

bool same_table(const TablePtr& a, const TablePtr& b)
{
    return a == b || (a && b && *a == *b);
}

} // namespace fglh
