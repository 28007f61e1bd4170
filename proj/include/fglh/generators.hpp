#pragma once

#include "fglh/kernels.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fglh {

/// Maximum number of tensor legs any element may carry (H^⊗3).
inline constexpr int kMaxLegs = 3;
/// Maximum number of formal series variables.
inline constexpr int kMaxVars = 4;

enum class GenKind { BaseRing, Hopf };

struct Generator {
    std::string name;
    int weight = 1;
    GenKind kind = GenKind::BaseRing;

    bool operator==(const Generator&) const = default;
};

enum class SlotKind { BaseRing, Hopf, Variable };

/// What a single exponent slot of a monomial stands for.
struct SlotInfo {
    SlotKind kind;
    std::size_t index; // generator index within its kind, or variable index
    int leg;           // 1..kMaxLegs for Hopf slots, 0 otherwise
};

/// Ordered generator list of one algebra context.
///
/// The exponent layout of every monomial over this table is
///   [base-ring generators][H copy on leg 1][leg 2][leg 3][series variables]
/// so base-ring symbols are shared across legs (tensoring is over R) while each
/// H-generator owns one slot per leg. Series variables are weight-1 slots.
class GeneratorTable {
public:
    /// Validates uniqueness, positive weights, reserved names and layout capacity.
    static std::shared_ptr<const GeneratorTable> create(std::vector<Generator> generators);

    const std::vector<Generator>& generators() const noexcept { return generators_; }
    std::size_t base_count() const noexcept { return base_.size(); }
    std::size_t hopf_count() const noexcept { return hopf_.size(); }
    const Generator& base(std::size_t i) const { return generators_[base_.at(i)]; }
    const Generator& hopf(std::size_t i) const { return generators_[hopf_.at(i)]; }

    std::size_t base_slot(std::size_t i) const noexcept { return i; }
    std::size_t hopf_slot(std::size_t i, int leg) const noexcept
    {
        return base_.size() + std::size_t(leg - 1) * hopf_.size() + i;
    }
    std::size_t var_slot(int v) const noexcept { return base_.size() + kMaxLegs * hopf_.size() + std::size_t(v); }
    std::size_t slot_count() const noexcept { return var_slot(kMaxVars); }

    SlotInfo describe(std::size_t slot) const;
    const ExponentBlock& slot_weights() const noexcept { return weights_; }
    int slot_weight(std::size_t slot) const noexcept { return weights_[slot]; }

    std::optional<std::size_t> find_base(std::string_view name) const;
    std::optional<std::size_t> find_hopf(std::string_view name) const;

    /// Human name of a slot: "q", "t@2" (or "t" when legs < 2), or a variable name.
    std::string slot_name(std::size_t slot, int legs, const std::vector<std::string>& var_names) const;

    bool operator==(const GeneratorTable& o) const { return generators_ == o.generators_; }

private:
    explicit GeneratorTable(std::vector<Generator> generators);

    std::vector<Generator> generators_;
    std::vector<std::size_t> base_;
    std::vector<std::size_t> hopf_;
    ExponentBlock weights_{};
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

/// Same table object, or equal contents.
bool same_table(const TablePtr& a, const TablePtr& b);

/// Names that denote series variables and therefore cannot be generators.
bool is_reserved_name(std::string_view name);

std::vector<std::string> default_var_names();

} // namespace fglh
