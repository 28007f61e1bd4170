#pragma once

#include "fglh/fgl.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fglh {

/// Parses one expression over `table` in a context with `legs` tensor legs.
/// H-generators need an explicit `@leg` when legs > 1; legs = 0 admits only
/// base-ring generators. `line` and `column` locate the text in its file for
/// error messages.
GradedPoly parse_expression(std::string_view text, const TablePtr& table, int legs, int line = 1, int column = 1);

struct HopfSection {
    std::string name;
    TablePtr table; ///< ring generators followed by this section's H-generators
    HopfPresentation presentation;
};

struct FglSection {
    std::string name;
    std::string hopf;
    std::map<std::pair<int, int>, GradedPoly> coefficients; ///< (i, j) → A_{i,j}, 2 legs
    std::map<int, GradedPoly> theta;                        ///< i → Θ_i, 1 leg
};

struct Workspace {
    int degree = 6;
    std::vector<Generator> ring;
    std::vector<HopfSection> hopfs;
    std::vector<FglSection> fgls;

    const HopfSection* find_hopf(std::string_view name) const;
    const FglSection* find_fgl(std::string_view name) const;
    bool operator==(const Workspace& o) const;
};

/// Throws ParseError with the line and column of the offending text.
Workspace parse_workspace(std::string_view text);

/// Canonical text: fixed section order, coefficients sorted, zero entries dropped.
std::string print_workspace(const Workspace& ws);

/// 𝔉 = Σ A_{i,j} xⁱyʲ and Θ = Σ Θ_i xⁱ at the given truncation.
TruncSeries fgl_body(const FglSection& f, const TablePtr& table, int degree);
std::optional<TruncSeries> fgl_theta(const FglSection& f, const TablePtr& table, int degree);

} // namespace fglh
