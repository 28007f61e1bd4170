#pragma once

#include "fglh/generators.hpp"
#include "fglh/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fglh {

/// Exponent vector over a GeneratorTable's slot layout. Ordered lexicographically
/// by slot, i.e. by (leg block, generator index, exponent).
struct Monomial {
    ExponentBlock exps{};

    std::uint8_t operator[](std::size_t slot) const noexcept { return exps[slot]; }
    std::uint8_t& operator[](std::size_t slot) noexcept { return exps[slot]; }
    bool is_one() const noexcept;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

/// Product of two monomials; throws StructuralError if an exponent exceeds 255.
Monomial operator*(const Monomial& a, const Monomial& b);

/// Optional weight bound: monomials of weight above it are discarded.
using WeightBound = std::optional<int>;

/// Sparse polynomial with exact rational coefficients over a generator table.
/// No zero coefficients are stored, so equality is structural.
class GradedPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit GradedPoly(TablePtr table);

    static GradedPoly constant(TablePtr table, const Rational& c);
    static GradedPoly slot(TablePtr table, std::size_t slot, const Rational& c = 1);
    static GradedPoly monomial(TablePtr table, const Monomial& m, const Rational& c = 1);

    const TablePtr& table() const noexcept { return table_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of the empty monomial: the weight-0 scalar part.
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    int weight(const Monomial& m) const;
    /// Largest / smallest monomial weight; nullopt for the zero polynomial.
    std::optional<int> max_weight() const;
    std::optional<int> min_weight() const;
    /// True if every monomial has weight exactly w (the zero polynomial is homogeneous of any weight).
    bool is_homogeneous(int w) const;
    bool is_integral() const;

    /// Accumulates c·m, erasing the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly& operator*=(const Rational& c);
    GradedPoly operator-() const;

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
    friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);

    bool operator==(const GradedPoly& o) const;

private:
    void require_same_table(const GradedPoly& o) const;

    TablePtr table_;
    TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };

/// Exact ring operation, optionally truncated.
GradedPoly poly_arith(const GradedPoly& a, const GradedPoly& b, PolyOp op, WeightBound bound = std::nullopt);

GradedPoly multiply(const GradedPoly& a, const GradedPoly& b, WeightBound bound);
GradedPoly power(const GradedPoly& a, unsigned k, WeightBound bound);

/// Removes every monomial of weight > w.
GradedPoly truncate_weight(const GradedPoly& p, int w);

/// Per-slot images for a simultaneous substitution; a null entry keeps the slot as is.
using SlotImages = std::vector<const GradedPoly*>;

/// Applies the algebra homomorphism that sends slot s to *images[s] (identity on
/// null entries) and fixes scalars. All images must live over p's table.
GradedPoly substitute_slots(const GradedPoly& p, const SlotImages& images, WeightBound bound);

/// Linear slot relabeling: the exponent at slot s moves to slot target[s] (exponents
/// that land on the same slot add up). A target of -1 sets that slot to zero, dropping
/// every term in which it occurs.
using SlotMap = std::array<int, kMaxSlots>;
SlotMap identity_slot_map();
GradedPoly remap_slots(const GradedPoly& p, const SlotMap& target);

/// Moves p onto another table whose generators include p's by name (same kind and weight).
GradedPoly retable(const GradedPoly& p, const TablePtr& target);

enum class Homogeneity { Require, Waive };

/// Algebra-homomorphism extension keyed by generator name ("q", "t", "t@2", "x").
/// Every generator occurring in p needs an image; with Homogeneity::Require each
/// image must be weight-homogeneous of its generator's weight.
GradedPoly eval_hom(const GradedPoly& p, const std::map<std::string, GradedPoly>& images, WeightBound bound,
                    Homogeneity homogeneity = Homogeneity::Require);

struct PrintStyle {
    /// Leg arity of the context; below 2 leg-1 generators print without "@1".
    /// A negative value infers it from the highest leg that occurs.
    int legs = -1;
    std::vector<std::string> var_names = default_var_names();
};

std::string to_string(const GradedPoly& p, const PrintStyle& style = {});

} // namespace fglh
