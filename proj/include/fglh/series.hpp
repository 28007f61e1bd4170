#pragma once

#include "fglh/hopf.hpp"

#include <array>
#include <functional>
#include <map>
#include <span>
#include <string>

namespace fglh {

/// Whether a series' scalars are meant to stay integral (a ℤ-coefficient context)
/// or range over ℚ. Both are stored as rationals.
enum class Scalars { Rational, Integer };

using VarExponents = std::array<int, kMaxVars>;

/// Power series in 1..4 formal variables with coefficients in H^⊗legs, truncated
/// at total degree `degree`, where total degree = variable degree + coefficient weight.
///
/// The body is a single GradedPoly whose variable slots carry the series variables,
/// so truncation is a plain weight bound.
class TruncSeries {
public:
    TruncSeries(TablePtr table, int nvars, int legs, int degree, Scalars scalars = Scalars::Rational);

    /// Validates slot usage against (nvars, legs) and truncates to `degree`.
    static TruncSeries from_body(GradedPoly body, int nvars, int legs, int degree,
                                 Scalars scalars = Scalars::Rational);
    static TruncSeries variable(TablePtr table, int nvars, int legs, int degree, int var);
    static TruncSeries constant(const TensorElem& c, int nvars, int degree);

    const TablePtr& table() const noexcept { return body_.table(); }
    int nvars() const noexcept { return nvars_; }
    int legs() const noexcept { return legs_; }
    int degree() const noexcept { return degree_; }
    Scalars scalars() const noexcept { return scalars_; }
    const GradedPoly& body() const noexcept { return body_; }
    bool is_zero() const noexcept { return body_.is_zero(); }

    /// Coefficient of x^e[0] y^e[1] ... as an element of H^⊗legs.
    TensorElem coefficient(const VarExponents& e) const;
    TensorElem coefficient(int i) const { return coefficient(VarExponents{i, 0, 0, 0}); }
    TensorElem coefficient(int i, int j) const { return coefficient(VarExponents{i, j, 0, 0}); }
    /// All nonzero coefficients keyed by variable exponents.
    std::map<VarExponents, TensorElem> coefficients() const;

    /// Same series seen at a smaller (or equal) degree bound.
    TruncSeries truncated(int degree) const;
    TruncSeries with_scalars(Scalars s) const;

    bool operator==(const TruncSeries& o) const;

private:
    GradedPoly body_;
    int nvars_;
    int legs_;
    int degree_;
    Scalars scalars_;
};

std::string to_string(const TruncSeries& s, std::vector<std::string> var_names = default_var_names());

/// Splits a series body into (variable exponents → coefficient body).
std::map<VarExponents, GradedPoly> split_by_variables(const GradedPoly& body);

enum class SeriesOp { Add, Sub, Mul };

TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b, SeriesOp op);
TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a);
TruncSeries operator*(const Rational& c, const TruncSeries& a);

/// A map applied to every coefficient of a series: structure maps on one leg, μ,
/// endomorphisms per leg, the full counit, leg swap, or scalar extension to ℚ.
class CoefficientMap {
public:
    using Body = std::function<GradedPoly(const GradedPoly& body, int legs, WeightBound bound)>;

    static CoefficientMap structure(HopfPtr hopf, int leg, StructureMap f);
    static CoefficientMap multiply_legs(int first);
    static CoefficientMap endomorphism(EndoMap f, int leg);
    /// f applied on every leg at once, e.g. (n)⊗(n).
    static CoefficientMap endomorphism_each_leg(EndoMap f);
    /// ε on every leg; the result has 0 legs.
    static CoefficientMap counit_all(HopfPtr hopf);
    static CoefficientMap swap_legs();
    static CoefficientMap to_rationals();

    int result_legs(int legs) const;
    Scalars result_scalars(Scalars s) const { return rationalize_ ? Scalars::Rational : s; }
    GradedPoly apply(const GradedPoly& body, int legs, WeightBound bound) const { return fn_(body, legs, bound); }

private:
    CoefficientMap(Body fn, std::function<int(int)> legs, bool rationalize = false)
        : fn_(std::move(fn)), legs_(std::move(legs)), rationalize_(rationalize)
    {
    }

    Body fn_;
    std::function<int(int)> legs_;
    bool rationalize_;
};

TruncSeries map_coefficients(const TruncSeries& s, const CoefficientMap& m);

/// Moves legs and variables: leg l goes to leg_to[l], variable v to var_to[v]
/// (-1 sets a variable to zero). The result has the given arities.
TruncSeries relabel(const TruncSeries& s, const std::array<int, kMaxLegs + 1>& leg_to,
                    const std::array<int, kMaxVars>& var_to, int legs, int nvars);

/// Sets variable `var` to zero.
TruncSeries set_variable_zero(const TruncSeries& s, int var);

/// s(args[0], args[1], ...). Each argument's weight-0 scalar constant must vanish,
/// so its k-th power has total degree at least k and the composite is exact up to
/// min(s.degree, args.degree). Throws DivergenceError otherwise.
TruncSeries substitute(const TruncSeries& s, std::span<const TruncSeries> args);
TruncSeries substitute(const TruncSeries& s, std::initializer_list<TruncSeries> args);

/// ∂s/∂var; the result is exact up to degree - 1.
TruncSeries partial_derivative(const TruncSeries& s, int var);

/// ∫₀ˣ for one-variable series over ℚ; exact up to degree + 1.
TruncSeries formal_integral(const TruncSeries& s);

/// 1/s when s's weight-0 scalar constant equals 1.
TruncSeries reciprocal(const TruncSeries& s);

/// Compositional inverse of a one-variable series with zero constant coefficient
/// and a unit linear coefficient, solved one total degree at a time.
TruncSeries comp_inverse(const TruncSeries& s);

} // namespace fglh
