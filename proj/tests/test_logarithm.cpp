#include "fglh/error.hpp"
#include "fglh/logarithm.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace fglh;
using testutil::Ctx;

namespace {

constexpr int T = 6;

const CheckResult& named(const std::vector<CheckResult>& checks, const std::string& name)
{
    for (const auto& c : checks)
        if (c.name == name)
            return c;
    throw std::runtime_error("no check named " + name);
}

TruncSeries counit_image(const HopfPtr& H, const TruncSeries& s)
{
    return map_coefficients(s, CoefficientMap::structure(H, 1, StructureMap::Epsilon));
}

} // namespace

TEST_CASE("logarithm of the linear group")
{
    const Ctx k = testutil::qt();
    const HopfPtr H = testutil::primitive_hopf(k);
    const FormalGroupH lin = testutil::flin(k, H);

    CHECK(omega_from_derivative(lin) == omega_from_coefficients(lin));
    CHECK(omega_series(lin) == testutil::one_var(k, k.c(1), 1, T - 1));
    CHECK(log_series(lin) == testutil::one_var(k, k.x(), 1, T));

    const LogData log = extract_cocycle(lin);
    CHECK(log.passed());
    CHECK(log.cocycle == TensorElem(2, k.gen(0, 1) * k.gen(0, 2)));
    CHECK(reconstruct(lin).passed());
}

TEST_CASE("trivializing the linear group")
{
    const Ctx k = testutil::qt();
    const HopfPtr H = testutil::primitive_hopf(k);
    const FormalGroupH lin = testutil::flin(k, H);
    const GradedPoly t = k.gen(0);

    const IsoResult iso = trivialize(lin);
    REQUIRE_FALSE(iso.refused());
    CHECK(iso.passed());
    CHECK(iso.hom->phi == testutil::one_var(k, k.x() - Rational(1, 2) * t * t, 1, T));
    CHECK(iso.hom->target.series() == testutil::fgl_series(k, k.x() + k.y()));

    // the opposite sign maps the additive group into 𝔉_lin, not 𝔉_lin to the additive group
    const TruncSeries plus = testutil::one_var(k, k.x() + Rational(1, 2) * t * t, 1, T);
    CHECK(all_passed(check_hom(HopfFglHom{additive_group(H, T), lin, plus})));
    CHECK_FALSE(all_passed(check_hom(HopfFglHom{lin, additive_group(H, T), plus})));
}

TEST_CASE("isomorphisms between linear groups")
{
    const Ctx k = testutil::qt();
    const HopfPtr H = testutil::primitive_hopf(k);
    const GradedPoly tt = k.gen(0, 1) * k.gen(0, 2), t = k.gen(0);

    const IsoResult iso = iso_linear(H, TensorElem(2, tt), TensorElem(2, 3 * tt), T);
    REQUIRE_FALSE(iso.refused());
    CHECK(iso.passed());
    CHECK(iso.hom->phi == testutil::one_var(k, k.x() + t * t, 1, T));

    CHECK_THROWS_AS(iso_linear(H, TensorElem(2, tt), TensorElem(2, k.gen(0, 1)), T), PreconditionError);

    const Ctx u = testutil::qtu();
    const HopfPtr Hu = testutil::primitive_hopf(u);
    CHECK_THROWS_AS(linear_group(Hu, TensorElem(2, u.gen(0, 1) * u.gen(1, 2)), T), PreconditionError);
}

TEST_CASE("refusal for a non-coboundary cocycle")
{
    const Ctx k = testutil::qtu();
    const HopfPtr H = testutil::primitive_hopf(k);
    const TensorElem c(2, k.gen(0, 1) * k.gen(1, 2));
    const FormalGroupH G(H, testutil::fgl_series(k, c.body() + k.x() + k.y()));

    CHECK(check_associativity(G).passed());
    const LogData log = extract_cocycle(G);
    CHECK(log.cocycle == c);

    const IsoResult iso = trivialize(G);
    CHECK(iso.refused());
    REQUIRE(iso.coboundary.certificate);
    CHECK(verify_certificate(*H, c, *iso.coboundary.certificate));
    CHECK(reconstruct(G).passed());
}

TEST_CASE("conjugate groups have zero cocycle and the planted logarithm")
{
    const Ctx k = testutil::qt();
    const HopfPtr H = testutil::primitive_hopf(k);
    const GradedPoly t = k.gen(0), x = k.x();
    const TruncSeries g = testutil::one_var(k, x + t * x * x + Rational(1, 3) * t * t * x * x * x, 1, T);
    const FormalGroupH G = testutil::conjugate_group(H, g);

    REQUIRE(check_axioms(G).passed());
    CHECK(log_series(G) == g);
    const LogData log = extract_cocycle(G);
    CHECK(log.passed());
    CHECK(log.cocycle.body().is_zero());
    CHECK(reconstruct(G).passed());

    const IsoResult iso = trivialize(G);
    REQUIRE_FALSE(iso.refused());
    CHECK(iso.passed());
    CHECK(iso.hom->phi == g);
}

TEST_CASE("classical logarithm of the multiplicative law")
{
    const Ctx k = testutil::qt();
    const HopfPtr H = testutil::primitive_hopf(k);
    const FormalGroupH m = trivial_extension(testutil::f_mult(k), H);

    GradedPoly expected(k.table);
    GradedPoly xp = k.c(1);
    for (int n = 1; n <= T; ++n) {
        xp = xp * k.x();
        expected += Rational(n % 2 ? 1 : -1, n) * xp;
    }
    CHECK(log_series(m) == testutil::one_var(k, expected, 1, T));
    CHECK(extract_cocycle(m).cocycle.body().is_zero());
    CHECK(reconstruct(m).passed());
}

TEST_CASE("the counit image of the logarithm is a logarithm of the base law")
{
    const Ctx k = testutil::qab();
    const HopfPtr H = HopfAlgebra::create(testutil::qab_presentation(k), T);
    const GradedPoly a = k.gen(0), b = k.gen(1), x = k.x();

    std::vector<FormalGroupH> groups{
        FormalGroupH(H, testutil::fgl_series(k, k.gen(0, 1) * k.gen(0, 2) + x + k.y())),
        testutil::conjugate_group(H, testutil::one_var(k, x + a * x * x + (b - a * a) * x * x * x, 1, T)),
        trivial_extension(testutil::f_mult(k), H),
    };
    for (const auto& G : groups) {
        REQUIRE(check_axioms(G).passed());
        const LogData log = extract_cocycle(G);
        CHECK(log.passed());
        CHECK(reconstruct(G).passed());
        CHECK(all_passed(check_cocycle(*H, log.cocycle)));

        const TruncSeries eg = counit_image(H, log.g);
        const BaseGroupResult base = base_group(G);
        const TruncSeries F = base.F.series().truncated(eg.degree());
        const TruncSeries lhs = substitute(eg, {F});
        const TruncSeries rhs = relabel(eg, {0, 1, 2, 3}, {0, -1, -1, -1}, 0, 2) +
                                relabel(eg, {0, 1, 2, 3}, {1, -1, -1, -1}, 0, 2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("linear groups are formal groups exactly for cocycles")
{
    const Ctx k = testutil::qt();
    const HopfPtr H = testutil::primitive_hopf(k);
    std::mt19937 rng(11);
    const std::vector<std::size_t> slots{k.table->hopf_slot(0, 1), k.table->hopf_slot(0, 2)};
    int cocycles = 0, others = 0;
    for (int trial = 0; trial < 40; ++trial) {
        GradedPoly p = testutil::random_poly(rng, k.table, slots, 3, 2);
        const TensorElem half(2, p);
        const TensorElem c(2, p + swap_legs(half).body());
        const bool is_cocycle = all_passed(check_cocycle(*H, c));
        (is_cocycle ? cocycles : others)++;
        CHECK(check_axioms(linear_group(H, c, 4)).passed() == is_cocycle);
    }
    // planted symmetric cocycles d(tⁿ) as well
    for (unsigned n = 2; n <= 4; ++n) {
        const TensorElem c(2, cobar_differential(H->presentation(), power(k.gen(0), n, std::nullopt)));
        CHECK(check_axioms(linear_group(H, c, 4)).passed());
        ++cocycles;
    }
    CHECK(cocycles > 0);
    CHECK(others > 0);
}
