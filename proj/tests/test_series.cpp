#include "fglh/error.hpp"
#include "fglh/series.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace fglh;
using testutil::Ctx;

namespace {

constexpr int T = 6;

TruncSeries from_dense(const Ctx& k, const oracle::Dense& d, int degree)
{
    GradedPoly body = k.zero();
    for (std::size_t i = 0; i < d.size(); ++i)
        body += d[i] * power(k.x(), unsigned(i), std::nullopt);
    return TruncSeries::from_body(body, 1, 0, degree);
}

oracle::Dense to_dense(const TruncSeries& s)
{
    oracle::Dense d = oracle::zeros(std::size_t(s.degree()));
    for (int i = 0; i <= s.degree(); ++i)
        d[std::size_t(i)] = s.coefficient(i).body().constant_term();
    return d;
}

/// Random 1-variable series over ℚ[t] with the given constant term.
TruncSeries random_series(std::mt19937& rng, const Ctx& k, const Rational& constant, bool with_linear_unit = false)
{
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3), tp(0, 2);
    GradedPoly body = k.c(constant);
    for (int i = 1; i <= T; ++i) {
        const int j = tp(rng);
        if (i + j <= T)
            body += Rational(num(rng), den(rng)) * power(k.gen(0), unsigned(j), std::nullopt) *
                    power(k.x(), unsigned(i), std::nullopt);
    }
    if (with_linear_unit)
        body += k.x();
    return TruncSeries::from_body(body, 1, 1, T);
}

} // namespace

TEST_CASE("series arithmetic examples")
{
    const Ctx k = testutil::qt();
    const TruncSeries x = TruncSeries::variable(k.table, 1, 1, T, 0);
    const TruncSeries one = k.series(k.c(1), 1, 1, T);
    const TruncSeries t = k.series(k.gen(0), 1, 1, T);
    CHECK((one + x) * (one - x) == one - x * x);
    CHECK(to_string(t * x) == "t*x");
    CHECK(x * x * x * x * x * x * x == k.series(k.zero(), 1, 1, T));
    CHECK((x + t).coefficient(0) == TensorElem(1, k.gen(0)));

    const TruncSeries other = TruncSeries::variable(k.table, 2, 1, T, 0);
    CHECK_THROWS_AS(x + other, StructuralError);
    CHECK_THROWS_AS(k.series(k.y(), 1, 1, T), StructuralError);
    CHECK_THROWS_AS(k.series(k.gen(0, 2), 1, 1, T), StructuralError);
}

TEST_CASE("truncation is by total degree")
{
    const Ctx k = testutil::qt();
    const GradedPoly body = power(k.gen(0), 4, std::nullopt) * power(k.x(), 3, std::nullopt) + k.gen(0) * k.x();
    CHECK(k.series(body, 1, 1, T) == k.series(k.gen(0) * k.x(), 1, 1, T));
}

TEST_CASE("map_coefficients examples")
{
    const Ctx k = testutil::qt();
    const HopfPtr H = testutil::primitive_hopf(k);
    const TruncSeries s = k.series(k.gen(0) * k.x(), 1, 1, T);
    const TruncSeries d = map_coefficients(s, CoefficientMap::structure(H, 1, StructureMap::Delta));
    CHECK(d.legs() == 2);
    CHECK(d == k.series((k.gen(0, 1) + k.gen(0, 2)) * k.x(), 1, 2, T));
    CHECK(map_coefficients(s, CoefficientMap::structure(H, 1, StructureMap::Antipode)) == -s);
    CHECK(map_coefficients(d, CoefficientMap::multiply_legs(1)) == Rational(2) * s);
    const TruncSeries e = map_coefficients(s + k.series(k.x(), 1, 1, T), CoefficientMap::counit_all(H));
    CHECK(e.legs() == 0);
    CHECK(e == k.series(k.x(), 1, 0, T));
}

TEST_CASE("map_coefficients commutes with ring operations")
{
    const Ctx k = testutil::qab();
    const HopfPtr H = HopfAlgebra::create(testutil::qab_presentation(k), T);
    const CoefficientMap delta = CoefficientMap::structure(H, 1, StructureMap::Delta);
    const CoefficientMap anti = CoefficientMap::structure(H, 1, StructureMap::Antipode);
    const std::vector<std::size_t> slots{k.table->hopf_slot(0, 1), k.table->hopf_slot(1, 1), k.table->var_slot(0)};
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const TruncSeries a = k.series(testutil::random_poly(rng, k.table, slots, 4, 2), 1, 1, T);
        const TruncSeries b = k.series(testutil::random_poly(rng, k.table, slots, 4, 2), 1, 1, T);
        CHECK(map_coefficients(a * b, delta) == map_coefficients(a, delta) * map_coefficients(b, delta));
        CHECK(map_coefficients(a + b, anti) == map_coefficients(a, anti) + map_coefficients(b, anti));
        CHECK(map_coefficients(a * b, anti) == map_coefficients(a, anti) * map_coefficients(b, anti));
    }
}

TEST_CASE("substitute examples")
{
    const Ctx k = testutil::qt();
    const TruncSeries x = TruncSeries::variable(k.table, 1, 1, T, 0);
    const TruncSeries one = k.series(k.c(1), 1, 1, T);
    const TruncSeries x2 = x * x;
    CHECK(substitute(x2, {x + x2}) == x2 + Rational(2) * x2 * x + x2 * x2);
    // a nonzero weight-1 constant t is fine: its powers climb in weight
    const TruncSeries t = k.series(k.gen(0), 1, 1, T);
    CHECK(substitute(x * x, {x + t}) == x * x + Rational(2) * t * x + t * t);
    try {
        (void)substitute(x, {x + one});
        FAIL("expected DivergenceError");
    } catch (const DivergenceError& e) {
        CHECK(std::string(e.what()).find("weight-0 constant term") != std::string::npos);
    }
}

TEST_CASE("two-variable substitution and relabel")
{
    const Ctx k = testutil::qt();
    const TruncSeries x = TruncSeries::variable(k.table, 2, 1, T, 0), y = TruncSeries::variable(k.table, 2, 1, T, 1);
    const TruncSeries f = x + y + k.series(k.gen(0), 2, 1, T) * x * y;
    CHECK(substitute(f, {y, x}) == f);
    CHECK(set_variable_zero(f, 1) == x);
    const TruncSeries g = relabel(f, {0, 1, 2, 3}, {1, 0, -1, -1}, 1, 2);
    CHECK(g == f);
}

TEST_CASE("substitution is associative on random series")
{
    const Ctx k = testutil::qt();
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const TruncSeries a = random_series(rng, k, 0);
        const TruncSeries b = random_series(rng, k, 0);
        const TruncSeries c = random_series(rng, k, 0);
        CHECK(substitute(substitute(a, {b}), {c}) == substitute(a, {substitute(b, {c})}));
    }
}

TEST_CASE("dense oracle agrees with substitute and reciprocal")
{
    const Ctx k = testutil::rational_only();
    const oracle::Dense ex = oracle::expm1(T), lg = oracle::log1p(T);
    CHECK(to_dense(substitute(from_dense(k, lg, T), {from_dense(k, ex, T)})) == oracle::compose(lg, ex));
    oracle::Dense one_plus = ex;
    one_plus[0] = 1;
    CHECK(to_dense(reciprocal(from_dense(k, one_plus, T))) == oracle::reciprocal(one_plus));
}

TEST_CASE("partial derivative and integral")
{
    const Ctx k = testutil::qt();
    const TruncSeries x = TruncSeries::variable(k.table, 1, 1, T, 0);
    const TruncSeries t = k.series(k.gen(0), 1, 1, T);
    const TruncSeries d = partial_derivative(t * x * x * x, 0);
    CHECK(d.degree() == T - 1);
    CHECK(d == Rational(3) * (t * x * x).truncated(T - 1));
    const TruncSeries i = formal_integral(x);
    CHECK(i.degree() == T + 1);
    CHECK(i.coefficient(2) == TensorElem(1, k.c(Rational(1, 2))));
    CHECK_THROWS_AS(formal_integral(x.with_scalars(Scalars::Integer)), PreconditionError);
    CHECK_THROWS(formal_integral(TruncSeries::variable(k.table, 2, 1, T, 0)));
}

TEST_CASE("reciprocal examples")
{
    const Ctx k = testutil::qt();
    const TruncSeries x = TruncSeries::variable(k.table, 1, 1, T, 0);
    const TruncSeries one = k.series(k.c(1), 1, 1, T);
    const TruncSeries t = k.series(k.gen(0), 1, 1, T);
    // 1/(1 + t + x): coefficient of t^a x^b is (-1)^{a+b} C(a+b, a)
    const TruncSeries r = reciprocal(one + t + x);
    for (unsigned a = 0; a <= T; ++a)
        for (unsigned b = 0; a + b <= T; ++b) {
            Monomial m;
            m[k.table->hopf_slot(0, 1)] = std::uint8_t(a);
            m[k.table->var_slot(0)] = std::uint8_t(b);
            const Rational sign = (a + b) % 2 == 0 ? 1 : -1;
            CHECK(r.body().coefficient(m) == sign * oracle::binomial(a + b, a));
        }
    try {
        (void)reciprocal(Rational(2) * one + x);
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("leading coefficient not a unit") != std::string::npos);
    }
    CHECK_THROWS_AS(reciprocal(x), PreconditionError);
}

TEST_CASE("reciprocal, derivative and integral round trips on random inputs")
{
    const Ctx k = testutil::qt();
    const Ctx q = testutil::rational_only();
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const TruncSeries s = random_series(rng, k, 1);
        const TruncSeries one = k.series(k.c(1), 1, 1, T);
        CHECK(s * reciprocal(s) == one);

        oracle::Dense d = oracle::zeros(T);
        std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
        for (auto& c : d)
            c = Rational(num(rng), den(rng));
        const TruncSeries p = from_dense(q, d, T);
        CHECK(partial_derivative(formal_integral(p), 0) == p);
        const TruncSeries back = formal_integral(partial_derivative(p, 0));
        d[0] = 0;
        CHECK(back == from_dense(q, d, T));
    }
}

TEST_CASE("compositional inverse examples")
{
    const Ctx q = testutil::rational_only();
    const TruncSeries lg = from_dense(q, oracle::log1p(T), T);
    CHECK(comp_inverse(lg) == from_dense(q, oracle::expm1(T), T));
    CHECK(to_dense(comp_inverse(lg)) == oracle::lagrange_inverse(oracle::log1p(T)));

    // x + t x^2 inverts to Σ (-1)^{n} C_n t^n x^{n+1}
    const Ctx k = testutil::qt();
    const TruncSeries x = TruncSeries::variable(k.table, 1, 1, T, 0);
    const TruncSeries t = k.series(k.gen(0), 1, 1, T);
    const TruncSeries inv = comp_inverse(x + t * x * x);
    GradedPoly expected = k.zero();
    for (unsigned n = 0; 2 * n + 1 <= T; ++n)
        expected += (n % 2 == 0 ? 1 : -1) * oracle::catalan(n) * power(k.gen(0), n, std::nullopt) *
                    power(k.x(), n + 1, std::nullopt);
    CHECK(inv == k.series(expected, 1, 1, T));
    CHECK(to_string(inv) == "x - t*x^2 + 2*t^2*x^3");

    CHECK_THROWS_AS(comp_inverse(x * x), PreconditionError);
}

TEST_CASE("compositional inverse round trips on random inputs")
{
    const Ctx k = testutil::qt();
    std::mt19937 rng(29);
    const TruncSeries x = TruncSeries::variable(k.table, 1, 1, T, 0);
    for (int trial = 0; trial < 50; ++trial) {
        TruncSeries s = random_series(rng, k, 0);
        s = s - k.series(s.coefficient(1).body() * k.x(), 1, 1, T) + x;
        const TruncSeries inv = comp_inverse(s);
        CHECK(substitute(s, {inv}) == x);
        CHECK(substitute(inv, {s}) == x);
    }
}
