#include "fglh/cobar.hpp"

#include "fglh/error.hpp"

#include <map>

namespace fglh {

namespace {

GradedPoly homogeneous_part(const GradedPoly& p, int w)
{
    GradedPoly out(p.table());
    for (const auto& [m, c] : p.terms())
        if (p.weight(m) == w)
            out.add_term(m, c);
    return out;
}

GradedPoly counit_leg1(const HopfPresentation& h, const GradedPoly& p)
{
    return apply_on_leg(h, p, 1, 1, StructureMap::Epsilon, std::nullopt);
}

/// Equations are indexed by 2-leg monomials of dλ (kind 0) and base-ring
/// monomials of ε(λ) (kind 1).
using RowKey = std::pair<int, Monomial>;

struct WeightSolve {
    std::optional<GradedPoly> solution;
    std::optional<InconsistencyCertificate> certificate;
    std::optional<GradedPoly> integral_solution;
};

std::optional<GradedPoly> integral_solution(const TablePtr& tp, const std::vector<Monomial>& unknowns,
                                            const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b)
{
    const std::size_t n = unknowns.size();
    std::vector<std::vector<mpz_class>> Z;
    std::vector<mpz_class> zb;
    for (std::size_t i = 0; i < A.size(); ++i) {
        mpz_class l = b[i].get_den();
        for (const auto& v : A[i])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        std::vector<mpz_class> row;
        for (const auto& v : A[i])
            row.push_back(mpz_class(v.get_num() * (l / v.get_den())));
        Z.push_back(std::move(row));
        zb.push_back(mpz_class(b[i].get_num() * (l / b[i].get_den())));
    }
    const auto x = integer_solve(std::move(Z), std::move(zb), n);
    if (!x)
        return std::nullopt;
    GradedPoly lambda(tp);
    for (std::size_t j = 0; j < n; ++j)
        lambda.add_term(unknowns[j], Rational((*x)[j]));
    return lambda;
}

WeightSolve solve_weight(const HopfPresentation& h, const GradedPoly& target, int w, bool integrality)
{
    const TablePtr& tp = h.table;
    const std::vector<Monomial> unknowns = monomials_of_weight(*tp, w);
    const std::size_t n = unknowns.size();

    std::vector<GradedPoly> d, e;
    std::map<RowKey, std::size_t> rows;
    auto row_of = [&] (int kind, const Monomial& m) { return rows.try_emplace({kind, m}, rows.size()).first->second; };
    for (const Monomial& m : unknowns) {
        const GradedPoly lam = GradedPoly::monomial(tp, m);
        d.push_back(cobar_differential(h, lam));
        e.push_back(counit_leg1(h, lam));
        for (const auto& [mm, c] : d.back().terms())
            row_of(0, mm);
        for (const auto& [mm, c] : e.back().terms())
            row_of(1, mm);
    }
    for (const auto& [mm, c] : target.terms())
        row_of(0, mm);

    const std::size_t r = rows.size();
    // augmented [A | b | I]; the identity block records row combinations for certificates
    const std::size_t width = n + 1 + r;
    std::vector<std::vector<Rational>> M(r, std::vector<Rational>(width, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [mm, c] : d[j].terms())
            M[rows.at({0, mm})][j] = c;
        for (const auto& [mm, c] : e[j].terms())
            M[rows.at({1, mm})][j] = c;
    }
    for (const auto& [mm, c] : target.terms())
        M[rows.at({0, mm})][n] = c;
    for (std::size_t i = 0; i < r; ++i)
        M[i][n + 1 + i] = 1;

    WeightSolve out;
    if (integrality) {
        std::vector<std::vector<Rational>> A(r);
        std::vector<Rational> b(r);
        for (std::size_t i = 0; i < r; ++i) {
            A[i].assign(M[i].begin(), M[i].begin() + std::ptrdiff_t(n));
            b[i] = M[i][n];
        }
        out.integral_solution = integral_solution(tp, unknowns, A, b);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < r; ++col) {
        std::size_t p = rank;
        while (p < r && M[p][col] == 0)
            ++p;
        if (p == r)
            continue;
        std::swap(M[p], M[rank]);
        const Rational inv = 1 / M[rank][col];
        for (auto& v : M[rank])
            v *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == rank || M[i][col] == 0)
                continue;
            const Rational f = M[i][col];
            for (std::size_t k = 0; k < width; ++k)
                M[i][k] -= f * M[rank][k];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    for (std::size_t i = rank; i < r; ++i) {
        if (M[i][n] == 0)
            continue;
        InconsistencyCertificate cert{w, GradedPoly(tp), GradedPoly(tp), 0};
        for (const auto& [key, idx] : rows) {
            const Rational& y = M[i][n + 1 + idx];
            if (y == 0)
                continue;
            (key.first == 0 ? cert.phi : cert.psi).add_term(key.second, y);
        }
        cert.value = pair(cert.phi, target);
        out.certificate = std::move(cert);
        return out;
    }

    GradedPoly lambda(tp);
    for (std::size_t i = 0; i < rank; ++i)
        lambda.add_term(unknowns[pivot_col[i]], M[i][n]);
    out.solution = std::move(lambda);
    return out;
}

void enumerate(const GeneratorTable& t, const std::vector<std::size_t>& slots, std::size_t k, int remaining, Monomial& m,
               std::vector<Monomial>& out)
{
    if (k == slots.size()) {
        if (remaining == 0)
            out.push_back(m);
        return;
    }
    const int w = t.slot_weight(slots[k]);
    for (int e = 0; e * w <= remaining && e <= 255; ++e) {
        m[slots[k]] = std::uint8_t(e);
        enumerate(t, slots, k + 1, remaining - e * w, m, out);
    }
    m[slots[k]] = 0;
}

} // namespace

GradedPoly cobar_differential(const HopfPresentation& h, const GradedPoly& lambda, WeightBound bound)
{
    GradedPoly d = apply_on_leg(h, lambda, 1, 1, StructureMap::Delta, bound);
    d -= lambda;
    d -= relabel_legs(lambda, {0, 2, 3, 3});
    return bound ? truncate_weight(d, *bound) : d;
}

std::vector<CheckResult> check_cocycle(const HopfAlgebra& H, const TensorElem& c)
{
    if (c.legs() != 2)
        throw StructuralError("a cobar 2-cochain has two legs");
    const GradedPoly& body = c.body();
    GradedPoly closed = apply_on_leg(H, c, 2, StructureMap::Delta).body();
    closed += relabel_legs(body, {0, 2, 3, 3});
    closed -= apply_on_leg(H, c, 1, StructureMap::Delta).body();
    closed -= body;
    return {
        residual_check("cocycle.closed", closed, PrintStyle{3, default_var_names()}),
        residual_check("cocycle.counit.left", apply_on_leg(H, c, 2, StructureMap::Epsilon).body(),
                       PrintStyle{1, default_var_names()}),
        residual_check("cocycle.counit.right", apply_on_leg(H, c, 1, StructureMap::Epsilon).body(),
                       PrintStyle{1, default_var_names()}),
    };
}

CoboundaryResult coboundary_solve(const HopfAlgebra& H, const TensorElem& c, int degree, bool integrality)
{
    const std::vector<CheckResult> cocycle = check_cocycle(H, c);
    for (const auto& r : cocycle)
        if (!r.passed())
            throw PreconditionError("coboundary_solve needs a 2-cocycle; " + r.name + " fails with residual " +
                                    r.residual_text);

    CoboundaryResult result;
    result.degree = degree;
    GradedPoly witness(H.table());
    std::optional<GradedPoly> integral_witness;
    if (integrality)
        integral_witness = GradedPoly(H.table());
    for (int w = 0; w <= degree; ++w) {
        WeightSolve s = solve_weight(H.presentation(), homogeneous_part(c.body(), w), w, integrality);
        if (s.certificate) {
            result.certificate = std::move(s.certificate);
            if (integrality)
                result.integral = false;
            return result;
        }
        witness += *s.solution;
        if (integral_witness) {
            if (s.integral_solution)
                *integral_witness += *s.integral_solution;
            else
                integral_witness.reset();
        }
    }
    result.coboundary = true;
    result.witness = std::move(witness);
    if (integrality) {
        result.integral = integral_witness.has_value();
        result.integral_witness = std::move(integral_witness);
    }
    return result;
}

bool verify_certificate(const HopfAlgebra& H, const TensorElem& c, const InconsistencyCertificate& cert)
{
    const HopfPresentation& h = H.presentation();
    for (const Monomial& m : monomials_of_weight(*H.table(), cert.weight)) {
        const GradedPoly lam = GradedPoly::monomial(H.table(), m);
        if (pair(cert.phi, cobar_differential(h, lam)) + pair(cert.psi, counit_leg1(h, lam)) != 0)
            return false;
    }
    const Rational v = pair(cert.phi, c.body());
    return v != 0 && v == cert.value;
}

std::vector<Monomial> monomials_of_weight(const GeneratorTable& t, int weight)
{
    std::vector<std::size_t> slots;
    for (std::size_t b = 0; b < t.base_count(); ++b)
        slots.push_back(t.base_slot(b));
    for (std::size_t g = 0; g < t.hopf_count(); ++g)
        slots.push_back(t.hopf_slot(g, 1));
    std::vector<Monomial> out;
    Monomial m;
    enumerate(t, slots, 0, weight, m, out);
    return out;
}

std::optional<std::vector<mpz_class>> integer_solve(std::vector<std::vector<mpz_class>> A, std::vector<mpz_class> b,
                                                    std::size_t n)
{
    const std::size_t r = A.size();
    // unimodular column operations bring A to lower echelon form A·U; U is tracked
    std::vector<std::vector<mpz_class>> U(n, std::vector<mpz_class>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
        U[j][j] = 1;
    auto col_axpy = [&] (std::size_t dst, std::size_t src, const mpz_class& q) {
        for (auto& row : A)
            row[dst] -= q * row[src];
        for (auto& row : U)
            row[dst] -= q * row[src];
    };
    auto col_swap = [&] (std::size_t a, std::size_t b2) {
        for (auto& row : A)
            std::swap(row[a], row[b2]);
        for (auto& row : U)
            std::swap(row[a], row[b2]);
    };

    std::vector<std::optional<std::size_t>> pivot_of_row(r);
    std::size_t k = 0;
    for (std::size_t i = 0; i < r && k < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
            while (A[i][j] != 0) {
                const mpz_class q = A[i][k] / A[i][j];
                col_axpy(k, j, q);
                col_swap(k, j);
            }
        }
        if (A[i][k] != 0)
            pivot_of_row[i] = k++;
    }

    std::vector<mpz_class> y(n, 0);
    for (std::size_t i = 0; i < r; ++i) {
        mpz_class s = b[i];
        for (std::size_t j = 0; j < n; ++j)
            if (!(pivot_of_row[i] && *pivot_of_row[i] == j))
                s -= A[i][j] * y[j];
        if (pivot_of_row[i]) {
            const mpz_class& p = A[i][*pivot_of_row[i]];
            if (s % p != 0)
                return std::nullopt;
            y[*pivot_of_row[i]] = s / p;
        } else if (s != 0) {
            return std::nullopt;
        }
    }
    std::vector<mpz_class> x(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            x[i] += U[i][j] * y[j];
    return x;
}

Rational pair(const GradedPoly& functional, const GradedPoly& p)
{
    Rational s = 0;
    for (const auto& [m, c] : functional.terms())
        s += c * p.coefficient(m);
    return s;
}

} // namespace fglh
