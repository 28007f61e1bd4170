#pragma once

// Independent reference computations for the series and Hopf tests. Everything
// here works on dense coefficient vectors or closed forms and never calls the
// sparse engine, so it can be used to freeze expected values.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace oracle {

using Q = mpq_class;
/// Coefficients of x^0..x^N.
using Dense = std::vector<Q>;

inline Dense zeros(std::size_t n)
{
    return Dense(n + 1, Q(0));
}

inline Dense mul(const Dense& a, const Dense& b)
{
    const std::size_t n = a.size() - 1;
    Dense r = zeros(n);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

/// a(b(x)) by Horner; b must have zero constant term.
inline Dense compose(const Dense& a, const Dense& b)
{
    const std::size_t n = a.size() - 1;
    Dense r = zeros(n);
    for (std::size_t k = n + 1; k-- > 0;) {
        r = mul(r, b);
        r[0] += a[k];
    }
    return r;
}

/// Long division 1/a.
inline Dense reciprocal(const Dense& a)
{
    const std::size_t n = a.size() - 1;
    Dense r = zeros(n);
    r[0] = 1 / a[0];
    for (std::size_t k = 1; k <= n; ++k) {
        Q acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            acc += a[j] * r[k - j];
        r[k] = -acc / a[0];
    }
    return r;
}

inline Q factorial(unsigned k)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Q(f);
}

inline Q binomial(unsigned n, unsigned k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Q(b);
}

/// exp(x) - 1
inline Dense expm1(std::size_t n)
{
    Dense r = zeros(n);
    for (std::size_t k = 1; k <= n; ++k)
        r[k] = 1 / factorial(unsigned(k));
    return r;
}

/// log(1 + x)
inline Dense log1p(std::size_t n)
{
    Dense r = zeros(n);
    for (std::size_t k = 1; k <= n; ++k)
        r[k] = Q(k % 2 == 1 ? 1 : -1, k);
    return r;
}

/// Lagrange inversion: [x^n] s^{-1} = (1/n) [x^{n-1}] (x / s(x))^n.
inline Dense lagrange_inverse(const Dense& s)
{
    const std::size_t n = s.size() - 1;
    Dense shifted = zeros(n); // s(x)/x
    for (std::size_t k = 1; k <= n; ++k)
        shifted[k - 1] = s[k];
    const Dense phi = reciprocal(shifted); // x/s(x)
    Dense r = zeros(n);
    Dense pw = zeros(n);
    pw[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        pw = mul(pw, phi);
        r[k] = pw[k - 1] / Q(k);
    }
    return r;
}

/// Catalan number C_n = binom(2n, n) / (n + 1).
inline Q catalan(unsigned n)
{
    return binomial(2 * n, n) / Q(n + 1);
}

} // namespace oracle
