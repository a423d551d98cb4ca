#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "jacmom/errors.hpp"
#include "jacmom/rational.hpp"

namespace jacmom {

// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, long n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    Rational out(1);
    for (long i = 0; i < n; ++i) out *= a + Rational(i);
    return out;
}

// Rising factorial split into its zero factors and the product of the rest.
inline std::pair<long, Rational> pochhammer_split_zeros(const Rational& a, long n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    long zeros = 0;
    Rational out(1);
    for (long i = 0; i < n; ++i) {
        Rational f = a + Rational(i);
        if (f.is_zero())
            ++zeros;
        else
            out *= f;
    }
    return {zeros, out};
}

inline Rational factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(z);
}

inline Rational binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative row");
    if (k < 0 || k > n) return Rational(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(z);
}

// Gamma(a+offset)/Gamma(a) as an exact rational.  For offset >= 0 this is
// (a)_offset, which vanishes when Gamma(a) sits at a pole that the shifted
// value escapes (the reciprocal-of-Gamma-vanishes convention).  For
// offset < 0 it is 1/(a+offset)_{-offset}; a pole surviving in the
// numerator position raises PoleError.
inline Rational gamma_ratio(const Rational& a, long offset) {
    if (offset >= 0) return pochhammer(a, offset);
    Rational p = pochhammer(a + Rational(offset), -offset);
    if (p.is_zero())
        throw PoleError("gamma_ratio(" + a.str() + ", " + std::to_string(offset) + ")");
    return Rational(1) / p;
}

// sum_{j=0}^{b} (-1)^j j^a C(b,j), with 0^0 = 1.
inline Rational alternating_power_sum(long a, long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("alternating_power_sum: negative argument");
    Rational total(0);
    for (long j = 0; j <= b; ++j) {
        Rational jp = (j == 0 && a == 0) ? Rational(1) : Rational(j).pow(a);
        Rational term = jp * binomial(b, j);
        if (j % 2) total -= term; else total += term;
    }
    return total;
}

// Coefficients of the generalized Laguerre polynomial L^{(1)}_degree in
// ascending powers: L^{(1)}_{h-1}(x) = sum_l ((-x)^l/l!) C(h, l+1).
inline std::vector<Rational> laguerre_1_coeffs(long degree) {
    if (degree < 0) throw std::invalid_argument("laguerre_1_coeffs: negative degree");
    long h = degree + 1;
    std::vector<Rational> out;
    out.reserve(h);
    for (long l = 0; l < h; ++l) {
        Rational c = binomial(h, l + 1) / factorial(l);
        out.push_back(l % 2 ? -c : c);
    }
    return out;
}

// gamma_a = sum over v_1 + 2 v_2 + ... + a v_a = a of
// (sum v_i)!/(prod v_i!) * prod (-beta_i)^{v_i}; the Toeplitz-band inverse
// of the sequence {1, beta_1, beta_2, ...}.
inline Rational bell_gamma(const std::vector<Rational>& betas) {
    const long a = static_cast<long>(betas.size());
    if (a == 0) return Rational(1);
    Rational total(0);
    std::vector<long> counts(a + 1, 0);
    std::function<void(long, long)> rec = [&](long i, long rem) {
        if (i > a) {
            if (rem != 0) return;
            long parts = 0;
            for (long idx = 1; idx <= a; ++idx) parts += counts[idx];
            Rational term = factorial(parts);
            for (long idx = 1; idx <= a; ++idx) {
                term /= factorial(counts[idx]);
                term *= (-betas[idx - 1]).pow(counts[idx]);
            }
            total += term;
            return;
        }
        for (long v = 0; v * i <= rem; ++v) {
            counts[i] = v;
            rec(i + 1, rem - v * i);
        }
        counts[i] = 0;
    };
    rec(1, a);
    return total;
}

}  // namespace jacmom
