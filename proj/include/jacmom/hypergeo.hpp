#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jacmom/combinatorics.hpp"
#include "jacmom/errors.hpp"
#include "jacmom/rational.hpp"

namespace jacmom {

struct HypSeries {
    std::vector<Rational> top;
    std::vector<Rational> bottom;
    Rational argument;
};

// Termination index: smallest -a over nonpositive-integer top parameters a.
inline std::optional<long> termination_index(const HypSeries& s) {
    std::optional<long> best;
    for (const auto& a : s.top) {
        if (!a.is_nonpositive_integer()) continue;
        long cand = (-a).to_long();
        if (!best || cand < *best) best = cand;
    }
    return best;
}

// Exact value of a terminating hypergeometric series.  Bottom-parameter
// poles at or before the termination index raise PoleBeforeTermination;
// poles past it never enter the sum.
inline Rational evaluate_terminating(const HypSeries& s) {
    auto N = termination_index(s);
    if (!N) throw NotTerminating("evaluate_terminating: no nonpositive-integer top parameter");
    Rational total(1), term(1);
    for (long k = 1; k <= *N; ++k) {
        Rational num(1), den(1);
        for (const auto& a : s.top) num *= a + Rational(k - 1);
        for (const auto& b : s.bottom) {
            Rational f = b + Rational(k - 1);
            if (f.is_zero())
                throw PoleBeforeTermination("evaluate_terminating: bottom pole at index " +
                                            std::to_string(k));
            den *= f;
        }
        term *= num / den * s.argument / Rational(k);
        total += term;
    }
    return total;
}

// Saalschuetz balance: 1 + sum(top) == sum(bottom).
inline bool is_one_balanced(const HypSeries& s) {
    Rational t(1), b(0);
    for (const auto& a : s.top) t += a;
    for (const auto& c : s.bottom) b += c;
    return t == b;
}

// 2F1(-N, b; c; 1) = (c-b)_N / (c)_N.
inline Rational gauss_2F1_unity(long N, const Rational& b, const Rational& c) {
    if (N < 0) throw std::invalid_argument("gauss_2F1_unity: negative N");
    Rational den = pochhammer(c, N);
    if (den.is_zero()) throw PoleError("gauss_2F1_unity: (c)_N vanishes");
    return pochhammer(c - b, N) / den;
}

// Both sides of the terminating one-balanced 4F3 summation specialized to
// p = m + 1/2, d = 2m.  Grid points where the fourth top parameter
// truncates the series before index n-h are outside the identity's domain
// and raise PoleBeforeTermination.
inline std::pair<Rational, Rational> carlitz_4F3(long n, long h, long j, const Rational& m) {
    if (n < 1 || h < 1 || h > n || j < 0 || j >= h)
        throw std::invalid_argument("carlitz_4F3: need 1 <= h <= n and 0 <= j < h");
    Rational w = m * Rational(2) - Rational(n) + Rational(h) - Rational(2 * j) - Rational(1);
    if (w.is_nonpositive_integer() && (-w).to_long() < n - h)
        throw PoleBeforeTermination("carlitz_4F3: series truncates before index n-h");
    HypSeries s;
    s.top = {Rational(h - n), m + Rational(h - j), m + Rational(h - j) + Rational(1, 2), w};
    s.bottom = {m - Rational(n - h + j), m - Rational(n - h + j) + Rational(1, 2),
                m * Rational(2) + Rational(2 * (h - j))};
    s.argument = Rational(1);
    Rational lhs = evaluate_terminating(s);

    Rational d1 = m - Rational(j) - Rational(1, 2);
    Rational d2 = pochhammer(m * Rational(2) - Rational(2 * (n - h + j)) - Rational(1), n - h);
    if (d1.is_zero() || d2.is_zero()) throw PoleError("carlitz_4F3: right side pole");
    Rational rhs = (m - Rational(n - h + j) - Rational(1, 2)) / d1 * factorial(2 * n) /
                   factorial(n + h) / d2;
    if ((n - h) % 2) rhs = -rhs;
    return {lhs, rhs};
}

// Both sides of the quadratic 4F3 -> 3F2 contiguous reduction.
inline std::pair<Rational, Rational> chu_reduction_pair(long N, const Rational& a,
                                                        const Rational& c, const Rational& e) {
    if (N < 0) throw std::invalid_argument("chu_reduction_pair: negative N");
    HypSeries lhs_series;
    lhs_series.top = {Rational(-N), a - c + Rational(N), c / Rational(2),
                      (c + Rational(1)) / Rational(2)};
    lhs_series.bottom = {Rational(1) + a - e, e / Rational(2), (e + Rational(1)) / Rational(2)};
    lhs_series.argument = Rational(1);
    Rational lhs = evaluate_terminating(lhs_series);

    Rational den = pochhammer(Rational(1) + a - e, N) * pochhammer(e, N);
    if (den.is_zero()) throw PoleError("chu_reduction_pair: prefactor pole");
    Rational pref = pochhammer(Rational(1) + a - c - e, N) * pochhammer(e - c, N) / den;

    HypSeries rhs_series;
    rhs_series.top = {Rational(-N), a - c + Rational(N), c};
    rhs_series.bottom = {c + e - a - Rational(N), e + Rational(N)};
    rhs_series.argument = Rational(1);
    Rational rhs = pref * evaluate_terminating(rhs_series);
    return {lhs, rhs};
}

}  // namespace jacmom
