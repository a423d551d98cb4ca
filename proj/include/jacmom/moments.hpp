#pragma once

#include <utility>

#include "jacmom/coefficients.hpp"
#include "jacmom/combinatorics.hpp"
#include "jacmom/errors.hpp"
#include "jacmom/exppoly.hpp"
#include "jacmom/params.hpp"

namespace jacmom {

// E tr(J_{t/d}^n) = stationary + time_part(t); time_part(0) + stationary = m.
struct FiniteMoment {
    long n;
    HalfIntegerParams params;
    ExpPoly time_part;
    Rational stationary;

    double eval(double t) const { return stationary.to_double() + time_part.eval(t); }
};

// Decay rate nu_{h,j}(d) = d*h + h*(h - 2j - 1) of the (h, j) spectral block,
// divided by d for the t/d clock.
inline Rational moment_rate(long h, long j, long d) {
    return Rational(d * h + h * (h - 2 * j - 1), d);
}

// Time-dependent part of E tr(J_{t/d}^n): sum over (h, j, k) of exact
// Pochhammer-ratio terms attached to rate nu_{h,j}(d)/d.  Degenerate
// parameter choices are resolved by zero-order bookkeeping per factor
// group: net numerator zeros kill the term (the vanishing-reciprocal
// convention), net denominator zeros have no direction-independent limit
// and raise PoleError.
inline ExpPoly finite_time_part(long n, const HalfIntegerParams& pr) {
    if (n < 1) throw std::invalid_argument("finite_time_part: need n >= 1");
    const long d = pr.d;
    const long m = pr.m;
    const Rational p = pr.p;
    const Rational q = pr.q;
    ExpPoly out;
    for (long h = 1; h <= n; ++h) {
        for (long j = 0; j < h; ++j) {
            Rational rate = moment_rate(h, j, d);
            Rational acc(0);
            for (long k = 0; k <= n - h; ++k) {
                const long kp = n - h + j - k;
                auto [mz, mprod] = pochhammer_split_zeros(Rational(m - kp), n);
                if (mz > 0) continue;
                auto [pz1, pp1] = pochhammer_split_zeros(p - Rational(kp), kp - j);
                auto [pz2, pp2] = pochhammer_split_zeros(p + Rational(h - j), n - h + j - kp);
                auto [qz, qp] = pochhammer_split_zeros(q - Rational(j), h);
                auto [dn1, dp1] = pochhammer_split_zeros(Rational(d - 2 * j - 1), 1);
                auto [dn2, dp2] = pochhammer_split_zeros(Rational(d + 2 * h - 2 * j - 1), 1);
                auto [dd1, dq1] = pochhammer_split_zeros(Rational(d + h - 2 * j - 1), 1);
                auto [dd2, dq2] = pochhammer_split_zeros(Rational(d + h - j), n - kp);
                auto [dd3, dq3] = pochhammer_split_zeros(Rational(d - kp - j - 1), kp + 1);
                const long dnum_zeros = dn1 + dn2;
                const long dden_zeros = dd1 + dd2 + dd3;
                const long pq_zeros = pz1 + pz2 + qz;
                if (dden_zeros > dnum_zeros)
                    throw PoleError("finite_time_part: direction-dependent pole at " + pr.str());
                if (pq_zeros > 0 && dden_zeros > 0)
                    throw PoleError("finite_time_part: mixed-direction pole at " + pr.str());
                if (pq_zeros + dnum_zeros - dden_zeros > 0) continue;
                Rational g = dp1 * dp2 / (dq1 * dq2 * dq3) * mprod * qp * pp1 * pp2;
                Rational coef = binomial(n, h) / factorial(n) * binomial(n - h, k) *
                                binomial(h - 1, j) * g;
                if ((n - h - k + j) % 2) coef = -coef;
                acc += coef;
            }
            out.add_term(acc, rate, 0);
        }
    }
    return out;
}

inline FiniteMoment finite_moment(long n, const HalfIntegerParams& pr) {
    ExpPoly tp = finite_time_part(n, pr);
    Rational stationary = Rational(pr.m) - tp.eval_exact_at_zero();
    return FiniteMoment{n, pr, std::move(tp), std::move(stationary)};
}

// Normalized limit moment of the free Jacobi stationary-plus-transient
// decomposition: stationary + time_part(t), with stationary fixed by the
// t = 0 value 1.
struct LimitMoment {
    long n;
    LimitParams params;
    ExpPoly time_part;
    Rational stationary;

    double eval(double t) const { return stationary.to_double() + time_part.eval(t); }
};

// sum_h (-1)^{h-1} (1/h) sum_l ((2h)^l / l!) c_{n,h,l} t^l e^{-ht}.
inline ExpPoly limit_time_part(long n, const LimitParams& lp, const CoeffTable& table) {
    if (n < 1) throw std::invalid_argument("limit_time_part: need n >= 1");
    if (!(table.params() == lp))
        throw std::invalid_argument("limit_time_part: table built for different parameters");
    ExpPoly out;
    for (long h = 1; h <= n; ++h) {
        for (long l = 0; l < h; ++l) {
            Rational c = table.at(n, h, l);
            Rational coef = Rational(2 * h).pow(l) / factorial(l) / Rational(h) * c;
            if ((h - 1) % 2) coef = -coef;
            out.add_term(coef, Rational(h), static_cast<int>(l));
        }
    }
    return out;
}

inline Rational limit_stationary(long n, const LimitParams& lp, const CoeffTable& table) {
    return Rational(1) - limit_time_part(n, lp, table).eval_exact_at_zero();
}

inline LimitMoment limit_moment(long n, const LimitParams& lp, const CoeffTable& table) {
    ExpPoly tp = limit_time_part(n, lp, table);
    Rational stationary = Rational(1) - tp.eval_exact_at_zero();
    return LimitMoment{n, lp, std::move(tp), std::move(stationary)};
}

// Closed form of the normalized limit moment in the symmetric case
// lambda = 1, theta = 1/2: arcsine stationary moments C(2n,n)/4^n plus a
// Laguerre transient.
inline LimitMoment symmetric_case_limit_moment(long n) {
    if (n < 1) throw std::invalid_argument("symmetric_case_limit_moment: need n >= 1");
    LimitParams lp(Rational(1), Rational(1, 2));
    ExpPoly tp;
    Rational two_pow = Rational(2).pow(2 * n - 1);
    for (long h = 1; h <= n; ++h) {
        auto lag = laguerre_1_coeffs(h - 1);
        for (long l = 0; l < h; ++l) {
            Rational coef =
                binomial(2 * n, n - h) / two_pow / Rational(h) * lag[l] * Rational(2 * h).pow(l);
            tp.add_term(coef, Rational(h), static_cast<int>(l));
        }
    }
    Rational stationary = binomial(2 * n, n) / Rational(4).pow(n);
    return LimitMoment{n, lp, std::move(tp), std::move(stationary)};
}

// Closed form of E tr(J_{t/(2m)}^n) for the half-dimension geometry
// p = m + 1/2, d = 2m, i.e. (r, s) = (1/2, -1/2).
inline FiniteMoment half_dim_finite_moment(long n, long m) {
    if (n < 1 || m < 1) throw std::invalid_argument("half_dim_finite_moment: need n, m >= 1");
    HalfIntegerParams pr(m, Rational(m) + Rational(1, 2), 2 * m);
    Rational stationary(0);
    for (long h = 0; h < n; ++h) {
        Rational den = pochhammer(Rational(2 * m - h), n);
        if (den.is_zero()) throw PoleError("half_dim_finite_moment: stationary pole");
        Rational term = binomial(n - 1, h) * pochhammer(Rational(m - h), n) *
                        pochhammer(Rational(m - h) + Rational(1, 2), n) / den;
        if (h % 2) stationary -= term; else stationary += term;
    }
    stationary /= factorial(n);

    ExpPoly tp;
    Rational two_pow = Rational(2).pow(2 * n);
    for (long h = 1; h <= n; ++h) {
        for (long j = 0; j < h; ++j) {
            Rational rate(2 * m * h + h * (h - 1) - 2 * h * j, 2 * m);
            Rational coef = binomial(2 * n, n - h) / two_pow * binomial(h - 1, j) *
                            Rational(2 * m - 2 * j - 1) / Rational(2 * m + h - 2 * j - 1) *
                            pochhammer(Rational(2 * m - j), h) / factorial(h);
            if (j % 2) coef = -coef;
            tp.add_term(coef, rate, 0);
        }
    }
    return FiniteMoment{n, pr, std::move(tp), std::move(stationary)};
}

}  // namespace jacmom
