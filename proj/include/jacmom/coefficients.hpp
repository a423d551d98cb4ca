#pragma once

#include <atomic>
#include <cassert>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "jacmom/combinatorics.hpp"
#include "jacmom/dpoly.hpp"
#include "jacmom/errors.hpp"
#include "jacmom/hypergeo.hpp"
#include "jacmom/params.hpp"
#include "jacmom/symmetric.hpp"

namespace jacmom {

enum class Route { division, symmetric, recurrence, closed_form };

inline std::string route_name(Route r) {
    switch (r) {
        case Route::division: return "division";
        case Route::symmetric: return "symmetric";
        case Route::recurrence: return "recurrence";
        case Route::closed_form: return "closed-form";
    }
    return "?";
}

inline Route route_from_name(const std::string& s) {
    if (s == "division") return Route::division;
    if (s == "symmetric") return Route::symmetric;
    if (s == "recurrence") return Route::recurrence;
    if (s == "closed-form") return Route::closed_form;
    throw std::invalid_argument("unknown route '" + s + "'");
}

// Limit coefficients c_{n,h,l} for one (lambda, theta), 1 <= h <= n <= n_max,
// 0 <= l <= h-1, each tagged with the route that produced it.
class CoeffTable {
public:
    struct Entry {
        Rational value;
        Route route;
    };

    CoeffTable(LimitParams params, long n_max)
        : params_(std::move(params)), n_max_(n_max) {}

    const LimitParams& params() const { return params_; }
    long n_max() const { return n_max_; }

    void set(long n, long h, long l, Rational value, Route route) {
        entries_[{n, h, l}] = Entry{std::move(value), route};
    }

    bool contains(long n, long h, long l) const { return entries_.count({n, h, l}) > 0; }

    const Rational& at(long n, long h, long l) const {
        auto it = entries_.find({n, h, l});
        if (it == entries_.end())
            throw MissingCoefficient("coefficient (" + std::to_string(n) + "," +
                                     std::to_string(h) + "," + std::to_string(l) +
                                     ") not in table");
        return it->second.value;
    }

    const std::map<std::tuple<long, long, long>, Entry>& entries() const { return entries_; }

private:
    LimitParams params_;
    long n_max_;
    std::map<std::tuple<long, long, long>, Entry> entries_;
};

struct RootLists {
    std::vector<AffineRoot> y;  // numerator roots, length 2n + 2h + 2
    std::vector<AffineRoot> z;  // denominator roots, length n + 2h + l + 3
};

// Ordered root lists of the numerator and denominator polynomials in d.
inline RootLists root_lists(long n, long h, long l, const LimitParams& lp) {
    if (n < 1 || h < 1 || h > n || l < 0 || l >= h)
        throw std::invalid_argument("root_lists: need 1 <= h <= n and 0 <= l < h");
    const Rational lam = lp.lambda, th = lp.theta;
    const long A = 2 * n + 2 * h + 2;
    const long B = n + 2 * h + l + 3;
    RootLists out;
    out.y.reserve(A);
    out.y.push_back({Rational(1 - 2 * h), Rational(2), Rational(0)});
    out.y.push_back({Rational(1), Rational(2), Rational(0)});
    for (long i = 3; i <= h + 2; ++i)
        out.y.push_back({Rational(3 - i), Rational(1), Rational(0)});
    for (long i = h + 3; i <= 2 * h + 2; ++i) {
        Rational c = Rational(1) / (Rational(1) - th);
        out.y.push_back({Rational(h - i + 3) * c, c, Rational(0)});
    }
    for (long i = 2 * h + 3; i <= n + 2 * h + 2; ++i) {
        Rational c = Rational(1) / (lam * th);
        out.y.push_back({Rational(n + h - i + 3) * c, c, -c});
    }
    for (long i = n + 2 * h + 3; i <= A; ++i) {
        Rational c = Rational(1) / th;
        out.y.push_back({Rational(2 * n + h - i + 3) * c, c, -c});
    }
    assert(static_cast<long>(out.y.size()) == A);

    out.z.reserve(B);
    for (long i = 1; i <= l + 1; ++i) out.z.push_back({Rational(0), Rational(0), Rational(0)});
    out.z.push_back({Rational(1 - h), Rational(2), Rational(0)});
    for (long i = l + 3; i <= h + l + 2; ++i) {
        Rational c = Rational(1) / th;
        out.z.push_back({Rational(l - i + 3) * c, c, Rational(0)});
    }
    for (long i = h + l + 3; i <= B; ++i)
        out.z.push_back({Rational(n + l - i + 4), Rational(2), Rational(-1)});
    assert(static_cast<long>(out.z.size()) == B);
    return out;
}

// Numerator polynomial, degree 2n + 2h + 2 in d, leading coefficient
// theta^n (1-theta)^h (lambda theta)^n.
inline DPoly build_P(long n, long h, const LimitParams& lp) {
    if (n < 1 || h < 1 || h > n) throw std::invalid_argument("build_P: need 1 <= h <= n");
    const Rational lam = lp.lambda, th = lp.theta;
    auto aff = [](const Rational& c0, const Rational& cj, const Rational& ck) {
        BivarPoly p;
        p.add(0, 0, c0);
        p.add(1, 0, cj);
        p.add(0, 1, ck);
        return p;
    };
    DPoly P = DPoly::constant(BivarPoly::constant(Rational(1)));
    P = P * DPoly::linear(Rational(1), aff(Rational(-1), Rational(-2), Rational(0)));
    P = P * DPoly::linear(Rational(1), aff(Rational(2 * h - 1), Rational(-2), Rational(0)));
    for (long u = 0; u < h; ++u)
        P = P * DPoly::linear(Rational(1), aff(Rational(u), Rational(-1), Rational(0)));
    for (long u = 0; u < h; ++u)
        P = P * DPoly::linear(Rational(1) - th, aff(Rational(u), Rational(-1), Rational(0)));
    for (long i = 0; i < n; ++i)
        P = P * DPoly::linear(lam * th, aff(Rational(h - n + i), Rational(-1), Rational(1)));
    for (long i = 0; i < n; ++i)
        P = P * DPoly::linear(th, aff(Rational(h - n + i), Rational(-1), Rational(1)));
    return P;
}

// Denominator polynomial, degree n + 2h + l + 3 in d, leading coefficient
// (lambda theta) theta^h.
inline DPoly build_D(long n, long h, long l, const LimitParams& lp) {
    if (n < 1 || h < 1 || h > n || l < 0 || l >= h)
        throw std::invalid_argument("build_D: need 1 <= h <= n and 0 <= l < h");
    const Rational lam = lp.lambda, th = lp.theta;
    auto aff = [](const Rational& c0, const Rational& cj, const Rational& ck) {
        BivarPoly p;
        p.add(0, 0, c0);
        p.add(1, 0, cj);
        p.add(0, 1, ck);
        return p;
    };
    DPoly D = DPoly::constant(BivarPoly::constant(lam * th));
    D = D.scaled_shifted(BivarPoly::constant(Rational(1)), static_cast<int>(l + 1));
    D = D * DPoly::linear(Rational(1), aff(Rational(h - 1), Rational(-2), Rational(0)));
    for (long u = 0; u < h; ++u)
        D = D * DPoly::linear(th, aff(Rational(u), Rational(-1), Rational(0)));
    for (long u = 0; u <= n + h; ++u)
        D = D * DPoly::linear(Rational(1), aff(Rational(h - n - 1 + u), Rational(-2), Rational(1)));
    return D;
}

// Quotient coefficients q_0..q_{n-1} of build_P / build_D at l = 0, indexed
// so that q_i is the coefficient of d^{n-1-i}.  One division serves every l:
// raising l only truncates the quotient, it does not change shared entries.
inline std::vector<BivarPoly> quotient_coeffs(long n, long h, const LimitParams& lp) {
    auto res = long_divide(build_P(n, h, lp), build_D(n, h, 0, lp));
    if (res.quotient.degree() != static_cast<int>(n - 1))
        throw DegreeError("quotient_coeffs: unexpected quotient degree");
    std::vector<BivarPoly> q;
    q.reserve(n);
    for (long i = 0; i < n; ++i) q.push_back(res.quotient.coeff(static_cast<int>(n - 1 - i)));
    return q;
}

inline Rational coeff_from_quotients(const std::vector<BivarPoly>& q, long n, long h, long l) {
    return q[n - l - 1].coeff(static_cast<int>(h - l - 1), static_cast<int>(n - h));
}

// c_{n,h,l} = [j^{h-l-1} k^{n-h}] q_{n-l-1}, long-division route.
inline Rational c_division(long n, long h, long l, const LimitParams& lp) {
    return coeff_from_quotients(quotient_coeffs(n, h, lp), n, h, l);
}

// Symmetric-function route: q_{n-l-1} from the alternating e/h convolution
// over the root lists, then the same coefficient extraction.
inline Rational c_symmetric(long n, long h, long l, const LimitParams& lp) {
    if (n < 1 || h < 1 || h > n || l < 0 || l >= h)
        throw std::invalid_argument("c_symmetric: need 1 <= h <= n and 0 <= l < h");
    const long C = n - l - 1;
    auto roots = root_lists(n, h, l, lp);
    auto e = elementary_symmetric_all(roots.y, static_cast<int>(C));
    auto hh = complete_homogeneous_all(roots.z, static_cast<int>(C));
    BivarPoly acc;
    for (long v = 0; v <= C; ++v) {
        BivarPoly t = e[C - v] * hh[v];
        if (v % 2) acc -= t; else acc += t;
    }
    const Rational lam = lp.lambda, th = lp.theta;
    Rational pref = (Rational(1) - th).pow(h) * (lam * th * th).pow(n) / (th.pow(h) * lam * th);
    if (C % 2) pref = -pref;
    return acc.scaled(pref).coeff(static_cast<int>(h - l - 1), static_cast<int>(n - h));
}

namespace detail {

inline Rational corner_alpha(long n, long i, const LimitParams& lp) {
    const Rational lam = lp.lambda, th = lp.theta;
    Rational tot(0);
    for (long i1 = 0; i1 <= std::min(2L, i); ++i1)
        for (long i2 = 0; i2 <= i - i1; ++i2)
            for (long i3 = 0; i3 <= i - i1 - i2; ++i3)
                for (long i4 = 0; i4 <= i - i1 - i2 - i3; ++i4) {
                    long i5 = i - i1 - i2 - i3 - i4;
                    tot += binomial(2, i1) * binomial(n, i2) * binomial(n, i3) * binomial(n, i4) *
                           binomial(n, i5) * Rational(2).pow(i1) * (lam * th).pow(n - 1 - i3) *
                           (Rational(1) - th).pow(n - i4) * th.pow(-i5);
                }
    return i % 2 ? -tot : tot;
}

inline Rational corner_beta(long n, long u, const LimitParams& lp) {
    const Rational th = lp.theta;
    Rational tot(0);
    for (long i1 = 0; i1 <= std::min(1L, u); ++i1)
        for (long i2 = 0; i2 <= u - i1; ++i2) {
            long i3 = u - i1 - i2;
            tot += binomial(1, i1) * binomial(n, i2) * binomial(2 * n + 1, i3) *
                   Rational(2).pow(i1 + i3) * th.pow(-i2);
        }
    return u % 2 ? -tot : tot;
}

}  // namespace detail

// X_0..X_{n-1} for the h = n corner: single convolution recurrence,
// c_{n,n,l} = X_{n-l-1}.
inline std::vector<Rational> x_recurrence(long n, const LimitParams& lp) {
    if (n < 1) throw std::invalid_argument("x_recurrence: need n >= 1");
    const Rational lam = lp.lambda, th = lp.theta;
    std::vector<Rational> X;
    X.reserve(n);
    X.push_back((lam * th).pow(n - 1) * (Rational(1) - th).pow(n));
    for (long i = 1; i < n; ++i) {
        Rational Xi = detail::corner_alpha(n, i, lp);
        for (long v = 0; v < i; ++v) Xi -= detail::corner_beta(n, i - v, lp) * X[v];
        X.push_back(Xi);
    }
    return X;
}

// c_{n,n,l} by Toeplitz-band inversion of the same system.
inline Rational c_toeplitz(long n, long l, const LimitParams& lp) {
    if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("c_toeplitz: need 0 <= l < n");
    const long target = n - l - 1;
    Rational tot(0);
    for (long v = 0; v <= target; ++v) {
        long a = target - v;
        std::vector<Rational> betas;
        betas.reserve(a);
        for (long i = 1; i <= a; ++i) betas.push_back(detail::corner_beta(n, i, lp));
        tot += detail::corner_alpha(n, v, lp) * bell_gamma(betas);
    }
    return tot;
}

// Closed form for the top index l = h-1.
inline Rational c_closed_l_top(long n, long h, const LimitParams& lp) {
    if (n < 1 || h < 1 || h > n) throw std::invalid_argument("c_closed_l_top: need 1 <= h <= n");
    const Rational lam = lp.lambda, th = lp.theta;
    Rational tot(0);
    for (long v = 0; v <= n - h; ++v) {
        Rational f = pochhammer(Rational(h - n), v) * pochhammer(Rational(-n), v) /
                     (pochhammer(Rational(-2 * n), v) * factorial(v) * th.pow(v));
        HypSeries s;
        s.top = {Rational(-v), Rational(-n)};
        s.bottom = {Rational(n - v + 1)};
        s.argument = Rational(1) / lam;
        f *= evaluate_terminating(s);
        tot += f;
    }
    Rational pref = (Rational(1) - th).pow(h) * (lam * th).pow(n - 1) * th.pow(n - h) *
                    binomial(2 * n, n - h);
    if ((n - h) % 2) pref = -pref;
    return pref * tot;
}

namespace detail {

inline Rational big_A(long n, long h, long a, long b, const LimitParams& lp) {
    const Rational lam = lp.lambda, th = lp.theta;
    Rational tot(0);
    for (long i = 0; i <= b; ++i) {
        Rational inner(0);
        for (long i1 = 0; i1 <= std::min(2L, a); ++i1)
            for (long i2 = 0; i2 <= a - i1; ++i2)
                for (long i3 = 0; i3 <= a - i1 - i2; ++i3)
                    for (long i4 = 0; i4 <= a - i1 - i2 - i3; ++i4) {
                        long i5 = a - i1 - i2 - i3 - i4;
                        inner += binomial(2, i1) * binomial(h, i2) * binomial(h, i3) *
                                 binomial(n - i, i4) * binomial(n - (b - i), i5) *
                                 Rational(2).pow(i1) * (Rational(1) - th).pow(h - i3) *
                                 (th * lam).pow(n - 1 - i - i4) * th.pow((n - h) - (b - i) - i5);
                    }
        tot += binomial(n, i) * binomial(n, b - i) * inner;
    }
    return a % 2 ? -tot : tot;
}

inline Rational big_B(long n, long h, long a, long b, const LimitParams& lp) {
    const Rational th = lp.theta;
    Rational tot(0);
    for (long j1 = 0; j1 <= std::min(1L, a); ++j1)
        for (long j2 = 0; j2 <= a - j1; ++j2) {
            long j3 = a - j1 - j2;
            tot += binomial(1, j1) * binomial(h, j2) * binomial(n + h + 1 - b, j3) *
                   Rational(2).pow(j1 + j3) / th.pow(j2);
        }
    tot *= binomial(n + h + 1, b);
    return a % 2 ? -tot : tot;
}

}  // namespace detail

// Z_{a,b} for 0 <= a <= h-1, 0 <= b <= n-h by the double-index recurrence;
// c_{n,h,l} = Z_{h-l-1, n-h}.
inline std::map<std::pair<long, long>, Rational> z_recurrence(long n, long h,
                                                              const LimitParams& lp) {
    if (n < 1 || h < 1 || h > n) throw std::invalid_argument("z_recurrence: need 1 <= h <= n");
    if (detail::big_B(n, h, 0, 0, lp) != Rational(1))
        throw std::logic_error("z_recurrence: B_{0,0} != 1");
    const Rational lam = lp.lambda, th = lp.theta;
    std::map<std::pair<long, long>, Rational> Z;
    Z[{0, 0}] = (lam * th).pow(n - 1) * th.pow(n - h) * (Rational(1) - th).pow(h);
    for (long tot = 1; tot <= (h - 1) + (n - h); ++tot) {
        for (long a = 0; a <= std::min(h - 1, tot); ++a) {
            long b = tot - a;
            if (b > n - h) continue;
            Rational val = detail::big_A(n, h, a, b, lp);
            for (long u = 0; u <= a; ++u)
                for (long v = 0; v <= b; ++v) {
                    if (u + v > a + b - 1) continue;
                    val -= Z[{u, v}] * detail::big_B(n, h, a - u, b - v, lp);
                }
            Z[{a, b}] = val;
        }
    }
    return Z;
}

inline Rational c_recurrence(long n, long h, long l, const LimitParams& lp) {
    if (l < 0 || l >= h) throw std::invalid_argument("c_recurrence: need 0 <= l < h");
    auto Z = z_recurrence(n, h, lp);
    return Z.at({h - l - 1, n - h});
}

// Closed form of the A-coefficients at theta = 1/2 with a terminating 2F1.
inline Rational a_theta_half(long n, long h, long a, long b, const Rational& lambda) {
    Rational tot(0);
    for (long i2 = 0; i2 <= a; ++i2) {
        Rational inner(0);
        for (long i = 0; i <= b; ++i) {
            HypSeries s;
            s.top = {Rational(i2 - a), Rational(b - i - n - h - 2)};
            s.bottom = {Rational(b - 2 * n - h - 2)};
            s.argument = Rational(1) - lambda;
            inner += binomial(n, i) * binomial(n, b - i) / lambda.pow(i) * evaluate_terminating(s);
        }
        tot += Rational(2).pow(a - i2) / lambda.pow(a - i2) * binomial(h, i2) *
               binomial(2 * n + h + 2 - b, a - i2) * inner;
    }
    tot *= lambda.pow(n - 1) * Rational(2).pow(b) / Rational(2).pow(2 * n - 1);
    return a % 2 ? -tot : tot;
}

// Linear relation tying the theta = 1/2 coefficient family to the closed
// form above; returns whether it holds at (a, b).
inline bool theta_half_relation_check(long n, long h, long a, long b, const Rational& lambda) {
    LimitParams lp(lambda, Rational(1, 2));
    auto Z = z_recurrence(n, h, lp);
    Rational lhs(0);
    for (long u = 0; u <= a; ++u)
        for (long v = 0; v <= b; ++v) {
            Rational t = Rational(2).pow(a - u) * binomial(n + h + 1, b - v) *
                         binomial(n + 2 * h + 2 - b + v, a - u) * Z.at({u, v});
            if (u % 2) lhs -= t; else lhs += t;
        }
    Rational rhs = a_theta_half(n, h, a, b, lambda);
    if (a % 2) rhs = -rhs;
    return lhs == rhs;
}

// Full coefficient table for n <= n_max.  The division, symmetric and
// recurrence routes fill every (n, h, l); the closed-form route fills only
// the l = h-1 band it covers.  Work is spread over (n, h) blocks across
// threads with a deterministic merge.
inline CoeffTable build_table(const LimitParams& lp, long n_max, Route route,
                              unsigned threads = std::thread::hardware_concurrency()) {
    if (n_max < 1) throw std::invalid_argument("build_table: need n_max >= 1");
    CoeffTable table(lp, n_max);
    std::vector<std::pair<long, long>> blocks;
    for (long n = 1; n <= n_max; ++n)
        for (long h = 1; h <= n; ++h) blocks.emplace_back(n, h);

    using BlockOut = std::vector<std::tuple<long, long, long, Rational>>;
    std::vector<BlockOut> results(blocks.size());
    auto run_block = [&](size_t bi) {
        auto [n, h] = blocks[bi];
        BlockOut out;
        switch (route) {
            case Route::division: {
                auto q = quotient_coeffs(n, h, lp);
                for (long l = 0; l < h; ++l)
                    out.emplace_back(n, h, l, coeff_from_quotients(q, n, h, l));
                break;
            }
            case Route::symmetric: {
                for (long l = 0; l < h; ++l) out.emplace_back(n, h, l, c_symmetric(n, h, l, lp));
                break;
            }
            case Route::recurrence: {
                auto Z = z_recurrence(n, h, lp);
                for (long l = 0; l < h; ++l)
                    out.emplace_back(n, h, l, Z.at({h - l - 1, n - h}));
                break;
            }
            case Route::closed_form: {
                out.emplace_back(n, h, h - 1, c_closed_l_top(n, h, lp));
                break;
            }
        }
        results[bi] = std::move(out);
    };

    if (threads <= 1 || blocks.size() <= 1) {
        for (size_t bi = 0; bi < blocks.size(); ++bi) run_block(bi);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t bi = next.fetch_add(1); bi < blocks.size(); bi = next.fetch_add(1))
                run_block(bi);
        };
        std::vector<std::thread> pool;
        unsigned count = std::min<unsigned>(threads, blocks.size());
        pool.reserve(count);
        for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& block : results)
        for (const auto& [n, h, l, v] : block) table.set(n, h, l, v, route);
    return table;
}

}  // namespace jacmom
