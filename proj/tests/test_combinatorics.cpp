#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "jacmom/combinatorics.hpp"
#include "jacmom/errors.hpp"

using jacmom::bell_gamma;
using jacmom::binomial;
using jacmom::factorial;
using jacmom::gamma_ratio;
using jacmom::laguerre_1_coeffs;
using jacmom::pochhammer;
using jacmom::PoleError;
using jacmom::Rational;

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
    CHECK(pochhammer(Rational(-3), 2) == Rational(6));
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
}

TEST_CASE("pochhammer splits multiplicatively") {
    const std::vector<Rational> as = {Rational(-3), Rational(1, 2), Rational(7, 3),
                                      Rational(0), Rational(-5, 2)};
    for (const auto& a : as)
        for (long m = 0; m <= 4; ++m)
            for (long n = 0; n <= 4; ++n)
                CHECK(pochhammer(a, m + n) ==
                      pochhammer(a, m) * pochhammer(a + Rational(m), n));
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == Rational(6));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(binomial(4, 1) == Rational(4));
    CHECK(binomial(5, -1) == Rational(0));
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("gamma ratio") {
    CHECK(gamma_ratio(Rational(5), 2) == Rational(30));
    CHECK(gamma_ratio(Rational(1, 2), 1) == Rational(1, 2));
    CHECK(gamma_ratio(Rational(3), -2) == Rational(1, 2));
    CHECK(gamma_ratio(Rational(-2), 5) == Rational(0));
    CHECK_THROWS_AS(gamma_ratio(Rational(1), -1), PoleError);
    CHECK_THROWS_AS(gamma_ratio(Rational(1), -2), PoleError);
    // Both gammas sit at poles; the ratio is the finite limit 1/(-3)(-2).
    CHECK(gamma_ratio(Rational(-1), -2) == Rational(1, 6));
}

TEST_CASE("gamma ratio composes") {
    const std::vector<Rational> as = {Rational(5), Rational(1, 2), Rational(-7, 2),
                                      Rational(4)};
    for (const auto& a : as)
        for (long u = -3; u <= 3; ++u)
            for (long v = -3; v <= 3; ++v) {
                Rational lhs, r1, r2;
                try {
                    lhs = gamma_ratio(a, u + v);
                    r1 = gamma_ratio(a, u);
                    r2 = gamma_ratio(a + Rational(u), v);
                } catch (const PoleError&) {
                    continue;
                }
                if (r1.is_zero() || r2.is_zero()) continue;
                CHECK(lhs == r1 * r2);
            }
}

TEST_CASE("alternating power sum") {
    CHECK(jacmom::alternating_power_sum(1, 2) == Rational(0));
    CHECK(jacmom::alternating_power_sum(2, 2) == Rational(2));
    CHECK(jacmom::alternating_power_sum(0, 0) == Rational(1));

    auto brute = [](long a, long b) {
        Rational tot(0);
        for (long j = 0; j <= b; ++j) {
            Rational pw(1);
            for (long i = 0; i < a; ++i) pw = pw * Rational(j);
            Rational term = binomial(b, j) * pw;
            tot += (j % 2) ? -term : term;
        }
        return tot;
    };
    for (long a = 0; a <= 12; ++a)
        for (long b = 0; b <= 12; ++b) {
            Rational got = jacmom::alternating_power_sum(a, b);
            CHECK(got == brute(a, b));
            if (a < b) CHECK(got.is_zero());
            if (a == b) {
                Rational want = factorial(a);
                if (a % 2) want = -want;
                CHECK(got == want);
            }
        }
}

TEST_CASE("bell gamma base cases") {
    CHECK(bell_gamma({}) == Rational(1));
    CHECK(bell_gamma({Rational(5, 3)}) == -Rational(5, 3));
    Rational b1(2, 7), b2(-3, 5);
    CHECK(bell_gamma({b1, b2}) == b1 * b1 - b2);
}

TEST_CASE("bell gamma inverts its band system") {
    // beta_0 = 1; gamma_a must satisfy sum_v beta_{a-v} gamma_v = [a = 0].
    const std::vector<Rational> betas = {Rational(1),  Rational(2, 3),
                                         Rational(-1, 4), Rational(5),
                                         Rational(7, 2), Rational(-2, 9),
                                         Rational(1, 6), Rational(-3),
                                         Rational(4, 5), Rational(11, 7),
                                         Rational(-5, 8)};
    std::vector<Rational> gammas;
    for (long a = 0; a <= 10; ++a) {
        std::vector<Rational> prefix(betas.begin() + 1, betas.begin() + 1 + a);
        gammas.push_back(bell_gamma(prefix));
        Rational conv(0);
        for (long v = 0; v <= a; ++v) conv += betas[a - v] * gammas[v];
        CHECK(conv == Rational(a == 0 ? 1 : 0));
    }
}

TEST_CASE("laguerre coefficients") {
    CHECK(laguerre_1_coeffs(0) == std::vector<Rational>{Rational(1)});
    CHECK(laguerre_1_coeffs(1) == std::vector<Rational>{Rational(2), Rational(-1)});
    CHECK(laguerre_1_coeffs(2) ==
          std::vector<Rational>{Rational(3), Rational(-3), Rational(1, 2)});
}

TEST_CASE("laguerre three-term recurrence") {
    // (k+1) L_{k+1} = (2k+2-x) L_k - (k+1) L_{k-1} for the alpha = 1 family.
    auto scale = [](std::vector<Rational> v, const Rational& c) {
        for (auto& x : v) x = x * c;
        return v;
    };
    auto sub = [](std::vector<Rational> a, const std::vector<Rational>& b) {
        if (a.size() < b.size()) a.resize(b.size(), Rational(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        return a;
    };
    auto mul_x = [](const std::vector<Rational>& v) {
        std::vector<Rational> out(v.size() + 1, Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i) out[i + 1] = v[i];
        return out;
    };
    auto trim = [](std::vector<Rational> v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        return v;
    };
    for (long k = 1; k <= 9; ++k) {
        auto lkm1 = laguerre_1_coeffs(k - 1);
        auto lk = laguerre_1_coeffs(k);
        auto lhs = scale(laguerre_1_coeffs(k + 1), Rational(k + 1));
        auto rhs = sub(sub(scale(lk, Rational(2 * k + 2)), mul_x(lk)),
                       scale(lkm1, Rational(k + 1)));
        CHECK(trim(lhs) == trim(rhs));
    }
}
