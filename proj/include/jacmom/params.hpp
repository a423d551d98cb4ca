#pragma once

#include <stdexcept>
#include <string>

#include "jacmom/rational.hpp"

namespace jacmom {

// Finite-size parameter triple (m, p, d): an m x p corner inside a d x d
// unitary, with p allowed to be a half-integer.  Derived Jacobi parameters
// r = p - m, q = d - p, s = q - m.
struct HalfIntegerParams {
    long m = 0;
    Rational p;
    long d = 0;
    Rational r, q, s;

    HalfIntegerParams(long m_, Rational p_, long d_) : m(m_), p(std::move(p_)), d(d_) {
        if (m < 1) throw std::invalid_argument("params: m must be a positive integer");
        if ((p * Rational(2)).is_integer() == false)
            throw std::invalid_argument("params: 2p must be an integer");
        if (p < Rational(m)) throw std::invalid_argument("params: p >= m required");
        if (d < 1 || Rational(d) < p) throw std::invalid_argument("params: d >= p required");
        q = Rational(d) - p;
        if (q.sign() <= 0) throw std::invalid_argument("params: q = d - p must be positive");
        r = p - Rational(m);
        s = q - Rational(m);
    }

    std::string str() const {
        return "(m=" + std::to_string(m) + ", p=" + p.str() + ", d=" + std::to_string(d) + ")";
    }
};

// Limit regime parameters: m/d -> lambda*theta and p/d -> theta.
struct LimitParams {
    Rational lambda;
    Rational theta;

    LimitParams(Rational lambda_, Rational theta_)
        : lambda(std::move(lambda_)), theta(std::move(theta_)) {
        if (lambda.sign() <= 0 || lambda > Rational(1))
            throw std::invalid_argument("params: lambda must lie in (0, 1]");
        if (theta.sign() <= 0 || theta >= Rational(1))
            throw std::invalid_argument("params: theta must lie in (0, 1)");
    }

    std::string str() const { return "(lambda=" + lambda.str() + ", theta=" + theta.str() + ")"; }

    friend bool operator==(const LimitParams& a, const LimitParams& b) {
        return a.lambda == b.lambda && a.theta == b.theta;
    }
};

}  // namespace jacmom
