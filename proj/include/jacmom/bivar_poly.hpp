#pragma once

#include <map>
#include <ostream>
#include <utility>

#include "jacmom/rational.hpp"

namespace jacmom {

// Sparse polynomial in two formal variables j and k with Rational
// coefficients; zero coefficients are never stored.
class BivarPoly {
public:
    using Key = std::pair<int, int>;  // (degree in j, degree in k)

    BivarPoly() = default;

    static BivarPoly constant(const Rational& c) {
        BivarPoly p;
        p.add(0, 0, c);
        return p;
    }

    static BivarPoly var_j() {
        BivarPoly p;
        p.add(1, 0, Rational(1));
        return p;
    }

    static BivarPoly var_k() {
        BivarPoly p;
        p.add(0, 1, Rational(1));
        return p;
    }

    void add(int jdeg, int kdeg, const Rational& c) {
        if (c.is_zero()) return;
        auto key = Key{jdeg, kdeg};
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    Rational coeff(int jdeg, int kdeg) const {
        auto it = c_.find(Key{jdeg, kdeg});
        return it == c_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return c_.empty(); }

    bool is_scalar() const {
        return c_.empty() || (c_.size() == 1 && c_.begin()->first == Key{0, 0});
    }

    int degree_j() const {
        int d = 0;
        for (const auto& [key, v] : c_) d = std::max(d, key.first);
        return d;
    }

    int degree_k() const {
        int d = 0;
        for (const auto& [key, v] : c_) d = std::max(d, key.second);
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [key, v] : c_) d = std::max(d, key.first + key.second);
        return d;
    }

    Rational eval(const Rational& j, const Rational& k) const {
        Rational out(0);
        for (const auto& [key, v] : c_) out += v * j.pow(key.first) * k.pow(key.second);
        return out;
    }

    BivarPoly& operator+=(const BivarPoly& o) {
        for (const auto& [key, v] : o.c_) add(key.first, key.second, v);
        return *this;
    }

    BivarPoly& operator-=(const BivarPoly& o) {
        for (const auto& [key, v] : o.c_) add(key.first, key.second, -v);
        return *this;
    }

    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }

    BivarPoly operator-() const {
        BivarPoly out;
        for (const auto& [key, v] : c_) out.c_.emplace(key, -v);
        return out;
    }

    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly out;
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_)
                out.add(ka.first + kb.first, ka.second + kb.second, va * vb);
        return out;
    }

    BivarPoly scaled(const Rational& c) const {
        BivarPoly out;
        if (c.is_zero()) return out;
        for (const auto& [key, v] : c_) out.c_.emplace(key, v * c);
        return out;
    }

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

    const std::map<Key, Rational>& terms() const { return c_; }

    friend std::ostream& operator<<(std::ostream& os, const BivarPoly& p) {
        if (p.c_.empty()) return os << "0";
        bool first = true;
        for (const auto& [key, v] : p.c_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << v << ")";
            if (key.first) os << "*j^" << key.first;
            if (key.second) os << "*k^" << key.second;
        }
        return os;
    }

private:
    std::map<Key, Rational> c_;
};

// c0 + cj*j + ck*k, the root shape produced by the factored numerator and
// denominator polynomials.
struct AffineRoot {
    Rational c0, cj, ck;

    BivarPoly to_poly() const {
        BivarPoly p;
        p.add(0, 0, c0);
        p.add(1, 0, cj);
        p.add(0, 1, ck);
        return p;
    }
};

inline BivarPoly operator-(const AffineRoot& a, const AffineRoot& b) {
    BivarPoly p;
    p.add(0, 0, a.c0 - b.c0);
    p.add(1, 0, a.cj - b.cj);
    p.add(0, 1, a.ck - b.ck);
    return p;
}

}  // namespace jacmom
