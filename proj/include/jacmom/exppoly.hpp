#pragma once

#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "jacmom/rational.hpp"

namespace jacmom {

// Finite sum of coef * t^power * exp(-rate * t) with exact rational
// coefficients and rates.  Terms are keyed by (rate, power); merging terms
// that cancel removes the key, so equal functions compare equal.
class ExpPoly {
public:
    using Key = std::pair<Rational, int>;

    ExpPoly() = default;

    void add_term(const Rational& coef, const Rational& rate, int power) {
        if (coef.is_zero()) return;
        if (rate.sign() < 0) throw std::invalid_argument("ExpPoly: negative rate");
        if (power < 0) throw std::invalid_argument("ExpPoly: negative power");
        auto key = Key{rate, power};
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(key, coef);
        } else {
            it->second += coef;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    ExpPoly& operator+=(const ExpPoly& o) {
        for (const auto& [key, c] : o.t_) add_term(c, key.first, key.second);
        return *this;
    }

    ExpPoly& operator-=(const ExpPoly& o) {
        for (const auto& [key, c] : o.t_) add_term(-c, key.first, key.second);
        return *this;
    }

    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }

    ExpPoly scaled(const Rational& c) const {
        ExpPoly out;
        if (c.is_zero()) return out;
        for (const auto& [key, v] : t_) out.t_.emplace(key, v * c);
        return out;
    }

    // Double-precision evaluation; relative accuracy is limited by the
    // floating-point conversion of the exact terms (about 1e-12 for the
    // moment sizes handled here).
    double eval(double t) const {
        double out = 0.0;
        for (const auto& [key, c] : t_)
            out += c.to_double() * std::pow(t, key.second) * std::exp(-key.first.to_double() * t);
        return out;
    }

    // Exact value at t = 0: only power-0 terms contribute.
    Rational eval_exact_at_zero() const {
        Rational out(0);
        for (const auto& [key, c] : t_)
            if (key.second == 0) out += c;
        return out;
    }

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<Key, Rational>& terms() const { return t_; }

    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const ExpPoly& e) {
        if (e.t_.empty()) return os << "0";
        bool first = true;
        for (const auto& [key, c] : e.t_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (key.second) os << "*t^" << key.second;
            os << "*exp(-" << key.first << "*t)";
        }
        return os;
    }

private:
    std::map<Key, Rational> t_;
};

}  // namespace jacmom
