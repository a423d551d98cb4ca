#pragma once

#include <utility>
#include <vector>

#include "jacmom/bivar_poly.hpp"
#include "jacmom/errors.hpp"

namespace jacmom {

// Dense polynomial in the formal size variable d whose coefficients are
// BivarPoly values in (j, k).  Normalized: the leading coefficient is
// nonzero; the zero polynomial has an empty coefficient list.
class DPoly {
public:
    DPoly() = default;

    static DPoly constant(BivarPoly c) {
        DPoly p;
        if (!c.is_zero()) p.c_.push_back(std::move(c));
        return p;
    }

    static DPoly from_coeffs(std::vector<BivarPoly> coeffs) {
        DPoly p;
        p.c_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    // dcoef*d + c0
    static DPoly linear(const Rational& dcoef, const BivarPoly& c0) {
        DPoly p;
        p.c_ = {c0, BivarPoly::constant(dcoef)};
        p.normalize();
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    BivarPoly coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return {};
        return c_[i];
    }

    const BivarPoly& leading() const {
        if (c_.empty()) throw DegreeError("DPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    DPoly& operator+=(const DPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }

    DPoly& operator-=(const DPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }

    friend DPoly operator+(DPoly a, const DPoly& b) { return a += b; }
    friend DPoly operator-(DPoly a, const DPoly& b) { return a -= b; }

    friend DPoly operator*(const DPoly& a, const DPoly& b) {
        DPoly out;
        if (a.is_zero() || b.is_zero()) return out;
        out.c_.resize(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                out.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        out.normalize();
        return out;
    }

    // *this * c * d^shift
    DPoly scaled_shifted(const BivarPoly& c, int shift) const {
        DPoly out;
        if (is_zero() || c.is_zero()) return out;
        out.c_.assign(shift, BivarPoly{});
        for (const auto& x : c_) out.c_.push_back(x * c);
        out.normalize();
        return out;
    }

    friend bool operator==(const DPoly& a, const DPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DPoly& a, const DPoly& b) { return !(a == b); }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<BivarPoly> c_;
};

struct DPolyDivision {
    DPoly quotient;
    DPoly remainder;
};

// Euclidean division by a divisor with scalar leading coefficient.
inline DPolyDivision long_divide(const DPoly& num, const DPoly& div) {
    if (div.is_zero() || !div.leading().is_scalar())
        throw NonScalarLeadingCoefficient("long_divide: divisor leading coefficient not scalar");
    if (num.degree() < div.degree())
        throw DegreeError("long_divide: numerator degree below divisor degree");
    Rational lead = div.leading().coeff(0, 0);
    DPoly rem = num;
    int qdeg = num.degree() - div.degree();
    std::vector<BivarPoly> q(qdeg + 1);
    for (int i = qdeg; i >= 0; --i) {
        BivarPoly qc = rem.coeff(i + div.degree()).scaled(Rational(1) / lead);
        q[i] = qc;
        if (!qc.is_zero()) rem -= div.scaled_shifted(qc, i);
    }
    return DPolyDivision{DPoly::from_coeffs(std::move(q)), std::move(rem)};
}

}  // namespace jacmom
