#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "jacmom/bivar_poly.hpp"

namespace jacmom {

// e_0..e_imax of the given roots, by the one-pass product update.
inline std::vector<BivarPoly> elementary_symmetric_all(const std::vector<AffineRoot>& roots,
                                                       int imax) {
    if (imax < 0) throw std::out_of_range("elementary_symmetric: negative index");
    std::vector<BivarPoly> e(imax + 1);
    e[0] = BivarPoly::constant(Rational(1));
    int seen = 0;
    for (const auto& r : roots) {
        ++seen;
        BivarPoly rp = r.to_poly();
        for (int v = std::min(seen, imax); v >= 1; --v) e[v] += e[v - 1] * rp;
    }
    return e;
}

inline BivarPoly elementary_symmetric(const std::vector<AffineRoot>& roots, int i) {
    if (i < 0 || i > static_cast<int>(roots.size()))
        throw std::out_of_range("elementary_symmetric: index exceeds root count");
    return elementary_symmetric_all(roots, i)[i];
}

// h_0..h_vmax via the Newton alternating recurrence
// h_v = sum_{i=1}^{v} (-1)^{i-1} e_i h_{v-i}.
inline std::vector<BivarPoly> complete_homogeneous_all(const std::vector<AffineRoot>& roots,
                                                       int vmax) {
    if (vmax < 0) throw std::out_of_range("complete_homogeneous: negative index");
    auto e = elementary_symmetric_all(roots, vmax);
    std::vector<BivarPoly> h(vmax + 1);
    h[0] = BivarPoly::constant(Rational(1));
    for (int v = 1; v <= vmax; ++v) {
        BivarPoly acc;
        for (int i = 1; i <= v; ++i) {
            BivarPoly t = e[i] * h[v - i];
            if (i % 2) acc += t; else acc -= t;
        }
        h[v] = acc;
    }
    return h;
}

inline BivarPoly complete_homogeneous(const std::vector<AffineRoot>& roots, int v) {
    if (v < 0) throw std::out_of_range("complete_homogeneous: negative index");
    return complete_homogeneous_all(roots, v)[v];
}

// sum over weakly increasing sequences 1 <= tau_1 <= ... <= tau_C <= A of
// prod_i (y_{tau_i + i - 1} - z_{tau_i}), with y_i = 0 past the end of y
// and z_i = 0 past the end of z.  Root order matters.
inline BivarPoly goulden_greene_sum(const std::vector<AffineRoot>& y,
                                    const std::vector<AffineRoot>& z, int C) {
    if (C < 0) throw std::out_of_range("goulden_greene_sum: negative length");
    if (C == 0) return BivarPoly::constant(Rational(1));
    const int A = static_cast<int>(y.size());
    auto y_at = [&](int i) -> AffineRoot {
        return i >= 1 && i <= A ? y[i - 1] : AffineRoot{};
    };
    auto z_at = [&](int i) -> AffineRoot {
        return i >= 1 && i <= static_cast<int>(z.size()) ? z[i - 1] : AffineRoot{};
    };
    BivarPoly total;
    std::function<void(int, int, const BivarPoly&)> rec = [&](int pos, int lo,
                                                              const BivarPoly& prod) {
        if (pos > C) {
            total += prod;
            return;
        }
        for (int tau = lo; tau <= A; ++tau) {
            BivarPoly f = y_at(tau + pos - 1) - z_at(tau);
            if (f.is_zero()) continue;
            rec(pos + 1, tau, prod * f);
        }
    };
    rec(1, 1, BivarPoly::constant(Rational(1)));
    return total;
}

}  // namespace jacmom
