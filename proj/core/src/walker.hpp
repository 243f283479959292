// SPDX-License-Identifier: MIT
// Closed-form runs of F^4 inside one box.
#pragma once

#include <algorithm>

#include "lattice_rotor/core_map.hpp"

namespace lattice_rotor::detail {

// All j with u + j w inside box (m, n) and F^4(u + j w) = u + (j+1) w.
// The set is an interval because each defining condition is a floor or
// ceiling of an affine function of j with nonzero slope.
struct Run {
    BoxIndex box;
    LatticePoint w;
    Int lo = 0;
    Int hi = -1;

    // Consecutive forward translations from u: F^{4j} u = u + j w for j <= J.
    Int forward() const { return (lo <= 0 && 0 <= hi) ? hi + 1 : 0; }
    // Consecutive backward translations: F^{-4j} u = u - j w for j <= J.
    Int backward() const { return (lo <= -1 && -1 <= hi) ? -lo : 0; }
};

// s in [lo, hi] <=> floor(lambda s) = c.
inline void floor_window(const RotationParameter& lam, Int c, Wide& lo, Wide& hi) {
    const Wide p = lam.p(), q = lam.q();
    lo = ceil_div(static_cast<Wide>(c) * q, p);
    hi = floor_div(static_cast<Wide>(c) * q + q - 1, p);
}

// s in [lo, hi] <=> ceil(lambda s) = c.
inline void ceil_window(const RotationParameter& lam, Int c, Wide& lo, Wide& hi) {
    const Wide p = lam.p(), q = lam.q();
    lo = floor_div(static_cast<Wide>(c - 1) * q, p) + 1;
    hi = floor_div(static_cast<Wide>(c) * q, p);
}

// Intersect [jlo, jhi] with {j : s0 + j k in [lo, hi]}, k != 0.
inline void clip(Wide s0, Wide k, Wide lo, Wide hi, Wide& jlo, Wide& jhi) {
    if (k < 0) {
        s0 = -s0;
        k = -k;
        const Wide t = lo;
        lo = -hi;
        hi = -t;
    }
    jlo = std::max(jlo, ceil_div(lo - s0, k));
    jhi = std::min(jhi, floor_div(hi - s0, k));
}

inline Run translation_run(const LatticePoint& u, const RotationParameter& lam) {
    Run r;
    r.box = box_of(u, lam);
    const Int m = r.box.m, n = r.box.n;
    r.w = r.box.w_value();
    const Wide wx = r.w.x, wy = r.w.y;
    const Wide x = u.x, y = u.y;
    Wide jlo = -(static_cast<Wide>(1) << 100), jhi = static_cast<Wide>(1) << 100;
    Wide lo, hi;
    // Box (m, n).
    floor_window(lam, m, lo, hi);
    clip(x, wx, lo, hi, jlo, jhi);
    floor_window(lam, n, lo, hi);
    clip(y, wy, lo, hi, jlo, jhi);
    // a = n, b = m, c = n, d = m in the four-step identity.
    ceil_window(lam, n + 1, lo, hi);
    clip(y - m, wy, lo, hi, jlo, jhi);
    ceil_window(lam, m + 1, lo, hi);
    clip(x + n + 1, wx, lo, hi, jlo, jhi);
    floor_window(lam, n, lo, hi);
    clip(y - 2 * static_cast<Wide>(m) - 1, wy, lo, hi, jlo, jhi);
    floor_window(lam, m, lo, hi);
    clip(x + 2 * static_cast<Wide>(n) + 1, wx, lo, hi, jlo, jhi);
    if (jlo > jhi) {
        r.lo = 0;
        r.hi = -1;
    } else {
        r.lo = narrow(jlo, "translation_run");
        r.hi = narrow(jhi, "translation_run");
    }
    return r;
}

inline LatticePoint along(const LatticePoint& u, const LatticePoint& w, Int j) {
    return {add(u.x, mul(j, w.x)), add(u.y, mul(j, w.y))};
}

inline LatticePoint apply_F_inverse4(LatticePoint u, const RotationParameter& lam) {
    for (int i = 0; i < 4; ++i) u = apply_F_inverse(u, lam);
    return u;
}

}  // namespace lattice_rotor::detail
