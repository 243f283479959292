// SPDX-License-Identifier: MIT
#include "lattice_rotor/core_map.hpp"

namespace lattice_rotor {

FieldAgreementReport measure_field_agreement(const Rational& r, const RotationParameter& lam,
                                             Int budget) {
    if (r <= 0) throw std::invalid_argument("box radius must be positive");
    // |x| < r/lambda on the integer lattice means |x| <= ceil(r q / p) - 1.
    const Rational bound = r * Rational(to_integer(lam.q()), to_integer(lam.p()));
    const Int R = to_int(ceil_q(bound), "field agreement radius") - 1;
    const Wide side = 2 * static_cast<Wide>(R) + 1;
    if (side * side - 1 > budget) {
        throw std::length_error("field agreement scan exceeds the configured budget");
    }

    FieldAgreementReport rep;
    rep.r = r;
    rep.lambda = lam;
    Int agree = 0;
    for (Int x = -R; x <= R; ++x) {
        const Int m = lam.floor_mul(x);
        for (Int y = -R; y <= R; ++y) {
            if (x == 0 && y == 0) continue;
            const FourStep s = four_step({x, y}, lam);
            // v = (a+c+1, -(m+b+1)) against w = (2n+1, -(2m+1)).
            if (s.b == m && s.a + s.c == 2 * s.n) ++agree;
        }
    }
    rep.sample_count = static_cast<Int>(side * side - 1);
    rep.agree_count = agree;
    rep.mu1 = Rational(to_integer(agree), to_integer(rep.sample_count));
    rep.mu1.canonicalize();
    return rep;
}

}  // namespace lattice_rotor
