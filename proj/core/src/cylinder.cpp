// SPDX-License-Identifier: MIT
#include "lattice_rotor/statistics.hpp"

namespace lattice_rotor {

Rational wrap_theta(const Rational& theta) {
    const Rational shifted = theta + Rational(1, 2);
    Rational out = theta - Rational(floor_q(shifted));
    out.canonicalize();
    return out;
}

Rational raw_rotation_number(const LatticePoint& z, const CoordinateFrame& frame) {
    const Int W = frame.domain.W;
    Rational rho = make_q(sub(add(z.x, z.y), mul(2, frame.z0.x)), mul(2, W));
    Rational nu = rho / frame.rho_bar;
    nu.canonicalize();
    return nu;
}

CylinderPoint to_cylinder(const LatticePoint& z, const CoordinateFrame& frame) {
    const Int W = frame.domain.W;
    CylinderPoint p;
    p.theta = wrap_theta(make_q(sub(z.x, z.y), mul(2, W)));
    p.rho = make_q(sub(add(z.x, z.y), mul(2, frame.z0.x)), mul(2, W));
    const Rational nu = raw_rotation_number(z, frame);
    p.nu = nu - Rational(floor_q(nu));
    p.nu.canonicalize();
    return p;
}

CylinderPoint omega_step(const CylinderPoint& p, const PolygonClass& cls) {
    CylinderPoint out = p;
    out.theta = wrap_theta(p.theta + cls.twist * p.rho);
    return out;
}

LatticePoint reversor_Ge(const LatticePoint& z, Int W) {
    if (sub(z.x, z.y) == -W) return z;
    return {z.y, z.x};
}

AnchorResult choose_anchor(const RegularDomain& dom, std::optional<Int> min_level, Int skip) {
    AnchorResult res;
    if (dom.empty()) {
        res.reason = "X^e is empty";
        return res;
    }
    if (!dom.cls.has_rho_bar) {
        res.reason = "the twist vanishes; rho_bar is undefined";
        return res;
    }
    const Int lo = std::max(dom.s_min, min_level.value_or(dom.s_min));
    for (Int x0 = ceil_div(lo, Int{2}); 2 * x0 <= dom.s_max; ++x0) {
        const LatticePoint z{x0, x0};
        const ReturnOrbit o = return_map_Phi(z, dom.lambda, &dom.cls);
        if (o.regular && o.is_fixed && skip-- == 0) {
            res.frame = CoordinateFrame{dom, z, dom.cls.rho_bar};
            return res;
        }
    }
    res.reason = "no fixed point of Phi on Fix G in X^e; retry with a smaller lambda";
    return res;
}

}  // namespace lattice_rotor
