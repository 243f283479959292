// SPDX-License-Identifier: MIT
#include "lattice_rotor/parallel.hpp"
#include "lattice_rotor/return_map.hpp"

namespace lattice_rotor {

namespace {

struct Tally {
    Int symmetric = 0;
    Int fixed = 0;
    Int irregular = 0;
    Int mismatches = 0;
};

Tally tally(const std::vector<LatticePoint>& pts, const RegularDomain& dom) {
    std::vector<ReturnOrbit> orbits(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { orbits[i] = return_map_Phi(pts[i], dom.lambda, &dom.cls); });
    Tally t;
    for (const ReturnOrbit& o : orbits) {
        if (!o.regular) ++t.irregular;
        if (!o.is_fixed) continue;
        ++t.fixed;
        // A fixed point is symmetric iff its orbit meets Fix G or Fix H.
        const bool direct = o.fix_witnesses > 0;
        if (direct) ++t.symmetric;
        if (o.regular && direct != o.is_symmetric_fixed) ++t.mismatches;
    }
    return t;
}

}  // namespace

DensityReport density_delta(const RegularDomain& dom) {
    DensityReport rep;
    rep.e = dom.cls.e.e;
    rep.lambda = dom.lambda;
    rep.formula = dom.cls.density_formula;
    rep.coprimality_ok = dom.cls.coprimality_ok;

    const std::vector<LatticePoint> fd = fundamental_domain(dom);
    if (fd.empty()) return rep;
    rep.populated = true;
    const Integer q = dom.cls.q;
    const Tally t = tally(fd, dom);
    rep.delta = make_q(to_integer(t.symmetric), q);
    rep.eta = make_q(to_integer(t.fixed), q);
    rep.irregular = t.irregular;
    rep.code_direct_mismatches = t.mismatches;

    const Tally all = tally(dom.points(), dom);
    const Integer n = to_integer(dom.size());
    rep.delta_domain = make_q(to_integer(all.symmetric), n);
    rep.eta_domain = make_q(to_integer(all.fixed), n);
    rep.matches_formula = rep.delta == rep.formula;
    return rep;
}

DensityReport density_delta(Int e, const RotationParameter& lam) {
    return density_delta(regular_domain_Xe(e, lam));
}

RotationParameter discover_lambda(Int e, int k_min, int k_max) {
    for (int k = k_min; k <= k_max; ++k) {
        const RotationParameter lam(1, Int{1} << k);
        RegularDomain dom;
        try {
            dom = regular_domain_Xe(e, lam);
        } catch (const std::runtime_error&) {
            continue;
        }
        const std::vector<LatticePoint> fd = fundamental_domain(dom);
        if (fd.empty()) continue;
        bool regular = true;
        for (const LatticePoint& z : fd) {
            if (!return_map_Phi(z, lam, &dom.cls).regular) {
                regular = false;
                break;
            }
        }
        if (regular) return lam;
    }
    throw std::runtime_error("no lambda = 1/2^k, k <= " + std::to_string(k_max) + ", fits class " + std::to_string(e));
}

}  // namespace lattice_rotor
