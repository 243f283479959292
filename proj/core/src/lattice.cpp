// SPDX-License-Identifier: MIT
#include <algorithm>
#include <map>
#include <unordered_map>

#include "lattice_rotor/parallel.hpp"
#include "lattice_rotor/return_map.hpp"

namespace lattice_rotor {

LatticeBasis lattice_basis(const PolygonClass& cls) {
    const Int W = cls.W();
    const Int l = to_int(cls.q, "lattice_basis") / W;
    return {{l, l}, {(l - W) / 2, (l + W) / 2}};
}

LatticeBasis lattice_basis_with_q(const PolygonClass& cls, Int q) {
    const Int W = cls.W();
    if (q % W != 0) throw std::invalid_argument("q must be a multiple of 2 v1 + 1");
    LatticeBasis b = lattice_basis(cls);
    b.L = {q / W, q / W};
    return b;
}

std::pair<Int, Int> congruence_key(const LatticePoint& z, const LatticeBasis& b) {
    const Wide D = b.det();
    const Wide alpha = static_cast<Wide>(z.x) * b.B.y - static_cast<Wide>(z.y) * b.B.x;
    const Wide beta = static_cast<Wide>(b.L.x) * z.y - static_cast<Wide>(b.L.y) * z.x;
    auto red = [&](Wide v) {
        Wide r = v % D;
        if (r < 0) r += D;
        return static_cast<Int>(r);
    };
    return {red(alpha), red(beta)};
}

std::vector<LatticePoint> fundamental_domain(const RegularDomain& dom) {
    std::vector<LatticePoint> out;
    if (dom.empty()) return out;
    const LatticeBasis b = lattice_basis(dom.cls);
    const Int D = b.det();
    // Least point of X^e on Fix G.
    const Int s0 = mod_floor(dom.s_min, 2) == 0 ? dom.s_min : dom.s_min + 1;
    const LatticePoint anchor{s0 / 2, s0 / 2};
    if (!dom.contains(anchor)) return out;

    // anchor + s L + t B has x - y in (-W, 0] and x + y in [s0, s0 + 3 q / W).
    const Int W = dom.W;
    const Int span = 3 * b.L.x;
    for (Int ds = 0; ds < span; ++ds) {
        for (Int dd = -W + 1; dd <= 0; ++dd) {
            if (mod_floor(ds + dd, 2) != 0) continue;
            const LatticePoint rel{(ds + dd) / 2, (ds - dd) / 2};
            const Wide alpha = static_cast<Wide>(rel.x) * b.B.y - static_cast<Wide>(rel.y) * b.B.x;
            const Wide beta = static_cast<Wide>(b.L.x) * rel.y - static_cast<Wide>(b.L.y) * rel.x;
            if (alpha < 0 || alpha >= D || beta < 0 || beta >= D) continue;
            const LatticePoint z = anchor + rel;
            if (!dom.contains(z)) return {};
            out.push_back(z);
        }
    }
    return out;
}

EquivarianceReport check_equivariance(const RegularDomain& dom, const LatticeBasis& basis,
                                      Int sample_count, Int span) {
    EquivarianceReport rep;
    const std::vector<LatticePoint> pts = dom.points();
    if (pts.empty() || sample_count <= 0) {
        rep.insufficient = true;
        return rep;
    }
    const std::size_t stride = std::max<std::size_t>(1, pts.size() / static_cast<std::size_t>(sample_count));
    std::vector<LatticePoint> base;
    for (std::size_t i = 0; i < pts.size(); i += stride) base.push_back(pts[i]);

    std::vector<LatticePoint> shifts;
    for (Int a = -span; a <= span; ++a) {
        for (Int c = -span; c <= span; ++c) {
            if (a != 0 || c != 0) shifts.push_back(scale(basis.L, a) + scale(basis.B, c));
        }
    }

    std::vector<LatticePoint> needed = base;
    for (const LatticePoint& z : base) {
        for (const LatticePoint& l : shifts) {
            if (dom.contains(z + l)) needed.push_back(z + l);
        }
    }
    std::sort(needed.begin(), needed.end());
    needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
    std::vector<LatticePoint> image(needed.size());
    parallel_for(needed.size(), [&](std::size_t i) {
        image[i] = return_map_Phi(needed[i], dom.lambda, &dom.cls).result;
    });
    auto phi = [&](const LatticePoint& z) {
        const auto it = std::lower_bound(needed.begin(), needed.end(), z);
        return image[static_cast<std::size_t>(it - needed.begin())];
    };

    const Int W = dom.W;
    for (const LatticePoint& z : base) {
        const LatticePoint fz = phi(z);
        for (const LatticePoint& l : shifts) {
            const LatticePoint zl = z + l;
            if (!dom.contains(zl)) continue;
            ++rep.pairs_checked;
            const LatticePoint diff = phi(zl) - fz - l;
            const bool ok = diff.x + diff.y == 0 && diff.x % W == 0;
            if (!ok) {
                ++rep.failures;
                if (!rep.counterexample) rep.counterexample = std::make_pair(z, l);
            }
        }
    }
    rep.insufficient = rep.pairs_checked == 0;
    rep.verdict = !rep.insufficient && rep.failures == 0;
    return rep;
}

CodeCensus code_census(const RegularDomain& dom, const std::vector<LatticePoint>& pts) {
    CodeCensus c;
    c.points = static_cast<Int>(pts.size());
    const LatticeBasis b = lattice_basis(dom.cls);
    std::vector<ReturnOrbit> orbits(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { orbits[i] = return_map_Phi(pts[i], dom.lambda, &dom.cls); });

    std::map<std::vector<Int>, std::pair<Int, Int>> code_to_class;
    std::map<std::pair<Int, Int>, std::vector<Int>> class_to_code;
    bool agree = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!orbits[i].regular) {
            ++c.irregular;
            continue;
        }
        const auto key = congruence_key(pts[i], b);
        const auto [it1, fresh1] = code_to_class.emplace(orbits[i].sigma, key);
        if (!fresh1 && it1->second != key) agree = false;
        const auto [it2, fresh2] = class_to_code.emplace(key, orbits[i].sigma);
        if (!fresh2 && it2->second != orbits[i].sigma) agree = false;
    }
    c.distinct_codes = static_cast<Int>(code_to_class.size());
    c.distinct_classes = static_cast<Int>(class_to_code.size());
    c.partitions_agree = agree && c.irregular == 0;
    return c;
}

}  // namespace lattice_rotor
