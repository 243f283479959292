// SPDX-License-Identifier: MIT
#include <algorithm>

#include "lattice_rotor/parallel.hpp"
#include "lattice_rotor/return_map.hpp"

namespace lattice_rotor {

namespace {

LatticePoint from_level(Int s, Int d) { return {(s + d) / 2, (s - d) / 2}; }

// Lowest d >= -W with d = s mod 2.
Int first_d(Int s, Int W) { return mod_floor(s + W, 2) == 0 ? -W : -W + 1; }

struct LevelVerdict {
    bool regular = true;
    Wide worst_gap = -1;  // largest distance (times q) of an irregular point to the class boundary
};

LevelVerdict check_level(Int s, const PolygonClass& cls, const RotationParameter& lam) {
    LevelVerdict out;
    const Int W = cls.W();
    const Wide lo = static_cast<Wide>(cls.e.e) * lam.q();
    const Wide hi = static_cast<Wide>(cls.e.interval_end) * lam.q();
    for (Int d = first_d(s, W); d < W; d += 2) {
        const LatticePoint z = from_level(s, d);
        bool ok = box_of(z, lam) == BoxIndex{cls.v1, cls.v1} && in_X(z, lam);
        if (ok) ok = return_map_Phi(z, lam, &cls).regular;
        if (!ok) {
            out.regular = false;
            const Wide h = scaled_hamiltonian(z, lam);
            out.worst_gap = std::max(out.worst_gap, std::min(h - lo, hi - h));
        }
    }
    return out;
}

}  // namespace

bool RegularDomain::contains(const LatticePoint& z) const {
    if (empty()) return false;
    const Int d = sub(z.x, z.y);
    const Int s = add(z.x, z.y);
    return -W <= d && d < W && s_min <= s && s <= s_max;
}

std::vector<LatticePoint> RegularDomain::points() const {
    std::vector<LatticePoint> out;
    if (empty()) return out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Int s = s_min; s <= s_max; ++s) {
        for (Int d = first_d(s, W); d < W; d += 2) out.push_back(from_level(s, d));
    }
    return out;
}

Rational RegularDomain::interval_ratio() const {
    // Each level spans W lambda in the Hamiltonian.
    const Rational span = make_q(mul(mul(level_count(), W), lambda.p()), lambda.q());
    return span / make_q(cls.e.interval_end - cls.e.e);
}

RegularDomain regular_domain_Xe(Int e, const RotationParameter& lam, DomainOptions opts) {
    RegularDomain dom;
    dom.cls = vertex_list(e);
    dom.lambda = lam;
    dom.W = dom.cls.W();
    const Int v1 = dom.cls.v1;
    const Wide W = dom.W, p = lam.p(), q = lam.q();

    // Inside box (v1, v1): q P = 2 v1^2 q + W (p s - 2 v1 q).
    auto level_bound = [&](Int value) { return q * (value - 2 * static_cast<Wide>(v1) * v1) + 2 * v1 * q * W; };
    dom.level_lo = narrow(floor_div(level_bound(e), W * p) + 1, "level_lo");
    dom.level_hi = narrow(ceil_div(level_bound(dom.cls.e.interval_end), W * p) - 1, "level_hi");
    const Int n_levels = dom.level_hi - dom.level_lo + 1;
    if (n_levels <= 0) throw std::runtime_error("lambda too large: class " + std::to_string(e) + " has no levels");

    auto note_gap = [&](const LevelVerdict& v) {
        if (v.worst_gap >= 0) {
            const Rational g = make_q(to_integer(narrow(v.worst_gap, "gap")), to_integer(lam.q()));
            if (g > dom.max_irregular_gap) dom.max_irregular_gap = g;
        }
    };

    if (n_levels <= opts.full_scan_levels) {
        std::vector<LevelVerdict> verdict(static_cast<std::size_t>(n_levels));
        parallel_for(verdict.size(), [&](std::size_t i) {
            verdict[i] = check_level(dom.level_lo + static_cast<Int>(i), dom.cls, lam);
        });
        Int best_len = 0, best_start = 0, run = 0;
        for (Int i = 0; i < n_levels; ++i) {
            const LevelVerdict& v = verdict[static_cast<std::size_t>(i)];
            note_gap(v);
            if (!v.regular) {
                ++dom.irregular_levels;
                run = 0;
                continue;
            }
            ++run;
            if (run > best_len) {
                best_len = run;
                best_start = i - run + 1;
            }
        }
        dom.scanned_levels = n_levels;
        dom.full_scan = true;
        if (best_len == 0) throw std::runtime_error("lambda too large: class " + std::to_string(e) + " has no regular level");
        dom.s_min = dom.level_lo + best_start;
        dom.s_max = dom.s_min + best_len - 1;
        return dom;
    }

    // Irregular levels sit within O(lambda) of the interval ends; scan from
    // each end until a run of regular levels is found.
    dom.full_scan = false;
    auto scan = [&](Int start, Int stepdir) {
        Int run = 0;
        for (Int s = start; dom.level_lo <= s && s <= dom.level_hi; s += stepdir) {
            const LevelVerdict v = check_level(s, dom.cls, lam);
            ++dom.scanned_levels;
            note_gap(v);
            if (v.regular) {
                if (++run == opts.edge_run) return s - stepdir * (opts.edge_run - 1);
            } else {
                ++dom.irregular_levels;
                run = 0;
            }
        }
        throw std::runtime_error("no regular run found at the edge of class " + std::to_string(e));
    };
    dom.s_min = scan(dom.level_lo, 1);
    dom.s_max = scan(dom.level_hi, -1);
    if (dom.s_max < dom.s_min) throw std::runtime_error("edge scans crossed for class " + std::to_string(e));
    return dom;
}

}  // namespace lattice_rotor
