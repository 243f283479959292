// SPDX-License-Identifier: MIT
#include <algorithm>
#include <atomic>
#include <mutex>
#include <unordered_set>

#include "lattice_rotor/parallel.hpp"
#include "lattice_rotor/statistics.hpp"

namespace lattice_rotor {

namespace {

struct Traced {
    std::vector<LatticePoint> orbit;
    bool escaped = false;
    std::string why;
};

Traced trace_orbit(const LatticePoint& seed, const RegularDomain& dom, Int max_period) {
    Traced t;
    LatticePoint z = seed;
    do {
        t.orbit.push_back(z);
        const ReturnOrbit o = return_map_Phi(z, dom.lambda, &dom.cls);
        if (!o.regular || !dom.contains(o.result)) {
            t.escaped = true;
            t.why = "orbit of (" + std::to_string(seed.x) + "," + std::to_string(seed.y) + ") leaves X^e after " +
                    std::to_string(t.orbit.size()) + " returns";
            return t;
        }
        z = o.result;
        if (static_cast<Int>(t.orbit.size()) > max_period) {
            t.escaped = true;
            t.why = "orbit exceeds " + std::to_string(max_period) + " returns";
            return t;
        }
    } while (z != seed);
    std::rotate(t.orbit.begin(), std::min_element(t.orbit.begin(), t.orbit.end()), t.orbit.end());
    return t;
}

}  // namespace

InvariantSet build_invariant_set(const RegularDomain& dom, Int m, InvariantSetOptions opts) {
    if (m <= 0) throw std::invalid_argument("m must be positive");
    InvariantSet set;
    set.m = m;
    const Rational& rb = dom.cls.rho_bar;
    if (!dom.cls.has_rho_bar) throw std::invalid_argument("class has no rho_bar");
    const Rational W = make_q(dom.W);
    const Rational reach_below = abs(rb) * W;  // levels of A under the anchor
    const Int margin = to_int(ceil_q(reach_below), "anchor margin") + opts.anchor_margin;

    AnchorResult anchor = choose_anchor(dom, add(dom.s_min, margin), opts.anchor_skip);
    if (!anchor.frame) {
        set.escaped = true;
        set.diagnostic = anchor.reason;
        return set;
    }
    set.frame = *anchor.frame;
    const Int two_x0 = mul(2, set.frame.z0.x);

    // nu = (s - 2 x0) / (2 W rho_bar) in [-1/2, m - 1/2]
    const Rational a = make_q(two_x0) - W * rb;
    const Rational b = make_q(two_x0) + W * rb * make_q(2 * m - 1);
    const Rational lo_r = rb > 0 ? a : b, hi_r = rb > 0 ? b : a;
    const Int s_lo = std::max(dom.s_min, to_int(ceil_q(lo_r), "A level"));
    const Int s_hi = std::min(dom.s_max, to_int(floor_q(hi_r), "A level"));
    if (to_int(ceil_q(lo_r), "A level") < dom.s_min || to_int(floor_q(hi_r), "A level") > dom.s_max) {
        set.escaped = true;
        set.diagnostic = "A does not fit inside X^e";
        return set;
    }

    std::vector<LatticePoint> seeds;
    for (const LatticePoint& z : dom.points()) {
        const Int s = z.x + z.y;
        if (s_lo <= s && s <= s_hi) seeds.push_back(z);
    }
    set.seed_count = static_cast<Int>(seeds.size());

    std::mutex mu;
    std::unordered_set<LatticePoint, LatticePointHash> visited;
    std::vector<std::vector<LatticePoint>> orbits;
    std::atomic<bool> escaped{false};
    std::string why;
    parallel_for(seeds.size(), [&](std::size_t i) {
        if (escaped.load(std::memory_order_relaxed)) return;
        {
            std::lock_guard lock(mu);
            if (visited.count(seeds[i]) != 0) return;
        }
        Traced t = trace_orbit(seeds[i], dom, opts.max_period);
        std::lock_guard lock(mu);
        if (t.escaped) {
            if (!escaped.exchange(true)) why = t.why;
            return;
        }
        // Another worker may have traced the same orbit meanwhile.
        if (visited.count(t.orbit.front()) != 0) return;
        for (const LatticePoint& p : t.orbit) visited.insert(p);
        orbits.push_back(std::move(t.orbit));
    });
    if (escaped) {
        set.escaped = true;
        set.diagnostic = why;
        return set;
    }
    std::sort(orbits.begin(), orbits.end(), [](const auto& u, const auto& v) { return u.front() < v.front(); });
    set.orbits = std::move(orbits);
    set.points.assign(visited.begin(), visited.end());
    std::sort(set.points.begin(), set.points.end());

    for (const auto& orb : set.orbits) {
        Int smin = orb.front().x + orb.front().y, smax = smin;
        for (const LatticePoint& p : orb) {
            smin = std::min(smin, p.x + p.y);
            smax = std::max(smax, p.x + p.y);
        }
        const Rational range = make_q(smax - smin, 2 * dom.W);
        if (range > set.max_orbit_rho_range) set.max_orbit_rho_range = range;
    }
    return set;
}

DistributionRun run_distribution_scan(Int v_k, Int m, int k_min, int k_max, InvariantSetOptions opts) {
    DistributionRun run;
    const Int e = mul(v_k, v_k);
    for (int k = k_min; k <= k_max; ++k) {
        const RotationParameter lam = RotationParameter::inverse_power_of_two(k);
        std::string line = "lambda=" + lam.str() + ": ";
        try {
            // Interior levels are not pre-scanned: every Phi step of the closure
            // is checked for regularity anyway.
            DomainOptions dopts;
            dopts.full_scan_levels = 0;
            const RegularDomain dom = regular_domain_Xe(e, lam, dopts);
            InvariantSet set = build_invariant_set(dom, m, opts);
            if (!set.escaped) {
                run.trace.push_back(line + "ok, " + std::to_string(set.points.size()) + " points");
                run.set = std::move(set);
                return run;
            }
            run.trace.push_back(line + "escape: " + set.diagnostic);
        } catch (const std::runtime_error& err) {
            run.trace.push_back(line + err.what());
        }
    }
    return run;
}

}  // namespace lattice_rotor
