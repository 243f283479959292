// SPDX-License-Identifier: MIT
#include <algorithm>
#include <array>
#include <limits>

#include "lattice_rotor/return_map.hpp"
#include "walker.hpp"

namespace lattice_rotor {

namespace {

constexpr Int kNever = std::numeric_limits<Int>::max();

struct StrandEvents {
    Int x_time = kNever;
    LatticePoint x_point;
    Int class_fail = kNever;
    Int sigma_fail = kNever;
    Int corner = kNever;
    std::vector<OrbitVertex> vertices;
    std::vector<Int> fix_times;
};

struct ClassBounds {
    Wide lo;  // q e
    Wide hi;  // q e'
};

OrbitVertex make_vertex(const LatticePoint& p, const BoxIndex& b, const BoxIndex& nb, Int t,
                        const RotationParameter& lam) {
    OrbitVertex v;
    v.point = p;
    v.box = b;
    v.next_box = nb;
    v.time = t;
    v.corner = b.m != nb.m && b.n != nb.n;
    v.integer_x = b.m != nb.m;
    const Int line = v.integer_x ? std::max(b.m, nb.m) : std::max(b.n, nb.n);
    const Int coord = v.integer_x ? p.x : p.y;
    const Int other = v.integer_x ? p.y : p.x;
    v.type = lam.floor_mul(abs_checked(other));
    v.offset = sub(coord, lam.ceil_div_by(line));
    v.sigma = mod_floor(v.offset, 2 * v.type + 1);
    return v;
}

// Walks the F^4 orbit of `start` through closed-form runs, over strand times
// t_min-free window [0, t_limit], stopping at the first point of X with
// t >= t_min. `pred` is F^-4(start).
StrandEvents walk_strand(const LatticePoint& start, const LatticePoint& pred_start,
                         const RotationParameter& lam, Int t_min, Int t_limit,
                         const ClassBounds* bounds, bool record_vertices) {
    StrandEvents ev;
    LatticePoint u = start;
    LatticePoint pred = pred_start;
    Int t = 0;
    while (t <= t_limit) {
        const detail::Run run = detail::translation_run(u, lam);
        const Int J = run.forward();
        const Int jmax = std::min<Int>(J, t_limit - t);
        const LatticePoint& w = run.w;

        if (bounds != nullptr && ev.class_fail == kNever) {
            const Wide h = scaled_hamiltonian(u, lam);  // constant along the run
            if (!(bounds->lo < h && h < bounds->hi)) ev.class_fail = t;
        }

        // Fix G: x - y = 0; Fix H: 2x = n, with n constant along the run.
        const Int d0 = sub(u.x, u.y);
        const Int delta = sub(w.x, w.y);
        if (delta != 0) {
            if (d0 % delta == 0) {
                const Int j = -d0 / delta;
                if (j >= 0 && j <= jmax) ev.fix_times.push_back(t + j);
            }
        } else if (d0 == 0) {
            for (Int j = 0; j <= jmax; ++j) ev.fix_times.push_back(t + j);
        }
        {
            const Int num = sub(run.box.n, mul(2, u.x));
            const Int den = mul(2, w.x);
            if (num % den == 0) {
                const Int j = num / den;
                if (j >= 0 && j <= jmax) ev.fix_times.push_back(t + j);
            }
        }

        const LatticePoint end = detail::along(u, w, J);
        const bool needs_step = jmax == J;
        FourStep step{};
        if (needs_step) step = four_step(end, lam);

        // First X point in [0, jmax] with t + j >= t_min.
        auto pred_of = [&](Int j) { return j == 0 ? pred : detail::along(u, w, j - 1); };
        auto succ_of = [&](Int j) { return j < J ? detail::along(u, w, j + 1) : step.image; };
        std::array<Int, 6> cand{0, J, 0, 0, 0, 0};
        std::size_t nc = 2;
        if (delta != 0) {
            const Int s = delta > 0 ? 1 : -1;
            const Int j0 = floor_div(-d0 * s, delta * s);
            for (Int j = j0 - 1; j <= j0 + 2; ++j) cand[nc++] = j;
        }
        std::sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(nc));
        for (std::size_t i = 0; i < nc && ev.x_time == kNever; ++i) {
            const Int j = cand[i];
            if (j < 0 || j > jmax || t + j < t_min) continue;
            const LatticePoint p = detail::along(u, w, j);
            if (p.x < 0 || p.y < 0) continue;
            if (in_return_domain(p, pred_of(j), succ_of(j))) {
                ev.x_time = t + j;
                ev.x_point = p;
            }
        }
        if (ev.x_time != kNever) break;
        if (!needs_step) break;

        const BoxIndex nb{step.d, step.c};
        if (nb != run.box) {
            const Int tv = t + J;
            if (in_Sigma(end, lam) && ev.sigma_fail == kNever) ev.sigma_fail = tv;
            if (nb.m != run.box.m && nb.n != run.box.n && ev.corner == kNever) ev.corner = tv;
            if (record_vertices) ev.vertices.push_back(make_vertex(end, run.box, nb, tv, lam));
        }
        pred = end;
        u = step.image;
        t = t + J + 1;
    }
    return ev;
}

}  // namespace

ReturnOrbit return_map_Phi(const LatticePoint& z, const RotationParameter& lam, const PolygonClass* cls,
                           Int max_steps) {
    ReturnOrbit out;
    out.seed = z;
    if (cls != nullptr) out.e = cls->e.e;
    if (!in_X(z, lam)) {
        out.irregularity = Irregularity::seed_outside_X;
        out.diagnostic = to_string(out.irregularity);
        return out;
    }

    // F^{r-4}(z) for r = 0..3 and F^r(z).
    std::array<LatticePoint, 8> pts;
    pts[4] = z;
    for (int k = 3; k >= 0; --k) pts[static_cast<std::size_t>(k)] = apply_F_inverse(pts[static_cast<std::size_t>(k + 1)], lam);
    for (int k = 5; k < 8; ++k) pts[static_cast<std::size_t>(k)] = apply_F(pts[static_cast<std::size_t>(k - 1)], lam);

    ClassBounds bounds{};
    if (cls != nullptr) {
        bounds.lo = static_cast<Wide>(cls->e.e) * lam.q();
        bounds.hi = static_cast<Wide>(cls->e.interval_end) * lam.q();
    }
    const ClassBounds* bp = cls != nullptr ? &bounds : nullptr;

    std::array<StrandEvents, 4> ev;
    Int best = kNever;
    Int best_r = -1;
    const Int cap = max_steps / 4;
    for (int r : {1, 0, 2, 3}) {
        const Int limit = best == kNever ? cap : std::min<Int>(cap, (best - r) / 4);
        auto& e = ev[static_cast<std::size_t>(r)];
        e = walk_strand(pts[static_cast<std::size_t>(4 + r)], pts[static_cast<std::size_t>(r)], lam,
                        r == 0 ? 1 : 0, limit, bp, r == 0);
        if (e.x_time != kNever) {
            const Int k = 4 * e.x_time + r;
            if (k < best) {
                best = k;
                best_r = r;
            }
        }
    }
    if (best == kNever) {
        out.irregularity = Irregularity::truncated;
        out.diagnostic = "no return to X within " + std::to_string(max_steps) + " steps";
        return out;
    }
    out.tau = best;
    out.result = ev[static_cast<std::size_t>(best_r)].x_point;
    out.is_fixed = out.result == z;

    // Events count when they fall inside the return orbit, 0 <= 4t + r <= tau.
    auto within = [&](Int t, int r) { return t != kNever && 4 * t + r <= out.tau; };
    for (int r = 0; r < 4; ++r) {
        for (Int t : ev[static_cast<std::size_t>(r)].fix_times) {
            if (4 * t + r < out.tau) ++out.fix_witnesses;
        }
    }
    for (const OrbitVertex& v : ev[0].vertices) {
        if (v.time >= 1 && 4 * v.time <= out.tau) out.vertices.push_back(v);
    }

    auto flag = [&](Irregularity irr, std::string msg) {
        if (out.irregularity == Irregularity::none) {
            out.irregularity = irr;
            out.diagnostic = std::move(msg);
        }
    };
    if (in_Lambda(z, lam)) flag(Irregularity::seed_in_Lambda, "seed is a transition point");
    if (in_Lambda(out.result, lam)) flag(Irregularity::image_in_Lambda, "image is a transition point");
    for (int r = 0; r < 4; ++r) {
        const auto& e = ev[static_cast<std::size_t>(r)];
        if (within(e.corner, r)) flag(Irregularity::corner_transit, "diagonal box change at step " + std::to_string(4 * e.corner + r));
        if (within(e.sigma_fail, r)) flag(Irregularity::hits_Sigma, "orbit meets Sigma at step " + std::to_string(4 * e.sigma_fail + r));
        if (cls != nullptr && within(e.class_fail, r)) {
            flag(Irregularity::class_escape, "orbit leaves the class interval at step " + std::to_string(4 * e.class_fail + r));
        }
    }
    out.regular = out.irregularity == Irregularity::none;

    if (z.x != 0 || z.y != 0) {
        const StripHop back = strip_map_Psi(z, lam, Direction::backward, cap);
        const FourStep s = four_step(back.vertex, lam);
        out.pre_vertex = make_vertex(back.vertex, BoxIndex{s.m, s.n}, BoxIndex{s.d, s.c}, -back.transit, lam);
    }
    if (out.pre_vertex) {
        out.sigma.push_back(out.pre_vertex->sigma);
        out.gamma.push_back(out.pre_vertex->offset);
    }
    for (const OrbitVertex& v : out.vertices) {
        out.sigma.push_back(v.sigma);
        out.gamma.push_back(v.offset);
    }
    if (cls != nullptr && out.regular) out.is_symmetric_fixed = symmetric_fixed_point_test(out, *cls);
    return out;
}

bool symmetric_fixed_point_test(const ReturnOrbit& orbit, const PolygonClass& cls) {
    const std::size_t k = static_cast<std::size_t>(cls.k);
    if (!orbit.regular || orbit.sigma.size() != 2 * k) return false;
    const Int vk = cls.vk;
    return orbit.sigma[0] == orbit.sigma[1] && mod_floor(2 * orbit.sigma[k] - vk, 2 * vk + 1) == 0;
}

}  // namespace lattice_rotor
