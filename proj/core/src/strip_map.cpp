// SPDX-License-Identifier: MIT
#include <array>

#include "lattice_rotor/return_map.hpp"
#include "walker.hpp"

namespace lattice_rotor {

bool in_Lambda(const LatticePoint& z, const RotationParameter& lam) {
    const FourStep s = four_step(z, lam);
    return BoxIndex{s.m, s.n} != BoxIndex{s.d, s.c};
}

namespace {

// |lambda u - c| <= lambda r, i.e. |p u - c q| <= p r.
bool near_integer(Int u, Int c, Int r, const RotationParameter& lam) {
    Wide gap = static_cast<Wide>(lam.p()) * u - static_cast<Wide>(c) * lam.q();
    if (gap < 0) gap = -gap;
    return gap <= static_cast<Wide>(lam.p()) * r;
}

}  // namespace

bool in_Sigma(const LatticePoint& z, const RotationParameter& lam) {
    if (!in_Lambda(z, lam)) return false;
    // The window around (m, n) has radius lambda(|w|+2); the candidate integer
    // points are the corners of the box of z and its neighbours.
    const BoxIndex b = box_of(z, lam);
    for (Int m = b.m - 1; m <= b.m + 2; ++m) {
        for (Int n = b.n - 1; n <= b.n + 2; ++n) {
            const Int r = std::max(abs_checked(2 * n + 1), abs_checked(2 * m + 1)) + 2;
            if (near_integer(z.x, m, r, lam) && near_integer(z.y, n, r, lam)) return true;
        }
    }
    return false;
}

bool in_X(const LatticePoint& z, const RotationParameter& lam) {
    if (z.x < 0 || z.y < 0) return false;
    return in_return_domain(z, detail::apply_F_inverse4(z, lam), four_step(z, lam).image);
}

Wide scaled_hamiltonian(const LatticePoint& z, const RotationParameter& lam) {
    const Wide p = lam.p(), q = lam.q();
    const Wide m = lam.floor_mul(z.x), n = lam.floor_mul(z.y);
    return q * (m * m + n * n) + (2 * m + 1) * (p * z.x - m * q) + (2 * n + 1) * (p * z.y - n * q);
}

StripHop strip_map_Psi(const LatticePoint& z, const RotationParameter& lam, Direction dir,
                       Int max_transit) {
    if (z.x == 0 && z.y == 0) throw std::invalid_argument("the strip map is undefined at the origin");
    LatticePoint u = z;
    Int t = 0;
    if (dir == Direction::forward) {
        for (;;) {
            const detail::Run run = detail::translation_run(u, lam);
            const Int J = run.forward();
            u = detail::along(u, run.w, J);
            t = add(t, J);
            const FourStep s = four_step(u, lam);
            if (t >= 1 && BoxIndex{s.d, s.c} != BoxIndex{s.m, s.n}) return {u, t};
            if (t >= max_transit) throw std::runtime_error("strip map exceeded its transit cap");
            u = s.image;
            ++t;
        }
    }
    for (;;) {
        const detail::Run run = detail::translation_run(u, lam);
        const Int J = run.backward();
        u = detail::along(u, run.w, -J);
        t = add(t, J);
        const LatticePoint p = detail::apply_F_inverse4(u, lam);
        ++t;
        if (box_of(p, lam) != box_of(u, lam)) return {p, t};
        if (t >= max_transit) throw std::runtime_error("strip map exceeded its transit cap");
        u = p;
    }
}

StripHop strip_map_Psi_stepwise(const LatticePoint& z, const RotationParameter& lam, Direction dir,
                                Int max_transit) {
    if (z.x == 0 && z.y == 0) throw std::invalid_argument("the strip map is undefined at the origin");
    LatticePoint u = z;
    for (Int t = 1; t <= max_transit; ++t) {
        u = dir == Direction::forward ? apply_F_power(u, lam, 4) : apply_F_power(u, lam, -4);
        if (in_Lambda(u, lam)) return {u, t};
    }
    throw std::runtime_error("strip map exceeded its transit cap");
}

ReturnStep return_map_direct(const LatticePoint& z, const RotationParameter& lam, Int max_steps) {
    std::array<LatticePoint, 9> ring;
    auto at = [&](Int k) -> LatticePoint& { return ring[static_cast<std::size_t>(mod_floor(k, 9))]; };
    at(0) = z;
    for (Int k = -1; k >= -4; --k) at(k) = apply_F_inverse(at(k + 1), lam);
    for (Int k = 1; k <= 4; ++k) at(k) = apply_F(at(k - 1), lam);
    for (Int k = 1; k <= max_steps; ++k) {
        at(k + 4) = apply_F(at(k + 3), lam);
        if (in_return_domain(at(k), at(k - 4), at(k + 4))) return {at(k), k, false};
    }
    return {at(max_steps), max_steps, true};
}

std::string to_string(Irregularity irr) {
    switch (irr) {
        case Irregularity::none: return "regular";
        case Irregularity::seed_outside_X: return "seed outside X";
        case Irregularity::seed_in_Lambda: return "seed in Lambda";
        case Irregularity::image_in_Lambda: return "image in Lambda";
        case Irregularity::class_escape: return "orbit leaves the class";
        case Irregularity::hits_Sigma: return "orbit meets Sigma";
        case Irregularity::corner_transit: return "corner transit";
        case Irregularity::truncated: return "step cap reached";
    }
    return "unknown";
}

}  // namespace lattice_rotor
