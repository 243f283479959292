// SPDX-License-Identifier: MIT
#include "lattice_rotor/core_map.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <regex>

namespace lattice_rotor {

RotationParameter::RotationParameter(Int p, Int q) {
    if (q <= 0 || p <= 0) throw std::invalid_argument("lambda must be a positive fraction p/q");
    Int g = std::gcd(p, q);
    p_ = p / g;
    q_ = q / g;
    if (static_cast<Wide>(p_) >= 2 * static_cast<Wide>(q_)) {
        throw std::invalid_argument("lambda must satisfy 0 < lambda < 2");
    }
}

RotationParameter RotationParameter::inverse_power_of_two(int k) {
    if (k < 0 || k > 62) throw std::invalid_argument("1/2^k needs 0 <= k <= 62");
    return RotationParameter(1, Int{1} << k);
}

RotationParameter RotationParameter::parse(const std::string& text) {
    static const std::regex pow2(R"(^\s*1/2\^([0-9]{1,2})\s*$)");
    static const std::regex frac(R"(^\s*([0-9]{1,18})/([0-9]{1,18})\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pow2)) return inverse_power_of_two(std::stoi(m[1].str()));
    if (std::regex_match(text, m, frac)) {
        Int p = std::stoll(m[1].str());
        Int q = std::stoll(m[2].str());
        if (p == 0 || q == 0) throw std::invalid_argument("lambda numerator and denominator must be nonzero");
        return RotationParameter(p, q);
    }
    throw std::invalid_argument("lambda must be given as p/q or 1/2^k, got '" + text + "'");
}

std::string RotationParameter::str() const {
    return std::to_string(p_) + "/" + std::to_string(q_);
}

double RotationParameter::nu() const {
    return std::acos(as_double() / 2.0) / (2.0 * std::numbers::pi);
}

Int RotationParameter::t_star() const {
    const long double nu_l =
        std::acos(static_cast<long double>(p_) / static_cast<long double>(q_) / 2.0L) /
        (2.0L * std::numbers::pi_v<long double>);
    auto dist = [](long double v) { return std::fabs(v - std::nearbyint(v)); };
    const long double target = dist(4.0L * nu_l);
    for (Int k = 5;; ++k) {
        if (dist(static_cast<long double>(k) * nu_l) <= target) return k;
    }
}

LatticePoint apply_F(const LatticePoint& z, const RotationParameter& lam) {
    return {sub(lam.floor_mul(z.x), z.y), z.x};
}

LatticePoint apply_F_inverse(const LatticePoint& z, const RotationParameter& lam) {
    return {z.y, sub(lam.floor_mul(z.y), z.x)};
}

LatticePoint apply_F_power(LatticePoint z, const RotationParameter& lam, Int k) {
    if (k >= 0) {
        for (Int i = 0; i < k; ++i) z = apply_F(z, lam);
    } else {
        for (Int i = 0; i < -k; ++i) z = apply_F_inverse(z, lam);
    }
    return z;
}

LatticePoint reversor_G(const LatticePoint& z) { return {z.y, z.x}; }

LatticePoint reversor_H(const LatticePoint& z, const RotationParameter& lam) {
    return {sub(lam.floor_mul(z.y), z.x), z.y};
}

bool in_fix_G(const LatticePoint& z) { return z.x == z.y; }

bool in_fix_H(const LatticePoint& z, const RotationParameter& lam) {
    return mul(2, z.x) == lam.floor_mul(z.y);
}

bool in_return_domain(const LatticePoint& u, const LatticePoint& back4, const LatticePoint& fwd4) {
    if (u.x < 0 || u.y < 0) return false;
    auto dist = [](const LatticePoint& v) { return abs_checked(sub(v.x, v.y)); };
    const Int d = dist(u);
    return d <= dist(fwd4) && d < dist(back4);
}

OrbitRecord orbit_period(const LatticePoint& z, const RotationParameter& lam, Int max_steps) {
    if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
    OrbitRecord rec;
    rec.seed = z;

    // ring[k mod 9] holds u_k for the window k-4 .. k+4, so membership of u_k
    // in the return domain is decided without re-iterating.
    std::array<LatticePoint, 9> ring;
    auto at = [&](Int k) -> LatticePoint& { return ring[static_cast<std::size_t>(mod_floor(k, 9))]; };
    at(0) = z;
    for (Int k = -1; k >= -4; --k) at(k) = apply_F_inverse(at(k + 1), lam);
    for (Int k = 1; k <= 4; ++k) at(k) = apply_F(at(k - 1), lam);

    Int returns = 0;
    Int k = 0;
    for (;;) {
        const LatticePoint u = at(k);
        if (k > 0 && u == z) break;
        if (k == max_steps) break;
        if (in_fix_G(u) || in_fix_H(u, lam)) {
            if (rec.witnesses.size() < 2) rec.witnesses.push_back(u);
            ++rec.witness_count;
        }
        if (in_return_domain(u, at(k - 4), at(k + 4))) ++returns;
        at(k + 5) = apply_F(at(k + 4), lam);
        ++k;
    }
    rec.steps_taken = k;
    rec.truncated = !(k > 0 && at(k) == z);
    if (!rec.truncated) {
        rec.period = k;
        rec.normalized_period = make_q(mul(lam.p(), k), lam.q());
        rec.revolutions = returns;
        rec.symmetric = rec.witness_count > 0;
    }
    return rec;
}

FourStep four_step(const LatticePoint& z, const RotationParameter& lam) {
    FourStep s;
    s.m = lam.floor_mul(z.x);
    s.n = lam.floor_mul(z.y);
    s.a = lam.ceil_mul(sub(z.y, s.m)) - 1;
    s.b = lam.ceil_mul(add(add(z.x, s.a), 1)) - 1;
    const Int y4 = sub(sub(z.y, s.m), add(s.b, 1));
    s.c = lam.floor_mul(y4);
    const Int x4 = add(add(z.x, s.a), add(s.c, 1));
    s.d = lam.floor_mul(x4);
    s.image = {x4, y4};
    return s;
}

LatticePoint fourth_iterate_field_v(const LatticePoint& z, const RotationParameter& lam) {
    LatticePoint u = z;
    for (int i = 0; i < 4; ++i) u = apply_F(u, lam);
    return u - z;
}

BoxIndex box_of(const LatticePoint& z, const RotationParameter& lam) {
    return {lam.floor_mul(z.x), lam.floor_mul(z.y)};
}

}  // namespace lattice_rotor
