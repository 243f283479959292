// SPDX-License-Identifier: MIT
#include <numeric>

#include "lattice_rotor/hamiltonian.hpp"

namespace lattice_rotor {

Rational representative_alpha(Int e) {
    const Int next = next_critical(e);
    const Rational half = make_q(2 * e + 1, 2);
    if (half < Rational(to_integer(next))) return half;
    return make_q(e + next, 2);
}

Int class_of(const Rational& alpha) {
    if (alpha < 0) throw std::domain_error("class_of needs alpha >= 0");
    Int n = to_int(floor_q(alpha), "class_of");
    while (!is_critical(n)) --n;
    return n;
}

PolygonClass vertex_list(Int e) { return vertex_list(make_critical(e)); }

PolygonClass vertex_list(const CriticalNumber& ce) {
    PolygonClass pc;
    pc.e = ce;
    pc.representative_alpha = representative_alpha(ce.e);
    for (const OctantVertex& v : first_octant_vertices(pc.representative_alpha)) {
        pc.vertex_list.push_back(v.type);
    }
    pc.k = static_cast<Int>(pc.vertex_list.size());
    pc.v1 = isqrt(ce.e / 2);
    pc.vk = isqrt(ce.e);
    if (pc.k == 0 || pc.vertex_list.front() != pc.v1 || pc.vertex_list.back() != pc.vk) {
        throw std::logic_error("vertex list of class " + std::to_string(ce.e) + " is malformed");
    }

    for (Int j = 0; j < pc.k; ++j) {
        if (j == 0 || pc.vertex_list[j] != pc.vertex_list[j - 1]) pc.iota.push_back(j + 1);
    }

    // Types along the quarter turn j = 1..2k-1, reflected about the x-axis vertex.
    auto type = [&](Int j) { return j <= pc.k ? pc.vertex_list[j - 1] : pc.vertex_list[2 * pc.k - j - 1]; };
    auto odd = [](Int v) { return Integer(2 * v + 1); };
    for (Int j = 1; j <= 2 * pc.k - 1; ++j) {
        Integer qj;
        if (j == 1) {
            qj = odd(pc.v1) * odd(pc.v1);
        } else if (type(j) == type(j - 1)) {
            qj = pc.q_j.back();
        } else {
            mpz_lcm(qj.get_mpz_t(), pc.q_j.back().get_mpz_t(), Integer(odd(type(j)) * odd(type(j - 1))).get_mpz_t());
        }
        pc.q_j.push_back(qj);
        pc.p_j.push_back(qj / odd(type(j)));
    }
    pc.q = pc.q_j.back();

    const Integer w = odd(pc.v1);
    pc.L = pc.q / w;
    pc.lattice_basis = {{pc.L, pc.L}, {(pc.L - w) / 2, (pc.L + w) / 2}};

    pc.T_prime = period_T_prime(ce.e);
    pc.twist = twist_K(ce.e);
    pc.has_rho_bar = pc.twist != 0;
    if (pc.has_rho_bar) {
        pc.rho_bar = 1 / pc.twist;
        pc.rho_bar.canonicalize();
    }
    pc.rho_tilde = make_q(pc.q, w * w);
    pc.density_formula = make_q(Integer(1), odd(pc.vk) * odd(pc.v1));

    auto coprime_from = [&](Int vi) {
        for (Int vj : pc.vertex_list) {
            if (vj != vi && std::gcd(2 * vi + 1, 2 * vj + 1) != 1) return false;
        }
        return true;
    };
    pc.coprimality_ok = coprime_from(pc.v1) || coprime_from(pc.vk);
    return pc;
}

}  // namespace lattice_rotor
