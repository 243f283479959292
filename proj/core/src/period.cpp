// SPDX-License-Identifier: MIT
#include <cmath>

#include "lattice_rotor/hamiltonian.hpp"

namespace lattice_rotor {

Rational period_T(const Rational& alpha) {
    if (alpha <= 0) throw std::domain_error("period_T needs alpha > 0");
    const Integer v1 = isqrt(floor_q(alpha / 2));
    const Integer vk = isqrt(floor_q(alpha));
    Rational eighth = eval_P_inverse(alpha / 2) / Rational(2 * v1 + 1);
    Rational sum = 0;
    for (Integer n = v1 + 1; n <= vk; ++n) {
        sum += eval_P_inverse(alpha - Rational(n * n)) / Rational(4 * n * n - 1);
    }
    eighth -= 2 * sum;
    Rational out = 8 * eighth;
    out.canonicalize();
    return out;
}

double period_T_real(double alpha) {
    if (alpha <= 0) throw std::domain_error("period_T needs alpha > 0");
    const auto v1 = static_cast<long long>(std::floor(std::sqrt(alpha / 2)));
    const auto vk = static_cast<long long>(std::floor(std::sqrt(alpha)));
    long double sum = 0;
    for (long long n = v1 + 1; n <= vk; ++n) {
        const long double nn = static_cast<long double>(n) * n;
        sum += eval_P_inverse_real(alpha - static_cast<double>(nn)) / (4.0L * nn - 1.0L);
    }
    const long double eighth = eval_P_inverse_real(alpha / 2) / (2.0L * v1 + 1.0L) - 2.0L * sum;
    return static_cast<double>(8.0L * eighth);
}

Rational period_T_prime(Int e) {
    if (!is_critical(e)) throw std::invalid_argument("T' is tabulated on critical numbers");
    const Int v1 = isqrt(e / 2);
    const Int vk = isqrt(e);
    Rational sum = 0;
    for (Int n = v1 + 1; n <= vk; ++n) {
        const Int s = isqrt(e - n * n);
        sum += make_q(Integer(1), Integer(4 * n * n - 1) * Integer(2 * s + 1));
    }
    Rational out = 4 * (make_q(1, (2 * v1 + 1) * (2 * v1 + 1)) - 4 * sum);
    out.canonicalize();
    return out;
}

Rational twist_K(Int e) {
    const Int w = 2 * isqrt(e / 2) + 1;
    Rational out = -make_q(w * w, 2) * period_T_prime(e);
    out.canonicalize();
    return out;
}

}  // namespace lattice_rotor
