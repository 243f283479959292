// SPDX-License-Identifier: MIT
#include <cmath>
#include <stdexcept>

#include "lattice_rotor/hamiltonian.hpp"

namespace lattice_rotor {

namespace {

using Real = long double;

Real floor_sqrt_real(Real x) {
    Real s = std::floor(std::sqrt(x));
    while ((s + 1) * (s + 1) <= x) s += 1;
    while (s * s > x) s -= 1;
    return s;
}

void check_b(double b) {
    if (!(b >= 0.0 && b < 1.0)) throw std::domain_error("b must lie in [0,1)");
}

}  // namespace

AsymptoticPoint make_asymptotic_point(Int v_k, double b) {
    check_b(b);
    if (v_k < 1) throw std::domain_error("v_k must be positive");
    AsymptoticPoint pt;
    pt.v_k = v_k;
    pt.b = b;
    const Real root = static_cast<Real>(v_k) + b;
    pt.alpha = static_cast<double>(root * root);
    const Real half = root / std::sqrt(2.0L);
    pt.a = static_cast<double>(half - std::floor(half));
    return pt;
}

double asymptotic_form(double b) {
    check_b(b);
    return std::pow(2.0 * b + 1.0, 1.5) / 3.0 - std::sqrt(2.0 * b);
}

double epsilon_b(double b, Int v_k) {
    check_b(b);
    if (v_k < 2) throw std::domain_error("epsilon_b needs v_k >= 2");
    const Real root = static_cast<Real>(v_k) + b;
    const Real alpha = root * root;
    const Real v1 = std::floor(root / std::sqrt(2.0L));
    auto f = [&](Real x) { return std::sqrt(alpha - x * x) / (x * x); };
    // Antiderivative of f.
    auto F = [&](Real x) { return -std::sqrt(alpha - x * x) / x - std::asin(x / root); };
    Real sum = 0;
    for (Int n = static_cast<Int>(v1) + 1; n <= v_k - 1; ++n) {
        const Real x = static_cast<Real>(n);
        sum += f(x) - (F(x + 0.5L) - F(x - 0.5L));
    }
    return static_cast<double>(std::pow(static_cast<Real>(v_k), 1.5L) * sum);
}

std::pair<double, double> epsilon_bounds(double b) {
    check_b(b);
    const double lo = 1.0 / (36.0 * std::sqrt(3.0 * (b + 1.0)));
    const double hi = (1.0 / 12.0) / std::sqrt(b + 1.0) * (2.0 * b + 3.0) / (2.0 * b + 2.0);
    return {lo, hi};
}

double scaled_period_deviation(Int v_k, double b) {
    const AsymptoticPoint pt = make_asymptotic_point(v_k, b);
    const Real t = period_T_real(pt.alpha);
    return static_cast<double>(std::pow(static_cast<Real>(v_k), 1.5L) * (t - std::acos(-1.0L)) / 4);
}

double scaled_T_prime(Int v_k, double b) {
    const Real alpha = make_asymptotic_point(v_k, b).alpha;
    const Real v1 = floor_sqrt_real(alpha / 2);
    const Real w = 2 * v1 + 1;
    Real sum = 0;
    for (Int n = static_cast<Int>(v1) + 1; n <= v_k; ++n) {
        const Real nn = static_cast<Real>(n) * n;
        const Real s = floor_sqrt_real(alpha - nn);
        sum += 1.0L / ((4 * nn - 1) * (2 * s + 1));
    }
    const Real t_prime = 4 * (1 / (w * w) - 4 * sum);
    return static_cast<double>(w * w * t_prime / 2);
}

double rho_bar_leading_order(Int v_k, double b) {
    check_b(b);
    if (b == 0.0) throw std::domain_error("leading-order rho_bar needs b > 0");
    return std::sqrt(static_cast<double>(v_k)) / 2.0 / (1.0 / std::sqrt(2.0 * b) - std::sqrt(2.0 * b + 1.0));
}

}  // namespace lattice_rotor
