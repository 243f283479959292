// SPDX-License-Identifier: MIT
#include <cmath>

#include "lattice_rotor/hamiltonian.hpp"

namespace lattice_rotor {

Rational eval_P(const Rational& x) {
    const Integer f = floor_q(x);
    return Rational(f * f) + Rational(2 * f + 1) * (x - Rational(f));
}

Rational eval_P_inverse(const Rational& x) {
    if (x < 0) throw std::domain_error("P^{-1} needs a nonnegative argument");
    // floor(sqrt(x)) = isqrt(floor(x)) for x >= 0.
    const Integer s = isqrt(floor_q(x));
    Rational out = (x + Rational(s * (s + 1))) / Rational(2 * s + 1);
    out.canonicalize();
    return out;
}

double eval_P_real(double x) {
    const double f = std::floor(x);
    return f * f + (2.0 * f + 1.0) * (x - f);
}

double eval_P_inverse_real(double x) {
    if (x < 0) throw std::domain_error("P^{-1} needs a nonnegative argument");
    double s = std::floor(std::sqrt(x));
    if ((s + 1) * (s + 1) <= x) s += 1;
    if (s * s > x) s -= 1;
    return (x + s * (s + 1)) / (2.0 * s + 1.0);
}

double eval_P_inverse_via_root(double x) {
    if (x < 0) throw std::domain_error("P^{-1} needs a nonnegative argument");
    const double r = std::sqrt(x);
    const double fl = std::floor(r);
    const double fr = r - fl;
    return r - fr * (1.0 - fr) / (2.0 * fl + 1.0);
}

Rational eval_hamiltonian(const PlanePoint& z) { return eval_P(z.x) + eval_P(z.y); }

LatticePoint vector_field_w(const PlanePoint& z) {
    const Int fx = to_int(floor_q(z.x), "vector_field_w");
    const Int fy = to_int(floor_q(z.y), "vector_field_w");
    return {add(mul(2, fy), 1), sub(-1, mul(2, fx))};
}

bool on_Delta(const PlanePoint& z) {
    return z.x.get_den() == 1 || z.y.get_den() == 1;
}

Rational alt_hamiltonian(const PlanePoint& z, int sign) {
    if (sign == 1) return eval_P(z.x) + eval_P(z.x - z.y) + eval_P(z.y);
    if (sign == -1) return (eval_P(z.x) + eval_P(z.x + z.y) + eval_P(z.y)) / 2;
    throw std::invalid_argument("sign must be +1 or -1");
}

LatticePoint alt_vector_field(const PlanePoint& z, int sign) {
    auto fl = [](const Rational& r) { return to_int(floor_q(r), "alt_vector_field"); };
    const Int fx = fl(z.x);
    const Int fy = fl(z.y);
    if (sign == 1) {
        return {2 * (fy - fl(z.x - z.y)), -2 * (fx - fl(z.y - z.x))};
    }
    if (sign == -1) {
        const Int fs = fl(z.x + z.y);
        return {fy + fs + 1, -(fx + fs + 1)};
    }
    throw std::invalid_argument("sign must be +1 or -1");
}

}  // namespace lattice_rotor
