// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lattice_rotor/integer.hpp"

namespace lattice_rotor {

// lambda = p/q in lowest terms with 0 < lambda < 2.
class RotationParameter {
public:
    RotationParameter(Int p, Int q);

    // Accepts "p/q" or "1/2^k"; anything else (decimals included) is rejected.
    static RotationParameter parse(const std::string& text);
    static RotationParameter inverse_power_of_two(int k);

    Int p() const { return p_; }
    Int q() const { return q_; }
    Rational value() const { return Rational(to_integer(p_), to_integer(q_)); }
    double as_double() const { return static_cast<double>(p_) / static_cast<double>(q_); }
    std::string str() const;

    // floor(lambda * x) and ceil(lambda * x), exact.
    Int floor_mul(Int x) const {
        return narrow(floor_div(static_cast<Wide>(p_) * x, static_cast<Wide>(q_)), "floor_mul");
    }
    Int ceil_mul(Int x) const {
        return narrow(ceil_div(static_cast<Wide>(p_) * x, static_cast<Wide>(q_)), "ceil_mul");
    }
    // Smallest integer x with lambda * x >= c, i.e. ceil(c / lambda).
    Int ceil_div_by(Int c) const {
        return narrow(ceil_div(static_cast<Wide>(c) * q_, static_cast<Wide>(p_)), "ceil_div_by");
    }

    // Rotation number arccos(lambda/2) / 2pi.
    double nu() const;
    // First-order recurrence time: least k > 4 whose k*nu is at least as close
    // to an integer as 4*nu is.
    Int t_star() const;

    bool operator==(const RotationParameter&) const = default;

private:
    Int p_;
    Int q_;
};

struct LatticePoint {
    Int x = 0;
    Int y = 0;

    auto operator<=>(const LatticePoint&) const = default;
    LatticePoint operator+(const LatticePoint& o) const { return {add(x, o.x), add(y, o.y)}; }
    LatticePoint operator-(const LatticePoint& o) const { return {sub(x, o.x), sub(y, o.y)}; }
};

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& z) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(z.x) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(z.y) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

inline LatticePoint scale(const LatticePoint& v, Int k) {
    return {mul(v.x, k), mul(v.y, k)};
}

LatticePoint apply_F(const LatticePoint& z, const RotationParameter& lam);
LatticePoint apply_F_inverse(const LatticePoint& z, const RotationParameter& lam);
LatticePoint apply_F_power(LatticePoint z, const RotationParameter& lam, Int k);

LatticePoint reversor_G(const LatticePoint& z);
LatticePoint reversor_H(const LatticePoint& z, const RotationParameter& lam);
bool in_fix_G(const LatticePoint& z);
bool in_fix_H(const LatticePoint& z, const RotationParameter& lam);

inline constexpr Int kDefaultStepCap = 1'000'000'000;

struct OrbitRecord {
    LatticePoint seed;
    Int period = 0;            // minimal period; meaningless when truncated
    Int steps_taken = 0;
    Rational normalized_period;  // lambda * T / pi, stored without the 1/pi
    bool symmetric = false;
    std::vector<LatticePoint> witnesses;  // first two hits of Fix G or Fix H
    Int witness_count = 0;               // all hits over one period
    Int revolutions = 0;                 // visits to the return domain X per period
    bool truncated = false;

    // A symmetric orbit that goes round the origin once, i.e. meets X once.
    bool minimal() const { return !truncated && symmetric && revolutions == 1; }
};

// Membership of u in the return domain X given F^-4(u) and F^4(u): first
// quadrant, and no farther from Fix G than the image, strictly closer than the
// preimage. Distances to Fix G are compared as |x - y|.
bool in_return_domain(const LatticePoint& u, const LatticePoint& back4, const LatticePoint& fwd4);

OrbitRecord orbit_period(const LatticePoint& z, const RotationParameter& lam,
                         Int max_steps = kDefaultStepCap);

// The four intermediate roundings behind F^4. With m = floor(lambda x) and
// n = floor(lambda y):
//   a+1 = ceil(lambda (y-m)),  b+1 = ceil(lambda (x+a+1)),
//   c = floor(lambda (y-m-b-1)), d = floor(lambda (x+a+c+1)),
// and F^4(x,y) = (x+a+c+1, y-m-b-1), which lies in box (d, c).
struct FourStep {
    Int m, n, a, b, c, d;
    LatticePoint image;
};
FourStep four_step(const LatticePoint& z, const RotationParameter& lam);

// F^4(z) - z in lattice units, by four applications of F.
LatticePoint fourth_iterate_field_v(const LatticePoint& z, const RotationParameter& lam);

// Box index (floor(lambda x), floor(lambda y)) and the auxiliary field there.
struct BoxIndex {
    Int m = 0;
    Int n = 0;
    LatticePoint w_value() const { return {add(mul(2, n), 1), sub(-1, mul(2, m))}; }
    auto operator<=>(const BoxIndex&) const = default;
};
BoxIndex box_of(const LatticePoint& z, const RotationParameter& lam);

struct FieldAgreementReport {
    Rational r;
    RotationParameter lambda{1, 1};
    Rational mu1;
    Int sample_count = 0;  // lattice points of A(r, lambda) other than the origin
    Int agree_count = 0;
};

inline constexpr Int kDefaultScanBudget = 400'000'000;

// Exhaustive scan of |x|,|y| < r/lambda. Throws std::length_error over budget.
FieldAgreementReport measure_field_agreement(const Rational& r, const RotationParameter& lam,
                                             Int budget = kDefaultScanBudget);

}  // namespace lattice_rotor
