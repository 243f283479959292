// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace lattice_rotor {

// Lattice coordinates. Every operation that could leave the 64-bit range is
// checked and throws IntegerOverflow instead of wrapping.
using Int = std::int64_t;
using Wide = __int128;

using Integer = mpz_class;
using Rational = mpq_class;

class IntegerOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

[[noreturn]] void throw_overflow(const char* where);

inline Int narrow(Wide v, const char* where) {
    if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN)) {
        throw_overflow(where);
    }
    return static_cast<Int>(v);
}

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
    return r;
}

// Floor and ceiling of num/den for den > 0, rounding toward -inf / +inf.
inline Int floor_div(Int num, Int den) {
    Int q = num / den;
    if ((num % den != 0) && (num < 0)) --q;
    return q;
}

inline Int ceil_div(Int num, Int den) {
    Int q = num / den;
    if ((num % den != 0) && (num > 0)) ++q;
    return q;
}

inline bool fits_int(Wide v) { return v >= INT64_MIN && v <= INT64_MAX; }

// 128-bit division is a library call; most operands fit in 64 bits.
inline Wide floor_div(Wide num, Wide den) {
    if (fits_int(num) && fits_int(den)) return floor_div(static_cast<Int>(num), static_cast<Int>(den));
    Wide q = num / den;
    if ((num % den != 0) && (num < 0)) --q;
    return q;
}

inline Wide ceil_div(Wide num, Wide den) {
    if (fits_int(num) && fits_int(den)) return ceil_div(static_cast<Int>(num), static_cast<Int>(den));
    Wide q = num / den;
    if ((num % den != 0) && (num > 0)) ++q;
    return q;
}

// Euclidean residue in [0, m) for m > 0.
inline Int mod_floor(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline Int abs_checked(Int a) {
    if (a == INT64_MIN) throw_overflow("abs");
    return a < 0 ? -a : a;
}

Integer to_integer(Int v);
// Canonical num/den.
Rational make_q(const Integer& num, const Integer& den);
Rational make_q(Int num, Int den = 1);
Int to_int(const Integer& v, const char* where);
Integer floor_q(const Rational& r);
Integer ceil_q(const Rational& r);
Rational frac_q(const Rational& r);
Integer isqrt(const Integer& n);
Int isqrt(Int n);

}  // namespace lattice_rotor
