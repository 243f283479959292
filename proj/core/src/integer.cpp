// SPDX-License-Identifier: MIT
#include "lattice_rotor/integer.hpp"

#include <cmath>
#include <string>

namespace lattice_rotor {

void throw_overflow(const char* where) {
    throw IntegerOverflow(std::string("64-bit lattice arithmetic overflow in ") + where);
}

Integer to_integer(Int v) {
    static_assert(sizeof(long) == sizeof(Int), "expects an LP64 platform");
    return Integer(static_cast<long>(v));
}

Rational make_q(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_q(Int num, Int den) { return make_q(to_integer(num), to_integer(den)); }

Int to_int(const Integer& v, const char* where) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) throw_overflow(where);
    return static_cast<Int>(mpz_get_si(v.get_mpz_t()));
}

Integer floor_q(const Rational& r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

Integer ceil_q(const Rational& r) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

Rational frac_q(const Rational& r) {
    return r - Rational(floor_q(r));
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of a negative number");
    Integer out;
    mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

Int isqrt(Int n) {
    if (n < 0) throw std::domain_error("isqrt of a negative number");
    Int s = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
    while (s > 0 && static_cast<Wide>(s) * s > n) --s;
    while (static_cast<Wide>(s + 1) * (s + 1) <= n) ++s;
    return s;
}

}  // namespace lattice_rotor
