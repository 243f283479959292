// SPDX-License-Identifier: MIT
#include <vector>

#include "lattice_rotor/hamiltonian.hpp"

namespace lattice_rotor {

namespace {

constexpr Int kEnumerationLimit = 10'000'000;

bool is_square(Int n) {
    if (n < 0) return false;
    const Int s = isqrt(n);
    return s * s == n;
}

// Exponents of primes = 1 and = 3 mod 4 in n, by trial division.
struct SplitFactorization {
    std::vector<Int> one_mod_four;
    std::vector<Int> three_mod_four;
};

SplitFactorization factor(Int n) {
    SplitFactorization f;
    auto take = [&](Int p) {
        Int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e == 0 || p == 2) return;
        (p % 4 == 1 ? f.one_mod_four : f.three_mod_four).push_back(e);
    };
    take(2);
    for (Int p = 3; p <= n / p; p += 2) take(p);
    if (n > 1) take(n);
    return f;
}

}  // namespace

bool is_critical(Int n) {
    if (n < 0) return false;
    if (n <= kEnumerationLimit) {
        for (Int a = 0; 2 * a * a <= n; ++a) {
            if (is_square(n - a * a)) return true;
        }
        return false;
    }
    for (Int c : factor(n).three_mod_four) {
        if (c % 2 != 0) return false;
    }
    return true;
}

std::vector<Int> critical_numbers_up_to(Int x) {
    std::vector<Int> out;
    if (x < 0) return out;
    std::vector<bool> mark(static_cast<std::size_t>(x) + 1, false);
    for (Int a = 0; a * a <= x; ++a) {
        for (Int b = a; a * a + b * b <= x; ++b) mark[static_cast<std::size_t>(a * a + b * b)] = true;
    }
    for (Int n = 0; n <= x; ++n) {
        if (mark[static_cast<std::size_t>(n)]) out.push_back(n);
    }
    return out;
}

Int count_E(Int x) { return static_cast<Int>(critical_numbers_up_to(x).size()); }

Int next_critical(Int e) {
    Int n = e + 1;
    while (!is_critical(n)) ++n;
    return n;
}

Int representations_r(Int n) {
    if (n < 1) throw std::domain_error("r(n) is defined for n >= 1");
    const SplitFactorization f = factor(n);
    Int r = 4;
    for (Int b : f.one_mod_four) r *= (b + 1);
    for (Int c : f.three_mod_four) {
        if (c % 2 != 0) return 0;
    }
    return r;
}

CriticalNumber make_critical(Int e) {
    if (!is_critical(e)) throw std::invalid_argument(std::to_string(e) + " is not a sum of two squares");
    CriticalNumber c;
    c.e = e;
    c.r = e == 0 ? 1 : representations_r(e);
    c.interval_end = next_critical(e);
    return c;
}

}  // namespace lattice_rotor
