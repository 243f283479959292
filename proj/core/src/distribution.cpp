// SPDX-License-Identifier: MIT
#include <cmath>
#include <map>
#include <unordered_map>

#include "lattice_rotor/statistics.hpp"

namespace lattice_rotor {

double universal_R(double x) {
    if (x <= 0) return 0.0;
    return 1.0 - std::exp(-x) * (1.0 + x);
}

double universal_R_integral(double x) {
    if (x <= 0) return 0.0;
    return x + std::exp(-x) * (x + 2.0) - 2.0;
}

DistributionResult period_distribution(const InvariantSet& set) {
    DistributionResult r;
    const RegularDomain& dom = set.frame.domain;
    r.e = dom.cls.e.e;
    r.m = set.m;
    r.lambda = dom.lambda;
    r.N_bar = static_cast<Int>(set.points.size());
    r.seed_count = set.seed_count;
    r.orbit_count = static_cast<Int>(set.orbits.size());
    if (r.N_bar == 0) return r;
    const Int W = dom.W;

    std::unordered_map<LatticePoint, std::size_t, LatticePointHash> orbit_of;
    orbit_of.reserve(set.points.size());
    for (std::size_t i = 0; i < set.orbits.size(); ++i) {
        for (const LatticePoint& p : set.orbits[i]) orbit_of.emplace(p, i);
    }

    std::map<Int, Int> by_period;
    Int symmetric = 0;
    for (std::size_t i = 0; i < set.orbits.size(); ++i) {
        const auto& orb = set.orbits[i];
        const Int tau = static_cast<Int>(orb.size());
        by_period[tau] += tau;
        r.max_period = std::max(r.max_period, tau);
        for (std::size_t j = 0; j < orb.size(); ++j) {
            const LatticePoint& z = orb[j];
            const Int d = z.x - z.y;
            if (d == 0 || d == -W) ++r.g;
            // Phi(G z) = z  iff  G z = Phi^-1(z).
            const LatticePoint& prev = orb[(j + orb.size() - 1) % orb.size()];
            if (reversor_Ge(z, W) == prev) ++r.h;
        }
        const auto it = orbit_of.find(reversor_Ge(orb.front(), W));
        if (it != orbit_of.end() && it->second == i) symmetric += tau;
    }
    r.symmetric_fraction = make_q(symmetric, r.N_bar);
    r.reduction_superfluous = set.max_orbit_rho_range < dom.cls.rho_tilde;

    const double N = static_cast<double>(r.N_bar);
    r.kappa = (r.g + r.h) == 0 ? 0.0 : 2.0 * N / static_cast<double>(r.g + r.h);
    Int cum = 0;
    double integral_D = 0;
    for (const auto& [tau, count] : by_period) {
        cum += count;
        const double x = r.kappa > 0 ? static_cast<double>(tau) / r.kappa : 0.0;
        r.D.emplace_back(x, static_cast<double>(cum) / N);
        if (x <= 16.0) {
            integral_D += static_cast<double>(count) / N * (16.0 - x);
            r.D_at_16 = static_cast<double>(cum) / N;
        }
    }
    r.distance_to_R = universal_R_integral(16.0) - integral_D;
    return r;
}

double gh_ratio(const DistributionResult& d) {
    return d.g == 0 ? 0.0 : static_cast<double>(d.h) / static_cast<double>(d.g);
}

Rational symmetric_census(const InvariantSet& set) { return period_distribution(set).symmetric_fraction; }

}  // namespace lattice_rotor
