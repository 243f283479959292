// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice_rotor/return_map.hpp"

namespace lattice_rotor {

// Coordinates on the cylinder S^1 x R. theta lies in [-1/2, 1/2).
struct CylinderPoint {
    Rational theta;
    Rational rho;
    Rational nu;  // rho / rho_bar mod 1, in [0, 1)
};

struct CoordinateFrame {
    RegularDomain domain;
    LatticePoint z0;  // fixed point of Phi on Fix G; maps to (0, 0)
    Rational rho_bar;
    const PolygonClass& cls() const { return domain.cls; }
    RotationParameter lambda() const { return domain.lambda; }
};

// Result of choose_anchor: a frame, or the reason none exists.
struct AnchorResult {
    std::optional<CoordinateFrame> frame;
    std::string reason;
};

// Least z0 = (x0, x0) in X^e with Phi(z0) = z0 and 2 x0 >= min_level, after
// passing over `skip` such points.
// The default min_level is the bottom of X^e.
AnchorResult choose_anchor(const RegularDomain& dom, std::optional<Int> min_level = std::nullopt, Int skip = 0);

Rational wrap_theta(const Rational& theta);
CylinderPoint to_cylinder(const LatticePoint& z, const CoordinateFrame& frame);
// rho / rho_bar before reduction mod 1.
Rational raw_rotation_number(const LatticePoint& z, const CoordinateFrame& frame);

// (theta, rho) -> (theta + K(e) rho, rho), theta wrapped.
CylinderPoint omega_step(const CylinderPoint& p, const PolygonClass& cls);

// G^e: transposition inside the strip, identity on x - y = -W.
LatticePoint reversor_Ge(const LatticePoint& z, Int W);

struct InvariantSet {
    CoordinateFrame frame;
    Int m = 0;
    Int seed_count = 0;  // #A
    std::vector<LatticePoint> points;  // A-bar, sorted
    // One entry per orbit: its points in Phi order, starting from the least.
    std::vector<std::vector<LatticePoint>> orbits;
    bool escaped = false;
    std::string diagnostic;
    // Largest spread in rho over one orbit, against rho_tilde.
    Rational max_orbit_rho_range;
    double overspill() const {
        return seed_count == 0 ? 0.0 : static_cast<double>(points.size()) / static_cast<double>(seed_count);
    }
};

struct InvariantSetOptions {
    Int max_period = 200000;  // Phi steps before an orbit counts as an escape
    // Levels kept free between the bottom of X^e and the lowest level of A.
    Int anchor_margin = 64;
    // Skip this many qualifying fixed points when choosing z0.
    Int anchor_skip = 0;
};

// A = {z in X^e : rho/rho_bar in [-1/2, m - 1/2]} and the union of the
// Phi-orbits through it.
InvariantSet build_invariant_set(const RegularDomain& dom, Int m, InvariantSetOptions opts = {});

struct DistributionResult {
    Int e = 0;
    Int m = 0;
    RotationParameter lambda{1, 1};
    Int N_bar = 0;
    Int seed_count = 0;
    Int g = 0;
    Int h = 0;
    double kappa = 0;
    // (x, D(x)) at each jump, x = period / kappa.
    std::vector<std::pair<double, double>> D;
    double distance_to_R = 0;  // integral of R - D over [0, 16]
    double D_at_16 = 0;
    Rational symmetric_fraction;
    Int orbit_count = 0;
    Int max_period = 0;
    bool reduction_superfluous = true;  // every orbit spans less than rho_tilde in rho
};

double universal_R(double x);
// Integral of R over [0, x].
double universal_R_integral(double x);

DistributionResult period_distribution(const InvariantSet& set);
// Diagnostic ratios over A-bar.
double gh_ratio(const DistributionResult& d);
Rational symmetric_census(const InvariantSet& set);

struct DistributionRun {
    std::optional<InvariantSet> set;
    std::vector<std::string> trace;  // one line per lambda tried
};

// Largest 1/2^k, k in [k_min, k_max], whose invariant set does not escape.
DistributionRun run_distribution_scan(Int v_k, Int m, int k_min, int k_max, InvariantSetOptions opts = {});

// First-order recurrence time of F at lambda.
Int recurrence_time(const RotationParameter& lam);

struct ShadowingReport {
    Rational alpha;  // P(w)
    Int tau = 0;
    Int orbit_points = 0;
    double hausdorff = 0;  // d_H(Pi(w), lambda * return orbit)
    double ratio = 0;      // hausdorff / lambda
    bool truncated = false;
};

// Return orbit of R_lambda(w) against the polygon P = P(w).
ShadowingReport shadowing_distance(const PlanePoint& w, const RotationParameter& lam,
                                   Int max_steps = kDefaultStepCap);

}  // namespace lattice_rotor
