// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice_rotor/core_map.hpp"
#include "lattice_rotor/hamiltonian.hpp"

namespace lattice_rotor {

// Transition points: F^4 changes the box.
bool in_Lambda(const LatticePoint& z, const RotationParameter& lam);
// Points of Lambda within lambda (|w_{m,n}|_inf + 2) of an integer point (m,n).
bool in_Sigma(const LatticePoint& z, const RotationParameter& lam);
// Return domain X, by direct evaluation of F^4 and F^-4.
bool in_X(const LatticePoint& z, const RotationParameter& lam);

// q * P(lambda x, lambda y) as an exact integer.
Wide scaled_hamiltonian(const LatticePoint& z, const RotationParameter& lam);

enum class Direction { forward, backward };

struct StripHop {
    LatticePoint vertex;
    Int transit = 0;
};

// First F^4 iterate (or F^-4 iterate) lying in Lambda, with its transit time.
// Throws std::invalid_argument at the origin.
StripHop strip_map_Psi(const LatticePoint& z, const RotationParameter& lam,
                       Direction dir = Direction::forward, Int max_transit = kDefaultStepCap);
// The same by single F^4 steps.
StripHop strip_map_Psi_stepwise(const LatticePoint& z, const RotationParameter& lam,
                                Direction dir = Direction::forward, Int max_transit = kDefaultStepCap);

struct ReturnStep {
    LatticePoint image;
    Int tau = 0;
    bool truncated = false;
};

// Phi by iterating F one step at a time.
ReturnStep return_map_direct(const LatticePoint& z, const RotationParameter& lam,
                             Int max_steps = kDefaultStepCap);

struct OrbitVertex {
    LatticePoint point;
    BoxIndex box;        // box of the vertex
    BoxIndex next_box;   // box of its F^4 image
    Int time = 0;        // F^4 steps from the start of its strand
    bool integer_x = false;
    Int type = 0;        // floor |lambda u| for the non-integer coordinate u
    Int offset = 0;      // integer coordinate minus ceil(line / lambda)
    Int sigma = 0;       // offset mod (2 type + 1)
    bool corner = false; // both box indices change
};

enum class Irregularity {
    none,
    seed_outside_X,
    seed_in_Lambda,
    image_in_Lambda,
    class_escape,
    hits_Sigma,
    corner_transit,
    truncated,
};

std::string to_string(Irregularity irr);

struct ReturnOrbit {
    LatticePoint seed;
    std::optional<Int> e;
    Int tau = 0;
    LatticePoint result;
    std::vector<OrbitVertex> vertices;  // Psi^1 .. Psi^{2k-1}
    std::optional<OrbitVertex> pre_vertex;  // Psi^-1
    std::vector<Int> sigma;  // sigma_{-1}, sigma_1, ..., sigma_{2k-1}
    std::vector<Int> gamma;  // the unreduced offsets behind sigma, same layout
    Int fix_witnesses = 0;   // points of F^k(seed), 0 <= k < tau, on Fix G or Fix H
    bool regular = false;
    Irregularity irregularity = Irregularity::none;
    std::string diagnostic;
    bool is_fixed = false;
    bool is_symmetric_fixed = false;  // from the orbit code; false unless regular
};

// Phi by strip-map acceleration; seeds outside X are reported, not iterated.
// When cls is given, regularity is judged
// against the class interval (e, e') and the orbit code is filled in.
ReturnOrbit return_map_Phi(const LatticePoint& z, const RotationParameter& lam,
                           const PolygonClass* cls = nullptr, Int max_steps = kDefaultStepCap);

// sigma_{-1} = sigma_1 and 2 sigma_k = v_k mod 2 v_k + 1.
bool symmetric_fixed_point_test(const ReturnOrbit& orbit, const PolygonClass& cls);

// The regular domain X^e: strip -W <= x - y < W, W = 2 v1 + 1, with
// x + y in [s_min, s_max]. Inside box (v1, v1) the Hamiltonian depends on
// x + y only, so I^e(lambda) is a run of levels s.
struct RegularDomain {
    PolygonClass cls;
    RotationParameter lambda{1, 1};
    Int W = 1;
    Int s_min = 0;
    Int s_max = -1;        // empty when s_max < s_min
    Int level_lo = 0;      // levels of the strip with P in the class interval
    Int level_hi = -1;
    Int irregular_levels = 0;
    Int scanned_levels = 0;
    bool full_scan = true;
    // Largest |P(z) - boundary| over the irregular points found, as a rational.
    Rational max_irregular_gap;

    bool empty() const { return s_max < s_min; }
    Int level_count() const { return empty() ? 0 : s_max - s_min + 1; }
    Int size() const { return level_count() * W; }
    bool contains(const LatticePoint& z) const;
    // Points in increasing (x + y, x - y) order.
    std::vector<LatticePoint> points() const;
    // |I^e(lambda)| / |I^e| as a rational.
    Rational interval_ratio() const;
};

struct DomainOptions {
    // Levels are checked point by point when the strip has at most this many
    // levels; otherwise only the two ends are scanned until `edge_run`
    // consecutive regular levels are found.
    Int full_scan_levels = 20000;
    Int edge_run = 64;
};

// Throws std::runtime_error if no regular level exists (lambda too large).
RegularDomain regular_domain_Xe(Int e, const RotationParameter& lam, DomainOptions opts = {});

// The generators L and (L - w)/2 of the lattice in lattice units.
struct LatticeBasis {
    LatticePoint L;
    LatticePoint B;
    Int det() const { return sub(mul(L.x, B.y), mul(L.y, B.x)); }
};
LatticeBasis lattice_basis(const PolygonClass& cls);
// L = (q_bad / W)(1,1) with the true second generator: a negative control.
LatticeBasis lattice_basis_with_q(const PolygonClass& cls, Int q_bad);

// Coordinates of z in the basis, reduced modulo the determinant: equal keys
// iff congruent modulo the lattice.
std::pair<Int, Int> congruence_key(const LatticePoint& z, const LatticeBasis& basis);

// Parallelogram anchor + s L + t B, s, t in [0, 1), anchored at the least
// point of X^e on Fix G. Empty if it does not fit inside the domain.
std::vector<LatticePoint> fundamental_domain(const RegularDomain& dom);

struct EquivarianceReport {
    bool verdict = false;
    Int pairs_checked = 0;
    Int failures = 0;
    std::optional<std::pair<LatticePoint, LatticePoint>> counterexample;  // (z, l)
    bool insufficient = false;
};

// Phi(z + l) = Phi(z) + l modulo w_{v1,v1} for every z in X^e and every l
// among the combinations a L + b B, |a|, |b| <= span, with z + l in X^e.
// sample_count caps the number of base points (evenly strided).
EquivarianceReport check_equivariance(const RegularDomain& dom, const LatticeBasis& basis,
                                      Int sample_count, Int span = 2);

struct DensityReport {
    Int e = 0;
    RotationParameter lambda{1, 1};
    Rational delta;  // symmetric fixed points per fundamental domain / q
    Rational eta;    // fixed points per fundamental domain / q
    Rational delta_domain;  // the same over all of X^e
    Rational eta_domain;
    Rational formula;
    bool coprimality_ok = false;
    bool matches_formula = false;  // delta == formula, whether or not coprimality holds
    bool populated = false;
    Int irregular = 0;  // irregular points met in the fundamental domain
    Int code_direct_mismatches = 0;
};

DensityReport density_delta(const RegularDomain& dom);
DensityReport density_delta(Int e, const RotationParameter& lam);

// Largest 1/2^k, k in [k_min, k_max], at which a full fundamental domain of
// the class fits inside X^e. Throws if none does.
RotationParameter discover_lambda(Int e, int k_min = 4, int k_max = 40);

struct CodeCensus {
    Int points = 0;
    Int irregular = 0;
    Int distinct_codes = 0;
    Int distinct_classes = 0;
    bool partitions_agree = false;
};

// Orbit codes against congruence classes over the given points.
CodeCensus code_census(const RegularDomain& dom, const std::vector<LatticePoint>& pts);

}  // namespace lattice_rotor
