// SPDX-License-Identifier: MIT
#pragma once

#include <utility>
#include <vector>

#include "lattice_rotor/core_map.hpp"
#include "lattice_rotor/integer.hpp"

namespace lattice_rotor {

struct PlanePoint {
    Rational x;
    Rational y;
    bool operator==(const PlanePoint&) const = default;
};

// Piecewise-affine interpolation of x^2 through the integers.
Rational eval_P(const Rational& x);
// Nonnegative branch of the inverse; throws std::domain_error for x < 0.
Rational eval_P_inverse(const Rational& x);
// The other closed form, sqrt(x) - {sqrt x}(1 - {sqrt x})/(2 floor(sqrt x) + 1).
double eval_P_inverse_via_root(double x);
double eval_P_real(double x);
double eval_P_inverse_real(double x);

Rational eval_hamiltonian(const PlanePoint& z);
// (2 floor(y) + 1, -(2 floor(x) + 1)); on Delta this is the value of the box
// selected by the floor convention.
LatticePoint vector_field_w(const PlanePoint& z);
bool on_Delta(const PlanePoint& z);

// Sums of two squares.
bool is_critical(Int n);
std::vector<Int> critical_numbers_up_to(Int x);
Int count_E(Int x);
Int next_critical(Int e);
Int representations_r(Int n);

struct CriticalNumber {
    Int e = 0;
    Int r = 0;
    Int interval_end = 0;  // next critical number; the class interval is (e, interval_end)
};
CriticalNumber make_critical(Int e);

struct TracedPolygon {
    Rational alpha;
    std::vector<PlanePoint> vertices;  // clockwise, starting on the positive y-axis
    Int side_count = 0;
    bool critical = false;
};
TracedPolygon trace_polygon(const Rational& alpha);

// First-octant vertices of the level set, clockwise from Fix G to the x-axis,
// each with its type floor(|u|) for the non-integer coordinate u.
struct OctantVertex {
    PlanePoint point;
    bool integer_x = false;
    Int type = 0;
};
std::vector<OctantVertex> first_octant_vertices(const Rational& alpha);

// Period of the Hamiltonian flow on the level set alpha.
Rational period_T(const Rational& alpha);
double period_T_real(double alpha);

struct PolygonClass {
    CriticalNumber e;
    Rational representative_alpha;
    std::vector<Int> vertex_list;
    Int k = 0;
    Int v1 = 0;
    Int vk = 0;
    std::vector<Int> iota;  // 1-based positions of first occurrences of distinct types
    Integer q;
    std::vector<Integer> q_j;  // j = 1..2k-1
    std::vector<Integer> p_j;
    Integer L;  // L = (q/(2v1+1)) (1,1); stored as its common coordinate
    std::pair<std::pair<Integer, Integer>, std::pair<Integer, Integer>> lattice_basis;
    Rational T_prime;
    Rational twist;
    bool has_rho_bar = false;  // false only when the twist vanishes
    Rational rho_bar;
    Rational rho_tilde;
    Rational density_formula;
    bool coprimality_ok = false;

    Int W() const { return 2 * v1 + 1; }
};

Rational representative_alpha(Int e);
PolygonClass vertex_list(Int e);
PolygonClass vertex_list(const CriticalNumber& e);
Rational period_T_prime(Int e);
Rational twist_K(Int e);
// Critical number e with alpha in [e, next), for alpha >= 0.
Int class_of(const Rational& alpha);

struct AsymptoticPoint {
    Int v_k = 0;
    double b = 0;
    double a = 0;
    double alpha = 0;
};
AsymptoticPoint make_asymptotic_point(Int v_k, double b);

double asymptotic_form(double b);
double epsilon_b(double b, Int v_k);
std::pair<double, double> epsilon_bounds(double b);
// v_k^{3/2} (T(alpha) - pi) / 4 at alpha = (v_k + b)^2.
double scaled_period_deviation(Int v_k, double b);
// (1/2)(2 v1 + 1)^2 T'(alpha) at alpha = (v_k + b)^2, in double precision.
double scaled_T_prime(Int v_k, double b);
// Leading-order rho_bar for b != 0, used only for plots.
double rho_bar_leading_order(Int v_k, double b);

// lambda -> +1 (sign = +1) and lambda -> -1 (sign = -1) Hamiltonians.
Rational alt_hamiltonian(const PlanePoint& z, int sign);
LatticePoint alt_vector_field(const PlanePoint& z, int sign);

}  // namespace lattice_rotor
