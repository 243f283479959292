// SPDX-License-Identifier: MIT
#include <algorithm>

#include "lattice_rotor/hamiltonian.hpp"

namespace lattice_rotor {

namespace {

// Crossings of the level set with Delta in the closed first quadrant, sorted
// by increasing x. A lattice point appears once.
std::vector<PlanePoint> first_quadrant_crossings(const Rational& alpha) {
    std::vector<PlanePoint> pts;
    for (Integer n = 0; Rational(n * n) <= alpha; ++n) {
        const Rational other = eval_P_inverse(alpha - Rational(n * n));
        pts.push_back({Rational(n), other});
        pts.push_back({other, Rational(n)});
    }
    std::sort(pts.begin(), pts.end(), [](const PlanePoint& a, const PlanePoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y > b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

TracedPolygon trace_polygon(const Rational& alpha) {
    if (alpha < 0) throw std::domain_error("polygon level must be nonnegative");
    TracedPolygon poly;
    poly.alpha = alpha;
    poly.critical = alpha.get_den() == 1 && is_critical(to_int(alpha.get_num(), "trace_polygon"));
    if (alpha == 0) {
        poly.vertices.push_back({0, 0});
        return poly;
    }

    const std::vector<PlanePoint> q1 = first_quadrant_crossings(alpha);
    auto& out = poly.vertices;
    // Clockwise from the positive y-axis; the axis points are shared between
    // neighbouring quadrants and emitted once.
    out.insert(out.end(), q1.begin(), q1.end());
    for (auto it = q1.rbegin() + 1; it != q1.rend(); ++it) out.push_back({it->x, -it->y});
    for (auto it = q1.begin() + 1; it != q1.end(); ++it) out.push_back({-it->x, -it->y});
    for (auto it = q1.rbegin() + 1; it + 1 != q1.rend(); ++it) out.push_back({-it->x, it->y});
    poly.side_count = static_cast<Int>(out.size());
    return poly;
}

std::vector<OctantVertex> first_octant_vertices(const Rational& alpha) {
    std::vector<OctantVertex> out;
    for (const PlanePoint& p : first_quadrant_crossings(alpha)) {
        if (!(p.y < p.x)) continue;
        OctantVertex v;
        v.point = p;
        v.integer_x = p.x.get_den() == 1;
        const Rational& u = v.integer_x ? p.y : p.x;
        v.type = to_int(floor_q(u), "vertex type");
        out.push_back(v);
    }
    return out;
}

}  // namespace lattice_rotor
