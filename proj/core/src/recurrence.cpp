// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "lattice_rotor/statistics.hpp"

namespace lattice_rotor {

Int recurrence_time(const RotationParameter& lam) { return lam.t_star(); }

namespace {

struct Seg {
    double ax, ay, bx, by;
};

double dist_to_segment(double px, double py, const Seg& s) {
    const double dx = s.bx - s.ax, dy = s.by - s.ay;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((px - s.ax) * dx + (py - s.ay) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(px - (s.ax + t * dx), py - (s.ay + t * dy));
}

// Nearest-neighbour queries on a uniform grid.
class PointGrid {
public:
    PointGrid(const std::vector<std::pair<double, double>>& pts, double cell) : pts_(pts), cell_(cell) {
        for (std::size_t i = 0; i < pts.size(); ++i) cells_[key(cell_of(pts[i].first), cell_of(pts[i].second))].push_back(i);
    }

    double nearest(double x, double y) const {
        const std::int64_t cx = cell_of(x), cy = cell_of(y);
        double best = std::numeric_limits<double>::infinity();
        for (std::int64_t ring = 0;; ++ring) {
            for (std::int64_t i = cx - ring; i <= cx + ring; ++i) {
                for (std::int64_t j = cy - ring; j <= cy + ring; ++j) {
                    if (std::max(std::abs(i - cx), std::abs(j - cy)) != ring) continue;
                    const auto it = cells_.find(key(i, j));
                    if (it == cells_.end()) continue;
                    for (std::size_t k : it->second) best = std::min(best, std::hypot(pts_[k].first - x, pts_[k].second - y));
                }
            }
            // Points outside the searched square are at least ring * cell away.
            if (best <= static_cast<double>(ring) * cell_) return best;
            if (ring > 1000000) return best;
        }
    }

private:
    std::int64_t cell_of(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }
    static std::uint64_t key(std::int64_t i, std::int64_t j) {
        return (static_cast<std::uint64_t>(i) << 32) ^ static_cast<std::uint64_t>(j & 0xffffffff);
    }

    const std::vector<std::pair<double, double>>& pts_;
    double cell_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

}  // namespace

ShadowingReport shadowing_distance(const PlanePoint& w, const RotationParameter& lam, Int max_steps) {
    ShadowingReport rep;
    rep.alpha = eval_hamiltonian(w);
    const TracedPolygon poly = trace_polygon(rep.alpha);

    // R_lambda(w) = lambda floor(w / lambda).
    auto floor_scaled = [&](const Rational& c) {
        const Rational v = c / lam.value();
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        return to_int(f, "shadowing seed");
    };
    const LatticePoint z{floor_scaled(w.x), floor_scaled(w.y)};
    // The return orbit of a general point runs from its last visit to X.
    LatticePoint start = z;
    Int back = 0;
    while (!in_X(start, lam) && back < max_steps) {
        start = apply_F_inverse(start, lam);
        ++back;
    }
    const ReturnStep ret = return_map_direct(start, lam, max_steps);
    rep.tau = ret.tau;
    rep.truncated = back == max_steps || ret.truncated;

    const double l = lam.as_double();
    std::vector<std::pair<double, double>> pts;
    LatticePoint u = start;
    for (Int k = 0; k <= ret.tau; ++k) {
        pts.emplace_back(l * static_cast<double>(u.x), l * static_cast<double>(u.y));
        u = apply_F(u, lam);
    }
    rep.orbit_points = static_cast<Int>(pts.size());

    std::vector<Seg> segs;
    const std::size_t nv = poly.vertices.size();
    for (std::size_t i = 0; i < nv; ++i) {
        const PlanePoint& a = poly.vertices[i];
        const PlanePoint& b = poly.vertices[(i + 1) % nv];
        segs.push_back({a.x.get_d(), a.y.get_d(), b.x.get_d(), b.y.get_d()});
    }

    double d = 0;
    for (const auto& [px, py] : pts) {
        double best = std::numeric_limits<double>::infinity();
        for (const Seg& s : segs) best = std::min(best, dist_to_segment(px, py, s));
        d = std::max(d, best);
    }
    const PointGrid grid(pts, 4 * l);
    const double step = l / 4;
    for (const Seg& s : segs) {
        const double len = std::hypot(s.bx - s.ax, s.by - s.ay);
        const auto n = static_cast<std::int64_t>(std::ceil(len / step));
        for (std::int64_t i = 0; i <= n; ++i) {
            const double t = n == 0 ? 0.0 : static_cast<double>(i) / static_cast<double>(n);
            d = std::max(d, grid.nearest(s.ax + t * (s.bx - s.ax), s.ay + t * (s.by - s.ay)));
        }
    }
    rep.hausdorff = d;
    rep.ratio = d / l;
    return rep;
}

}  // namespace lattice_rotor
