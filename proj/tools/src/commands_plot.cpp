// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "lattice_rotor/hamiltonian.hpp"
#include "lattice_rotor/statistics.hpp"
#include "lattice_rotor_cli/commands.hpp"
#include "lattice_rotor_cli/output.hpp"

namespace lattice_rotor::cli {

int cmd_phase_plot(const PhasePlotConfig& cfg, std::ostream& out, std::ostream& sidecar, std::ostream& err) {
    if (cfg.width <= 0 || cfg.height <= 0 || cfg.nu_max <= cfg.nu_min) {
        err << "bad plot geometry\n";
        return kUsage;
    }
    GrayImage img;
    img.width = static_cast<int>(cfg.width);
    img.height = static_cast<int>(cfg.height);
    std::vector<Int> counts(static_cast<std::size_t>(cfg.width * cfg.height), 0);

    nlohmann::ordered_json meta;
    meta["format"] = kFormatVersion;
    meta["e"] = cfg.e;
    meta["lambda"] = cfg.lambda.str();
    meta["width"] = cfg.width;
    meta["height"] = cfg.height;
    meta["theta_range"] = {-0.5, 0.5};
    meta["nu_range"] = {cfg.nu_min, cfg.nu_max};
    meta["pixel"] = "column = floor((theta + 1/2) width), row = floor((nu_max - nu) / (nu_max - nu_min) height)";

    int status = kOk;
    Int plotted = 0, clipped = 0;
    nlohmann::ordered_json seeds = nlohmann::ordered_json::array();
    if (cfg.seeds > 0) {
        const RegularDomain dom = regular_domain_Xe(cfg.e, cfg.lambda);
        const AnchorResult anchor = choose_anchor(dom);
        if (!anchor.frame) {
            err << anchor.reason << '\n';
            return kTruncated;
        }
        const CoordinateFrame& frame = *anchor.frame;
        const double W = static_cast<double>(dom.W);
        const double rb = frame.rho_bar.get_d();
        const double x0 = static_cast<double>(frame.z0.x);
        meta["anchor"] = {frame.z0.x, frame.z0.y};
        meta["rho_bar"] = rb;
        meta["K"] = dom.cls.twist.get_d();

        for (Int i = 0; i < cfg.seeds; ++i) {
            // Seeds on Fix G spread evenly in nu; on Fix G, nu = (x - x0) / (W rho_bar).
            const double nu = cfg.nu_min + (static_cast<double>(i) + 0.5) * (cfg.nu_max - cfg.nu_min) / static_cast<double>(cfg.seeds);
            const Int x = frame.z0.x + static_cast<Int>(std::llround(W * rb * nu));
            const LatticePoint seed{x, x};
            nlohmann::ordered_json s;
            s["seed"] = {x, x};
            LatticePoint z = seed;
            Int returns = 0;
            std::string fate = "open";
            while (returns < cfg.returns_per_seed) {
                if (!dom.contains(z)) {
                    fate = "escape";
                    break;
                }
                const double th = static_cast<double>(z.x - z.y) / (2 * W);
                const double theta = th - std::floor(th + 0.5);
                const double v = (static_cast<double>(z.x + z.y) - 2 * x0) / (2 * W * rb);
                const auto col = static_cast<Int>(std::floor((theta + 0.5) * static_cast<double>(cfg.width)));
                const auto row = static_cast<Int>(std::floor((cfg.nu_max - v) / (cfg.nu_max - cfg.nu_min) * static_cast<double>(cfg.height)));
                if (col < 0 || col >= cfg.width || row < 0 || row >= cfg.height) {
                    ++clipped;
                } else {
                    ++counts[static_cast<std::size_t>(row * cfg.width + col)];
                    ++plotted;
                }
                const ReturnOrbit o = return_map_Phi(z, dom.lambda, &dom.cls);
                ++returns;
                if (!o.regular) {
                    fate = "escape";
                    break;
                }
                z = o.result;
                if (z == seed) {
                    fate = "periodic";
                    break;
                }
            }
            if (fate == "escape") status = kTruncated;
            s["returns"] = returns;
            s["fate"] = fate;
            seeds.push_back(s);
        }
    }
    meta["plotted"] = plotted;
    meta["clipped"] = clipped;
    meta["seeds"] = seeds;

    img.pixels.resize(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) {
        const double shade = counts[k] == 0 ? 255.0 : 200.0 - 40.0 * std::log2(static_cast<double>(counts[k]));
        img.pixels[k] = static_cast<std::uint8_t>(std::clamp(shade, 0.0, 255.0));
    }
    write_pgm(out, img);
    sidecar << meta.dump(2) << '\n';
    return status;
}

int cmd_asymptotics(const AsymptoticsConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.points < 1 || cfg.v_k < 1) {
        err << "need v_k >= 1 and at least one point\n";
        return kUsage;
    }
    write_csv_preamble(out, "asymptotics", "none", 0, {{"v_k", std::to_string(cfg.v_k)}},
                       {"b", "alpha", "e", "scaled_deviation", "limiting_form", "epsilon", "epsilon_lo", "epsilon_hi",
                        "scaled_T_prime", "rho_bar", "rho_bar_leading"});
    for (Int i = 0; i < cfg.points; ++i) {
        // Half-open grid: b = 1 belongs to the next v_k.
        const double b = cfg.b_min + (cfg.b_max - cfg.b_min) * static_cast<double>(i) / static_cast<double>(cfg.points);
        const AsymptoticPoint pt = make_asymptotic_point(cfg.v_k, b);
        const Int e = class_of(Rational(pt.alpha));
        const PolygonClass cls = vertex_list(e);
        const auto [lo, hi] = epsilon_bounds(b);
        const double rb = cls.has_rho_bar ? cls.rho_bar.get_d() : std::nan("");
        const double lead = b > 0 ? rho_bar_leading_order(cfg.v_k, b) : std::nan("");
        CsvRow(out) << b << pt.alpha << e << scaled_period_deviation(cfg.v_k, b) << asymptotic_form(b)
                    << epsilon_b(b, cfg.v_k) << lo << hi << scaled_T_prime(cfg.v_k, b) << rb << lead;
    }
    return kOk;
}

}  // namespace lattice_rotor::cli
