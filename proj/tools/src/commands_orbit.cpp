// SPDX-License-Identifier: MIT
#include <numbers>

#include "lattice_rotor/hamiltonian.hpp"
#include "lattice_rotor/return_map.hpp"
#include "lattice_rotor_cli/commands.hpp"
#include "lattice_rotor_cli/output.hpp"

namespace lattice_rotor::cli {

namespace {

std::string point_str(const LatticePoint& z) { return std::to_string(z.x) + "," + std::to_string(z.y); }

}  // namespace

int cmd_orbit(const OrbitConfig& cfg, std::ostream& out, std::ostream& err) {
    const RotationParameter& lam = cfg.lambda;
    const OrbitRecord rec = orbit_period(cfg.seed, lam, cfg.step_cap);
    if (rec.truncated && !cfg.allow_truncated) {
        err << "orbit of (" << point_str(cfg.seed) << ") not closed within " << cfg.step_cap << " steps\n";
        return kTruncated;
    }
    const Int rows = rec.truncated ? rec.steps_taken : rec.period;
    write_csv_preamble(out, "orbit", lam.str(), cfg.step_cap,
                       {{"seed", csv_field(point_str(cfg.seed))},
                        {"period", rec.truncated ? "truncated" : std::to_string(rec.period)},
                        {"symmetric", rec.symmetric ? "1" : "0"},
                        {"revolutions", std::to_string(rec.revolutions)},
                        {"witnesses", std::to_string(rec.witness_count)}},
                       {"step", "x", "y", "fix_G", "fix_H", "in_X"});
    LatticePoint z = cfg.seed;
    for (Int k = 0; k < rows; ++k) {
        CsvRow(out) << k << z.x << z.y << in_fix_G(z) << in_fix_H(z, lam) << in_X(z, lam);
        z = apply_F(z, lam);
    }
    return rec.truncated ? kTruncated : kOk;
}

int cmd_period_scan(const PeriodScanConfig& cfg, std::ostream& out, std::ostream& err) {
    const RotationParameter& lam = cfg.lambda;
    if (cfg.stride <= 0) {
        err << "stride must be positive\n";
        return kUsage;
    }
    write_csv_preamble(out, "period-scan", lam.str(), cfg.step_cap, {},
                       {"x", "period", "T_lambda", "symmetric", "revolutions", "truncated", "critical"});
    bool any_truncated = false;
    std::optional<Int> prev_class;
    for (Int x = cfg.x_min; x <= cfg.x_max; x += cfg.stride) {
        const OrbitRecord rec = orbit_period({x, x}, lam, cfg.step_cap);
        any_truncated = any_truncated || rec.truncated;
        // Class of P(lambda x, lambda x); a change marks a critical polygon crossed.
        const Rational lx = lam.value() * make_q(x);
        const Int cls = class_of(eval_hamiltonian({lx, lx}));
        std::string marker;
        if (prev_class && *prev_class != cls) marker = std::to_string(cls);
        prev_class = cls;
        const double t = rec.truncated ? 0.0 : lam.as_double() * static_cast<double>(rec.period) / std::numbers::pi;
        CsvRow(out) << x << (rec.truncated ? Int{0} : rec.period) << t << rec.symmetric << rec.revolutions << rec.truncated
                    << marker;
    }
    return any_truncated ? kTruncated : kOk;
}

}  // namespace lattice_rotor::cli
