// SPDX-License-Identifier: MIT
#include <chrono>

#include "json.hpp"

#include "lattice_rotor/hamiltonian.hpp"
#include "lattice_rotor/statistics.hpp"
#include "lattice_rotor_cli/commands.hpp"
#include "lattice_rotor_cli/output.hpp"

namespace lattice_rotor::cli {

int cmd_density(const DensityConfig& cfg, std::ostream& out, std::ostream& err) {
    write_csv_preamble(out, "density", cfg.lambda ? cfg.lambda->str() : "discovered", kDefaultStepCap,
                       {{"e_min", std::to_string(cfg.e_min)}, {"e_max", std::to_string(cfg.e_max)}},
                       {"e", "lambda", "q", "delta", "eta", "formula", "coprimality", "matches_formula", "populated",
                        "irregular", "code_direct_mismatches"});
    int status = kOk;
    for (Int e : critical_numbers_up_to(cfg.e_max)) {
        if (e < cfg.e_min || e == 0) continue;
        const PolygonClass cls = vertex_list(e);
        try {
            const RotationParameter lam = cfg.lambda ? *cfg.lambda : discover_lambda(e, cfg.k_min, cfg.k_max);
            const DensityReport r = density_delta(e, lam);
            CsvRow(out) << e << lam.str() << cls.q << r.delta << r.eta << r.formula << r.coprimality_ok << r.matches_formula
                        << r.populated << r.irregular << r.code_direct_mismatches;
        } catch (const std::runtime_error& ex) {
            // Under-populated: no regular fundamental domain at this lambda.
            err << "e=" << e << ": " << ex.what() << '\n';
            CsvRow(out) << e << (cfg.lambda ? cfg.lambda->str() : "none") << cls.q << "" << "" << cls.density_formula
                        << cls.coprimality_ok << false << false << "" << "";
            status = kTruncated;
        }
    }
    return status;
}

int cmd_distribution(const DistributionConfig& cfg, std::ostream& out, std::ostream& summary, std::ostream& err) {
    const auto t0 = std::chrono::steady_clock::now();
    InvariantSetOptions opts;
    opts.max_period = cfg.max_period;
    const DistributionRun run = run_distribution_scan(cfg.v_k, cfg.m, cfg.k_min, cfg.k_max, opts);
    if (!run.set) {
        err << "no lambda in 1/2^" << cfg.k_min << " .. 1/2^" << cfg.k_max << " keeps the invariant set inside X^e:\n";
        for (const std::string& line : run.trace) err << "  " << line << '\n';
        return kTruncated;
    }
    const InvariantSet& set = *run.set;
    const DistributionResult d = period_distribution(set);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    write_csv_preamble(out, "distribution", d.lambda.str(), cfg.max_period,
                       {{"v_k", std::to_string(cfg.v_k)}, {"m", std::to_string(cfg.m)},
                        {"kappa", format_double(d.kappa)}},
                       {"x", "D", "R"});
    for (const auto& [x, D] : d.D) CsvRow(out) << x << D << universal_R(x);

    nlohmann::ordered_json j;
    j["format"] = kFormatVersion;
    j["v_k"] = cfg.v_k;
    j["m"] = cfg.m;
    j["e"] = d.e;
    j["lambda"] = d.lambda.str();
    j["anchor"] = {set.frame.z0.x, set.frame.z0.y};
    j["sample_size"] = d.N_bar;
    j["seed_count"] = d.seed_count;
    j["overspill"] = set.overspill();
    j["orbits"] = d.orbit_count;
    j["max_period"] = d.max_period;
    j["g"] = d.g;
    j["h"] = d.h;
    j["h_over_g"] = gh_ratio(d);
    j["kappa"] = d.kappa;
    j["distance_to_R"] = d.distance_to_R;
    j["D_at_16"] = d.D_at_16;
    j["symmetric_fraction"] = d.symmetric_fraction.get_d();
    j["reduction_superfluous"] = d.reduction_superfluous;
    j["lambda_scan"] = run.trace;
    j["wall_seconds"] = wall;
    summary << j.dump(2) << '\n';
    return kOk;
}

}  // namespace lattice_rotor::cli
