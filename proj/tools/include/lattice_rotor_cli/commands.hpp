// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "lattice_rotor/core_map.hpp"

namespace lattice_rotor::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kTruncated = 2 };

struct OrbitConfig {
    RotationParameter lambda{1, 10};
    LatticePoint seed;
    Int step_cap = 100'000'000;
    bool allow_truncated = false;
};

struct PeriodScanConfig {
    RotationParameter lambda{1, 5000};
    Int x_min = 0;
    Int x_max = -1;  // empty range when x_max < x_min
    Int stride = 1;
    Int step_cap = 100'000'000;
};

struct DensityConfig {
    Int e_min = 1;
    Int e_max = 30;
    std::optional<RotationParameter> lambda;  // discovered per class when absent
    int k_min = 4;
    int k_max = 40;
};

struct DistributionConfig {
    Int v_k = 100;
    Int m = 32;
    int k_min = 16;
    int k_max = 26;
    Int max_period = 200000;
};

struct PhasePlotConfig {
    Int e = 40000;
    RotationParameter lambda{1, 1 << 27};
    Int seeds = 200;
    Int width = 512;
    Int height = 512;
    // rho window of the plot, in units of rho_bar; the seeds span the same window.
    double nu_min = 0.0;
    double nu_max = 1.0;
    Int returns_per_seed = 2000;
    std::string sidecar;  // JSON path; empty means <output>.json
};

struct AsymptoticsConfig {
    Int v_k = 100;
    Int points = 100;
    double b_min = 0.0;
    double b_max = 1.0;  // exclusive
};

// Each command writes its table (or image) to `out` and diagnostics to `err`.
int cmd_orbit(const OrbitConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_period_scan(const PeriodScanConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_density(const DensityConfig& cfg, std::ostream& out, std::ostream& err);
// `summary` receives the JSON summary.
int cmd_distribution(const DistributionConfig& cfg, std::ostream& out, std::ostream& summary, std::ostream& err);
// `sidecar` receives the JSON coordinate mapping.
int cmd_phase_plot(const PhasePlotConfig& cfg, std::ostream& out, std::ostream& sidecar, std::ostream& err);
int cmd_asymptotics(const AsymptoticsConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lattice_rotor::cli
