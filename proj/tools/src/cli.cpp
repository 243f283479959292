// SPDX-License-Identifier: MIT
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "lattice_rotor_cli/commands.hpp"

namespace lattice_rotor::cli {

namespace {

RotationParameter parse_lambda(const std::string& text) { return RotationParameter::parse(text); }

LatticePoint parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected x,y but got '" + text + "'");
    std::size_t used = 0;
    const std::string xs = text.substr(0, comma), ys = text.substr(comma + 1);
    const Int x = std::stoll(xs, &used);
    if (used != xs.size()) throw std::invalid_argument("bad x in '" + text + "'");
    const Int y = std::stoll(ys, &used);
    if (used != ys.size()) throw std::invalid_argument("bad y in '" + text + "'");
    return {x, y};
}

// Output goes to `path`, or to `fallback` when path is empty or "-".
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback, bool binary = false) {
        if (path.empty() || path == "-") {
            stream_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, binary ? std::ios::binary : std::ios::out);
        if (!*file_) throw std::runtime_error("cannot write " + path);
        stream_ = file_.get();
    }
    std::ostream& get() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Experiments on the discretised rotation near the integrable limit", "lattice-rotor"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "lattice-rotor 0.3.0");

    std::string lambda_text, seed_text, output, summary_path, sidecar_path;
    std::function<int()> action;

    OrbitConfig orbit;
    auto* c_orbit = app.add_subcommand("orbit", "orbit of one lattice point");
    c_orbit->add_option("--lambda", lambda_text, "p/q or 1/2^k")->required();
    c_orbit->add_option("--seed", seed_text, "x,y")->required();
    c_orbit->add_option("--cap", orbit.step_cap, "step cap");
    c_orbit->add_flag("--allow-truncated", orbit.allow_truncated);
    c_orbit->add_option("-o,--output", output, "CSV path (default stdout)");

    PeriodScanConfig scan;
    auto* c_scan = app.add_subcommand("period-scan", "periods of the points (x, x)");
    c_scan->add_option("--lambda", lambda_text)->required();
    c_scan->add_option("--x-min", scan.x_min);
    c_scan->add_option("--x-max", scan.x_max)->required();
    c_scan->add_option("--stride", scan.stride);
    c_scan->add_option("--cap", scan.step_cap);
    c_scan->add_option("-o,--output", output);

    DensityConfig dens;
    auto* c_dens = app.add_subcommand("density", "symmetric fixed points of the return map per class");
    c_dens->add_option("--e-min", dens.e_min);
    c_dens->add_option("--e-max", dens.e_max);
    c_dens->add_option("--lambda", lambda_text, "fixed lambda; discovered per class when omitted");
    c_dens->add_option("--k-min", dens.k_min);
    c_dens->add_option("--k-max", dens.k_max);
    c_dens->add_option("-o,--output", output);

    DistributionConfig dist;
    auto* c_dist = app.add_subcommand("distribution", "period distribution of the return map for e = v_k^2");
    c_dist->add_option("--vk", dist.v_k)->required();
    c_dist->add_option("--m", dist.m);
    c_dist->add_option("--k-min", dist.k_min);
    c_dist->add_option("--k-max", dist.k_max);
    c_dist->add_option("--max-period", dist.max_period);
    c_dist->add_option("-o,--output", output);
    c_dist->add_option("--summary", summary_path, "JSON summary path (default stderr)");

    PhasePlotConfig plot;
    auto* c_plot = app.add_subcommand("phase-plot", "return-map orbits on the cylinder as a PGM image");
    c_plot->add_option("--e", plot.e)->required();
    c_plot->add_option("--lambda", lambda_text)->required();
    c_plot->add_option("--seeds", plot.seeds);
    c_plot->add_option("--width", plot.width);
    c_plot->add_option("--height", plot.height);
    c_plot->add_option("--nu-min", plot.nu_min);
    c_plot->add_option("--nu-max", plot.nu_max);
    c_plot->add_option("--returns", plot.returns_per_seed);
    c_plot->add_option("-o,--output", output)->required();
    c_plot->add_option("--sidecar", sidecar_path);

    AsymptoticsConfig asym;
    auto* c_asym = app.add_subcommand("asymptotics", "scaled period function near alpha = v_k^2");
    c_asym->add_option("--vk", asym.v_k);
    c_asym->add_option("--points", asym.points);
    c_asym->add_option("--b-min", asym.b_min);
    c_asym->add_option("--b-max", asym.b_max);
    c_asym->add_option("-o,--output", output);

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << "lattice-rotor 0.3.0\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*c_orbit) {
            orbit.lambda = parse_lambda(lambda_text);
            orbit.seed = parse_point(seed_text);
            Sink s(output, out);
            return cmd_orbit(orbit, s.get(), err);
        }
        if (*c_scan) {
            scan.lambda = parse_lambda(lambda_text);
            Sink s(output, out);
            return cmd_period_scan(scan, s.get(), err);
        }
        if (*c_dens) {
            if (!lambda_text.empty()) dens.lambda = parse_lambda(lambda_text);
            Sink s(output, out);
            return cmd_density(dens, s.get(), err);
        }
        if (*c_dist) {
            Sink s(output, out);
            Sink j(summary_path, err);
            return cmd_distribution(dist, s.get(), j.get(), err);
        }
        if (*c_plot) {
            plot.lambda = parse_lambda(lambda_text);
            Sink s(output, out, true);
            Sink j(sidecar_path.empty() ? output + ".json" : sidecar_path, err);
            return cmd_phase_plot(plot, s.get(), j.get(), err);
        }
        if (*c_asym) {
            Sink s(output, out);
            return cmd_asymptotics(asym, s.get(), err);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kTruncated;
    }
    return kUsage;
}

}  // namespace lattice_rotor::cli
