// Command-line front end: run, dds, scan, sweep.
//
// Settings come from an optional key=value file (--config) and are then
// overridden by any flag given on the command line.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "advect/driver.hpp"

namespace {

using advect::RunConfig;

/// Flags shared by every subcommand; values stay as text until applied.
struct FlagSet {
    std::string config_path;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
    bool plot_script = false;
    CLI::Option* plot_opt = nullptr;

    void attach(CLI::App& app, bool with_n_list) {
        app.add_option("--config", config_path, "key=value configuration file");
        const char* keys[][2] = {
            {"scheme", "scheme name"},
            {"a", "advection speed (nonzero)"},
            {"cfl", "|a| k / h"},
            {"n", "number of cells"},
            {"x-lo", "left end of the periodic domain"},
            {"x-hi", "right end of the periodic domain"},
            {"t-final", "final time"},
            {"ic", "initial data: sine, bump, step, constant, linear"},
            {"ic-table", "file of initial grid values, one per line"},
            {"out-dir", "directory for CSV output"},
            {"eps", "extrema census tolerance, relative to max|u0|"},
            {"tv-tol", "total-variation growth tolerance, relative to TV(u0)"},
            {"stride", "snapshot every this many steps"},
        };
        for (const auto& [key, help] : keys) options[key] = app.add_option("--" + std::string(key), values[key], help);
        if (with_n_list) options["n-list"] = app.add_option("--n-list", values["n-list"], "comma-separated grid sizes");
        plot_opt = app.add_flag("--plot-script", plot_script, "also write a gnuplot script");
    }

    RunConfig resolve() const {
        RunConfig config;
        if (!config_path.empty()) config = advect::load_config(config_path);
        for (const auto& [key, opt] : options)
            if (opt->count() > 0) advect::apply_setting(config, key, values.at(key));
        if (plot_opt->count() > 0) config.plot_script = plot_script;
        config.validate();
        return config;
    }
};

void warn_cfl(const RunConfig& config) {
    const auto spec = advect::catalog(config.scheme, config.a, config.cfl / std::abs(config.a));
    if (!spec.cfl_admissible())
        std::cerr << "warning: |a|*lambda = " << config.cfl << " is outside the admissible range "
                  << spec.cfl_range.describe() << " for " << config.scheme << "\n";
}

int cmd_run(const RunConfig& config) {
    warn_cfl(config);
    const auto result = advect::run(config);
    const auto& rep = result.report;
    std::cout << "scheme " << config.scheme << ", ic " << (config.ic_table.empty() ? config.ic : "table") << ", N "
              << config.n_cells << ", CFL " << config.cfl << ", t " << result.final_state.time << " ("
              << result.final_state.step_index << " steps)\n"
              << "verdict: " << advect::to_string(rep.verdict) << "\n"
              << "extrema: initial " << rep.initial_extrema << ", max " << rep.max_extrema << "\n"
              << "TV: initial " << advect::format_real(rep.initial_tv) << ", max growth "
              << advect::format_real(rep.max_tv_growth) << "\n"
              << "errors: L1 " << advect::format_real(rep.errors.l1) << ", L2 " << advect::format_real(rep.errors.l2)
              << ", Linf " << advect::format_real(rep.errors.linf) << "\n";
    if (rep.first_oscillation_time)
        std::cout << "first oscillation at t = " << advect::format_real(*rep.first_oscillation_time) << "\n";
    if (!config.out_dir.empty()) std::cout << "wrote " << result.written.size() << " files to " << config.out_dir << "\n";
    return advect::exit_code(rep.verdict);
}

int cmd_dds(const RunConfig& config) {
    const auto d = advect::describe_dds(config.scheme, config.a, config.cfl);
    std::cout << d.text();
    if (!config.out_dir.empty()) {
        std::filesystem::create_directories(config.out_dir);
        std::ofstream out(std::filesystem::path(config.out_dir) / "dds.csv");
        out << d.csv();
    }
    return 0;
}

int cmd_scan(const RunConfig& config) {
    warn_cfl(config);
    const auto result = advect::scan(config);
    std::cout << result.rows.size() << " DDS violations\n";
    std::size_t shown = 0;
    for (const auto& r : result.rows) {
        if (++shown > 20) {
            std::cout << "...\n";
            break;
        }
        std::cout << "step " << r.step << " i=" << r.index << " x=" << r.x << " theta=" << r.theta.value
                  << " D=" << r.d_value << "\n";
    }
    return advect::exit_code(result.report.verdict);
}

int cmd_sweep(const RunConfig& config) {
    warn_cfl(config);
    const auto rows = advect::sweep(config, config.n_list);
    std::cout << "N, L1 error, EOC\n";
    for (const auto& r : rows)
        std::cout << r.n_cells << ", " << advect::format_real(r.errors.l1) << ", "
                  << (r.eoc ? advect::format_real(*r.eoc) : "-") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-point schemes for linear advection: runs, DDS intervals, scans, convergence sweeps"};
    app.require_subcommand(1);

    FlagSet run_flags, dds_flags, scan_flags, sweep_flags;
    auto* run = app.add_subcommand("run", "step a scheme to t-final and report oscillation diagnostics");
    auto* dds = app.add_subcommand("dds", "print the data-dependent stability region of a scheme");
    auto* scan = app.add_subcommand("scan", "list every DDS violation along a run");
    auto* sweep = app.add_subcommand("sweep", "L1 errors and empirical orders over several grid sizes");
    run_flags.attach(*run, false);
    dds_flags.attach(*dds, false);
    scan_flags.attach(*scan, false);
    sweep_flags.attach(*sweep, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*run) return cmd_run(run_flags.resolve());
        if (*dds) return cmd_dds(dds_flags.resolve());
        if (*scan) return cmd_scan(scan_flags.resolve());
        if (*sweep) return cmd_sweep(sweep_flags.resolve());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
