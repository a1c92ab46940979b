#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "advect/dds.hpp"
#include "advect/grid.hpp"
#include "advect/metrics.hpp"
#include "advect/schemes.hpp"

namespace advect {

/// Experiment configuration. Defaults reproduce the Lax-Wendroff sine run
/// (CFL 0.8, N = 100, t = 6 on [-1, 1]).
struct RunConfig {
    std::string scheme = "lax-wendroff";
    double a = 1.0;
    double cfl = 0.8;
    std::size_t n_cells = 100;
    double x_lo = -1.0;
    double x_hi = 1.0;
    double t_final = 6.0;
    std::string ic = "sine";
    std::string ic_table;  ///< file of grid values, one per line; overrides ic
    Tolerances tol;
    std::string out_dir;  ///< empty: nothing written
    std::size_t snapshot_stride = 50;
    bool plot_script = false;
    std::vector<std::size_t> n_list = {50, 100, 200, 400};

    void validate() const;
};

/// Applies one key=value setting. Keys match the CLI flag names without the
/// leading dashes (underscores are accepted for dashes). Throws on unknown
/// keys or unparsable values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Flat key=value text; '#' starts a comment.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

InitialData make_initial_data(const RunConfig& config);
Grid1D make_run_grid(const RunConfig& config);

/// Number of full steps and the length of a trailing partial step (0 if none).
struct StepPlan {
    std::size_t full_steps = 0;
    double last_step = 0.0;

    std::size_t total_steps() const { return full_steps + (last_step > 0.0 ? 1 : 0); }
};

StepPlan plan_steps(double t_final, double k);

struct RunResult {
    Grid1D grid;
    RunReport report;
    State final_state;
    State exact_final;
    std::vector<std::string> written;  ///< files written, in order
};

/// Steps from t = 0 to t_final, shortening the last step to land on t_final.
/// Writes snapshots, steps.csv, report.csv (and plot.gp) when out_dir is set.
RunResult run(const RunConfig& config);

/// Exit status for a verdict: 0 clean, 2 oscillatory, 3 diverged.
int exit_code(Verdict verdict);

struct DdsDescription {
    SchemeSpec spec;
    std::optional<DdsInterval> interval;  ///< empty for ENO2
    bool uno = false;

    std::string text() const;
    std::string csv() const;
};

DdsDescription describe_dds(const std::string& scheme, double a, double cfl);

struct ScanRow {
    std::size_t step = 0;
    double time = 0.0;
    std::size_t index = 0;
    double x = 0.0;
    ThetaValue theta;
    double d_value = 0.0;
    std::string interval;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    RunReport report;
};

/// Every DDS violation of every state visited by run(config). Writes
/// dds_violations.csv when out_dir is set.
ScanResult scan(const RunConfig& config);

struct EocRow {
    std::size_t n_cells = 0;
    ErrorNorms errors;
    std::optional<double> eoc;  ///< log2(e_prev / e_this) on L1, absent for the first row
};

/// Runs config at each N in n_list (concurrently) and tabulates L1 convergence.
/// Writes eoc.csv when out_dir is set.
std::vector<EocRow> sweep(const RunConfig& config, const std::vector<std::size_t>& n_list);

/// 17-significant-digit rendering used in every CSV.
std::string format_real(double v);

std::string snapshot_csv(const Grid1D& grid, const State& numeric, const State& exact);

}  // namespace advect
