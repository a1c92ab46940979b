#include "advect/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

namespace advect {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) throw std::invalid_argument("bad number for '" + key + "': " + value);
    return v;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
    const double v = parse_real(key, value);
    if (v < 0.0 || v != std::floor(v)) throw std::invalid_argument("bad integer for '" + key + "': " + value);
    return static_cast<std::size_t>(v);
}

bool parse_flag(const std::string& key, const std::string& value) {
    if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
    if (value == "0" || value == "false" || value == "no" || value == "off") return false;
    throw std::invalid_argument("bad boolean for '" + key + "': " + value);
}

/// Writes via a temporary file and a rename so readers never see partial output.
void write_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string snapshot_name(std::size_t step) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "snapshot_%06zu.csv", step);
    return buf;
}

std::vector<double> read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open initial-data table " + path);
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        values.push_back(parse_real("ic-table", line));
    }
    return values;
}

struct Visit {
    const SchemeSpec& spec;
    const State& state;
};

/// Core time loop. on_state sees every state paired with the scheme that
/// advances it (the final state is paired with the last scheme used).
template <class OnState>
RunResult simulate(const RunConfig& config, OnState&& on_state) {
    config.validate();
    RunResult result;
    result.grid = make_run_grid(config);
    const Grid1D& grid = result.grid;
    const InitialData data = make_initial_data(config);

    const StepPlan plan = plan_steps(config.t_final, grid.k);
    const std::size_t total = plan.total_steps();

    const fs::path dir = config.out_dir;
    const bool writing = !config.out_dir.empty();
    if (writing) fs::create_directories(dir);

    State state = sample_initial(grid, data);
    OscillationMonitor monitor(state, config.tol);
    SchemeSpec spec = catalog(config.scheme, grid.a, grid.lambda);

    auto snapshot = [&](const State& s) {
        if (!writing) return;
        const std::string name = snapshot_name(s.step_index);
        write_atomic(dir / name, snapshot_csv(grid, s, exact_solution(grid, data, s.time)));
        result.written.push_back(name);
    };

    snapshot(state);
    for (std::size_t n = 0; n < total && !state.diverged; ++n) {
        const bool partial = n == plan.full_steps;
        const Grid1D step_grid = partial ? grid.with_time_step(plan.last_step) : grid;
        spec = catalog(config.scheme, grid.a, step_grid.lambda);
        on_state(Visit{spec, state});

        State next = step_flux_form(step_grid, spec, state);
        next.time = n + 1 == total ? config.t_final : static_cast<double>(n + 1) * grid.k;
        monitor.observe(spec, state, next);
        state = std::move(next);
        if (state.step_index % config.snapshot_stride == 0) snapshot(state);
    }
    on_state(Visit{spec, state});
    // The final state is always snapshotted.
    if (state.step_index % config.snapshot_stride != 0) snapshot(state);

    result.exact_final = exact_solution(grid, data, state.time);
    result.report = monitor.finish(state, result.exact_final, grid.h);
    result.final_state = std::move(state);

    if (writing) {
        std::ostringstream steps;
        steps << "step,time,lambda,extrema_count,total_variation,max_principle_violations,dds_violations\n";
        for (const auto& r : result.report.steps) {
            steps << r.step << ',' << format_real(r.time) << ',' << format_real(r.lambda) << ',' << r.extrema_count
                  << ',' << format_real(r.total_variation) << ',' << r.max_principle_violations << ','
                  << r.dds_violations << '\n';
        }
        write_atomic(dir / "steps.csv", steps.str());
        result.written.push_back("steps.csv");

        const RunReport& rep = result.report;
        const DdsDescription dds = describe_dds(config.scheme, config.a, config.cfl);
        std::ostringstream report;
        report << "key,value\n";
        auto kv = [&](const std::string& k, const std::string& v) { report << k << ',' << v << '\n'; };
        kv("scheme", config.scheme);
        kv("ic", config.ic_table.empty() ? config.ic : "table");
        kv("a", format_real(config.a));
        kv("cfl", format_real(config.cfl));
        kv("n_cells", std::to_string(config.n_cells));
        kv("x_lo", format_real(config.x_lo));
        kv("x_hi", format_real(config.x_hi));
        kv("t_final", format_real(config.t_final));
        kv("h", format_real(grid.h));
        kv("k", format_real(grid.k));
        kv("lambda", format_real(grid.lambda));
        kv("final_step_lambda", format_real(rep.final_lambda));
        kv("steps", std::to_string(result.final_state.step_index));
        kv("final_time", format_real(result.final_state.time));
        kv("verdict", to_string(rep.verdict));
        kv("initial_extrema", std::to_string(rep.initial_extrema));
        kv("max_extrema", std::to_string(rep.max_extrema));
        kv("initial_tv", format_real(rep.initial_tv));
        kv("max_tv_growth", format_real(rep.max_tv_growth));
        kv("census_eps", format_real(rep.census_eps));
        kv("tv_tol", format_real(rep.tv_tol));
        kv("first_oscillation_time", rep.first_oscillation_time ? format_real(*rep.first_oscillation_time) : "none");
        kv("diverged_at_step", rep.diverged_at_step ? std::to_string(*rep.diverged_at_step) : "none");
        kv("l1_error", format_real(rep.errors.l1));
        kv("l2_error", format_real(rep.errors.l2));
        kv("linf_error", format_real(rep.errors.linf));
        kv("dds_region", dds.interval ? "\"" + dds.interval->describe() + "\"" : "n/a");
        kv("uno", dds.uno ? "true" : "false");
        kv("cfl_admissible", dds.spec.cfl_admissible() ? "true" : "false");
        write_atomic(dir / "report.csv", report.str());
        result.written.push_back("report.csv");

        if (config.plot_script) {
            std::ostringstream gp;
            gp << "# gnuplot script; one plot per snapshot\n"
               << "set datafile separator ','\n"
               << "set key autotitle columnhead\n";
            for (const auto& name : result.written) {
                if (name.rfind("snapshot_", 0) != 0) continue;
                gp << "set title '" << config.scheme << " " << name << "'\n"
                   << "plot '" << name << "' using 1:2 with linespoints, '' using 1:3 with lines\n"
                   << "pause -1\n";
            }
            write_atomic(dir / "plot.gp", gp.str());
            result.written.push_back("plot.gp");
        }
    }
    return result;
}

}  // namespace

void RunConfig::validate() const {
    if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw std::invalid_argument("t-final must be >= 0");
    if (snapshot_stride < 1) throw std::invalid_argument("stride must be >= 1");
    if (std::find(catalog_names().begin(), catalog_names().end(), scheme) == catalog_names().end())
        throw std::invalid_argument("unknown scheme '" + scheme + "'");
    if (tol.eps_rel < 0.0 || tol.tv_tol_rel < 0.0) throw std::invalid_argument("tolerances must be nonnegative");
    for (std::size_t n : n_list)
        if (n < 3) throw std::invalid_argument("n-list entries must be >= 3");
}

void apply_setting(RunConfig& c, const std::string& raw_key, const std::string& raw_value) {
    std::string key = trim(raw_key);
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string value = trim(raw_value);

    if (key == "scheme") c.scheme = value;
    else if (key == "a") c.a = parse_real(key, value);
    else if (key == "cfl") c.cfl = parse_real(key, value);
    else if (key == "n") c.n_cells = parse_count(key, value);
    else if (key == "x-lo") c.x_lo = parse_real(key, value);
    else if (key == "x-hi") c.x_hi = parse_real(key, value);
    else if (key == "t-final") c.t_final = parse_real(key, value);
    else if (key == "ic") c.ic = value;
    else if (key == "ic-table") c.ic_table = value;
    else if (key == "eps") c.tol.eps_rel = parse_real(key, value);
    else if (key == "tv-tol") c.tol.tv_tol_rel = parse_real(key, value);
    else if (key == "out-dir") c.out_dir = value;
    else if (key == "stride") c.snapshot_stride = parse_count(key, value);
    else if (key == "plot-script") c.plot_script = parse_flag(key, value);
    else if (key == "n-list") {
        std::vector<std::size_t> ns;
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) ns.push_back(parse_count(key, trim(item)));
        if (ns.empty()) throw std::invalid_argument("n-list is empty");
        c.n_list = std::move(ns);
    } else {
        throw std::invalid_argument("unknown config key '" + raw_key + "'");
    }
}

RunConfig parse_config(std::istream& in, RunConfig base) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + " is not key=value");
        apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
    }
    return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    return parse_config(in, std::move(base));
}

InitialData make_initial_data(const RunConfig& config) {
    if (!config.ic_table.empty()) return InitialData::table(read_table(config.ic_table));
    return InitialData::from_name(config.ic);
}

Grid1D make_run_grid(const RunConfig& config) {
    return make_grid(config.x_lo, config.x_hi, config.n_cells, config.cfl, config.a);
}

StepPlan plan_steps(double t_final, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("time step must be positive");
    StepPlan plan;
    if (t_final <= 0.0) return plan;
    const double q = t_final / k;
    const double nearest = std::round(q);
    // A step count within rounding of an integer means no partial step.
    if (nearest >= 1.0 && std::abs(q - nearest) <= 1e-9 * nearest) {
        plan.full_steps = static_cast<std::size_t>(nearest);
        return plan;
    }
    plan.full_steps = static_cast<std::size_t>(std::floor(q));
    plan.last_step = t_final - static_cast<double>(plan.full_steps) * k;
    return plan;
}

RunResult run(const RunConfig& config) {
    return simulate(config, [](const Visit&) {});
}

int exit_code(Verdict verdict) {
    switch (verdict) {
        case Verdict::Clean: return 0;
        case Verdict::Oscillatory: return 2;
        case Verdict::Diverged: return 3;
    }
    return 1;
}

DdsDescription describe_dds(const std::string& scheme, double a, double cfl) {
    if (a == 0.0) throw std::invalid_argument("advection speed must be nonzero");
    if (!(cfl > 0.0)) throw std::invalid_argument("CFL number must be positive");
    DdsDescription d;
    d.spec = catalog(scheme, a, cfl / std::abs(a));
    if (d.spec.family != Family::HybridENO2) d.interval = dds_interval(d.spec);
    d.uno = is_uno(d.spec);
    return d;
}

std::string DdsDescription::text() const {
    std::ostringstream os;
    os << "scheme:        " << spec.name << " (" << to_string(spec.family) << ")\n"
       << "a:             " << format_real(spec.a) << "\n"
       << "|a|*lambda:    " << format_real(spec.cfl()) << (spec.cfl_admissible() ? "" : "  (outside admissible range)")
       << "\n"
       << "cfl range:     " << spec.cfl_range.describe() << "\n";
    if (spec.family == Family::HybridENO2) {
        os << "D:             four-case ENO2 table, data dependent\n";
    } else {
        os << "alpha, beta:   " << format_real(spec.alpha) << ", " << format_real(spec.beta) << "\n"
           << "dds region:    " << interval->describe() << "\n"
           << "shape:         " << to_string(interval->shape) << "\n";
    }
    os << "uno:           " << (uno ? "yes" : "no") << "\n";
    return os.str();
}

std::string DdsDescription::csv() const {
    std::ostringstream os;
    os << "key,value\n"
       << "scheme," << spec.name << "\n"
       << "family," << to_string(spec.family) << "\n"
       << "a," << format_real(spec.a) << "\n"
       << "lambda," << format_real(spec.lambda) << "\n"
       << "cfl," << format_real(spec.cfl()) << "\n"
       << "alpha," << format_real(spec.alpha) << "\n"
       << "beta," << format_real(spec.beta) << "\n";
    if (interval) {
        os << "shape," << to_string(interval->shape) << "\n"
           << "theta_direction," << (interval->theta_direction == Direction::Plus ? "plus" : "minus") << "\n"
           << "theta_offset," << interval->theta_offset << "\n"
           << "lo," << format_real(interval->lo) << "\n"
           << "hi," << format_real(interval->hi) << "\n";
    }
    os << "uno," << (uno ? "true" : "false") << "\n";
    return os.str();
}

ScanResult scan(const RunConfig& config) {
    ScanResult out;
    std::vector<ScanRow>& rows = out.rows;
    Grid1D grid = make_run_grid(config);
    auto on_state = [&](const Visit& v) {
        const DdsReport rep = classify_state(v.spec, v.state);
        if (rep.violations == 0) return;
        const std::string region =
            v.spec.family == Family::HybridENO2 ? "D in [0,1]" : dds_interval(v.spec).describe();
        for (const auto& p : rep.points) {
            if (p.membership != Membership::Violation) continue;
            rows.push_back(ScanRow{v.state.step_index, v.state.time, p.index, grid.x(p.index), p.theta, p.d_value, region});
        }
    };
    RunConfig quiet = config;
    quiet.out_dir.clear();
    out.report = simulate(quiet, on_state).report;

    if (!config.out_dir.empty()) {
        fs::create_directories(config.out_dir);
        std::ostringstream os;
        os << "step,time,index,x,theta,d,region\n";
        for (const auto& r : rows) {
            os << r.step << ',' << format_real(r.time) << ',' << r.index << ',' << format_real(r.x) << ','
               << format_real(r.theta.value) << ',' << format_real(r.d_value) << ",\"" << r.interval << "\"\n";
        }
        write_atomic(fs::path(config.out_dir) / "dds_violations.csv", os.str());
    }
    return out;
}

std::vector<EocRow> sweep(const RunConfig& config, const std::vector<std::size_t>& n_list) {
    if (n_list.empty()) throw std::invalid_argument("sweep needs at least one grid size");
    config.validate();

    std::vector<std::future<ErrorNorms>> jobs;
    jobs.reserve(n_list.size());
    for (std::size_t n : n_list) {
        RunConfig c = config;
        c.n_cells = n;
        c.out_dir.clear();
        jobs.push_back(std::async(std::launch::async, [c] { return run(c).report.errors; }));
    }

    std::vector<EocRow> rows;
    for (std::size_t j = 0; j < n_list.size(); ++j) {
        EocRow row;
        row.n_cells = n_list[j];
        row.errors = jobs[j].get();
        if (j > 0) {
            const double ratio = rows.back().errors.l1 / row.errors.l1;
            const double refine = static_cast<double>(row.n_cells) / static_cast<double>(rows.back().n_cells);
            row.eoc = std::log(ratio) / std::log(refine);
        }
        rows.push_back(row);
    }

    if (!config.out_dir.empty()) {
        fs::create_directories(config.out_dir);
        std::ostringstream os;
        os << "n,l1_error,l2_error,linf_error,eoc_l1\n";
        for (const auto& r : rows) {
            os << r.n_cells << ',' << format_real(r.errors.l1) << ',' << format_real(r.errors.l2) << ','
               << format_real(r.errors.linf) << ',' << (r.eoc ? format_real(*r.eoc) : "") << '\n';
        }
        write_atomic(fs::path(config.out_dir) / "eoc.csv", os.str());
    }
    return rows;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string snapshot_csv(const Grid1D& grid, const State& numeric, const State& exact) {
    std::string out = "x,u_numeric,u_exact\n";
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        out += format_real(grid.x(i));
        out += ',';
        out += format_real(numeric.values[i]);
        out += ',';
        out += format_real(exact.values[i]);
        out += '\n';
    }
    return out;
}

}  // namespace advect
