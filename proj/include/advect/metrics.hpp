#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "advect/grid.hpp"
#include "advect/schemes.hpp"

namespace advect {

/// Sum |u_{i+1} - u_i| with periodic wrap.
double total_variation(const State& state);

struct ExtremaCensus {
    std::size_t count = 0;
    std::vector<std::size_t> indices;
};

/// Strict slope sign changes: (u_i - u_{i-1}) (u_{i+1} - u_i) < -eps^2.
/// Plateaus of equal values never count.
ExtremaCensus extrema_census(const State& state, double eps);

struct ErrorNorms {
    double l1 = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
};

/// h-weighted discrete norms of numeric - exact.
ErrorNorms error_norms(const State& numeric, const State& exact, double h);

/// Relative tolerances; both are scaled by the initial data.
struct Tolerances {
    double eps_rel = 1e-10;     ///< census eps = eps_rel * max|u0|
    double tv_tol_rel = 1e-6;   ///< tv_tol = tv_tol_rel * TV(u0)
};

enum class Verdict { Clean, Oscillatory, Diverged };

std::string to_string(Verdict v);

struct StepRecord {
    std::size_t step = 0;
    double time = 0.0;
    double lambda = 0.0;
    std::size_t extrema_count = 0;
    double total_variation = 0.0;
    std::size_t max_principle_violations = 0;
    std::size_t dds_violations = 0;  ///< of the state the step was applied to
};

struct RunReport {
    std::vector<StepRecord> steps;  ///< steps[0] describes the initial state
    ErrorNorms errors;
    Verdict verdict = Verdict::Clean;
    std::size_t initial_extrema = 0;
    double initial_tv = 0.0;
    double census_eps = 0.0;
    double tv_tol = 0.0;
    std::size_t max_extrema = 0;
    double max_tv_growth = 0.0;  ///< max over steps of TV(u^n) - TV(u^0)
    std::optional<double> first_oscillation_time;
    std::optional<std::size_t> diverged_at_step;
    double final_time = 0.0;
    double final_lambda = 0.0;
};

/// Accumulates the per-step diagnostics of one run.
///
/// Oscillatory means a step produced more strict extrema than the initial
/// data had, or pushed TV above TV(u0) + tv_tol. Diverged wins over both.
class OscillationMonitor {
public:
    OscillationMonitor(const State& initial, const Tolerances& tol);

    /// spec is the scheme (at the lambda actually used) that mapped before -> after.
    void observe(const SchemeSpec& spec, const State& before, const State& after);

    const RunReport& report() const { return report_; }

    /// Fills the error norms and returns the completed report.
    RunReport finish(const State& final_numeric, const State& exact_final, double h) const;

private:
    RunReport report_;
};

/// One-shot version over a stored history (history[0] is the initial state).
RunReport assess(const SchemeSpec& spec, std::span<const State> history, const State& exact_final, double h,
                 const Tolerances& tol);

}  // namespace advect
