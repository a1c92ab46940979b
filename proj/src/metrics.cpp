#include "advect/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "advect/dds.hpp"

namespace advect {

double total_variation(const State& state) {
    const std::size_t n = state.size();
    double tv = 0.0;
    for (std::size_t i = 0; i < n; ++i) tv += std::abs(state.values[(i + 1) % n] - state.values[i]);
    return tv;
}

ExtremaCensus extrema_census(const State& state, double eps) {
    if (eps < 0.0) throw std::invalid_argument("census eps must be nonnegative");
    ExtremaCensus c;
    const double threshold = -eps * eps;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const auto ii = static_cast<std::ptrdiff_t>(i);
        const double left = state.at(ii) - state.at(ii - 1);
        const double right = state.at(ii + 1) - state.at(ii);
        if (left * right < threshold) c.indices.push_back(i);
    }
    c.count = c.indices.size();
    return c;
}

ErrorNorms error_norms(const State& numeric, const State& exact, double h) {
    if (numeric.size() != exact.size()) throw std::invalid_argument("error norms need states on the same grid");
    ErrorNorms e;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double d = std::abs(numeric.values[i] - exact.values[i]);
        e.l1 += d;
        sum_sq += d * d;
        e.linf = std::max(e.linf, d);
    }
    e.l1 *= h;
    e.l2 = std::sqrt(h * sum_sq);
    return e;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Clean: return "clean";
        case Verdict::Oscillatory: return "oscillatory";
        case Verdict::Diverged: return "diverged";
    }
    return "unknown";
}

OscillationMonitor::OscillationMonitor(const State& initial, const Tolerances& tol) {
    double peak = 0.0;
    for (double v : initial.values) peak = std::max(peak, std::abs(v));
    report_.census_eps = tol.eps_rel * peak;
    report_.initial_tv = total_variation(initial);
    report_.tv_tol = tol.tv_tol_rel * report_.initial_tv;
    report_.initial_extrema = extrema_census(initial, report_.census_eps).count;
    report_.max_extrema = report_.initial_extrema;
    report_.final_time = initial.time;

    StepRecord first;
    first.step = initial.step_index;
    first.time = initial.time;
    first.extrema_count = report_.initial_extrema;
    first.total_variation = report_.initial_tv;
    report_.steps.push_back(first);

    if (!initial.all_finite()) {
        report_.verdict = Verdict::Diverged;
        report_.diverged_at_step = initial.step_index;
    }
}

void OscillationMonitor::observe(const SchemeSpec& spec, const State& before, const State& after) {
    StepRecord rec;
    rec.step = after.step_index;
    rec.time = after.time;
    rec.lambda = spec.lambda;
    report_.final_time = after.time;
    report_.final_lambda = spec.lambda;

    if (after.diverged || !after.all_finite()) {
        rec.total_variation = total_variation(after);
        report_.steps.push_back(rec);
        report_.verdict = Verdict::Diverged;
        if (!report_.diverged_at_step) report_.diverged_at_step = after.step_index;
        return;
    }

    rec.extrema_count = extrema_census(after, report_.census_eps).count;
    rec.total_variation = total_variation(after);
    rec.max_principle_violations = local_max_principle_check(spec.sign(), before, after).size();
    rec.dds_violations = classify_state(spec, before).violations;
    report_.steps.push_back(rec);

    report_.max_extrema = std::max(report_.max_extrema, rec.extrema_count);
    const double growth = rec.total_variation - report_.initial_tv;
    if (report_.steps.size() == 2 || growth > report_.max_tv_growth) report_.max_tv_growth = growth;

    const bool new_extrema = rec.extrema_count > report_.initial_extrema;
    const bool tv_grew = growth > report_.tv_tol;
    if ((new_extrema || tv_grew) && report_.verdict == Verdict::Clean) {
        report_.verdict = Verdict::Oscillatory;
        report_.first_oscillation_time = after.time;
    }
}

RunReport OscillationMonitor::finish(const State& final_numeric, const State& exact_final, double h) const {
    RunReport out = report_;
    out.errors = error_norms(final_numeric, exact_final, h);
    return out;
}

RunReport assess(const SchemeSpec& spec, std::span<const State> history, const State& exact_final, double h,
                 const Tolerances& tol) {
    if (history.empty()) throw std::invalid_argument("assess needs a non-empty history");
    OscillationMonitor monitor(history.front(), tol);
    for (std::size_t n = 1; n < history.size(); ++n) monitor.observe(spec, history[n - 1], history[n]);
    return monitor.finish(history.back(), exact_final, h);
}

}  // namespace advect
