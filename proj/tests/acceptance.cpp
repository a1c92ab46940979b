// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "advect/dds.hpp"
#include "advect/driver.hpp"
#include "advect/metrics.hpp"
#include "advect/schemes.hpp"
#include "oracles.hpp"

using namespace advect;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double max_abs(const State& s) {
    double m = 0.0;
    for (double v : s.values) m = std::max(m, std::abs(v));
    return m;
}

const std::vector<std::string> kLinear = {"two-point-upwind", "three-point-upwind-2nd", "beam-warming",
                                          "lax-friedrichs", "ftcs", "lax-wendroff"};

Outcome ac1_figure_reproduction() {
    const auto t0 = Clock::now();
    RunConfig sine;  // lax-wendroff, a = 1, CFL 0.8, N = 100, [-1, 1], t = 6
    const RunResult s = run(sine);
    RunConfig bump = sine;
    bump.ic = "bump";
    const RunResult b = run(bump);
    const double elapsed = seconds_since(t0);

    bool sine_steady = s.report.steps.size() == 376;
    for (const auto& r : s.report.steps) sine_steady = sine_steady && r.extrema_count == 2;

    bool bump_extrema = false, bump_tv = false;
    for (const auto& r : b.report.steps) {
        bump_extrema = bump_extrema || r.extrema_count > 1;
        bump_tv = bump_tv || r.total_variation - b.report.initial_tv > b.report.tv_tol;
    }

    Outcome o;
    o.pass = s.report.verdict == Verdict::Clean && sine_steady && b.report.verdict == Verdict::Oscillatory &&
             bump_extrema && bump_tv && elapsed < 1.0;
    std::ostringstream os;
    os << "sine " << to_string(s.report.verdict) << " (extrema 2 at all " << s.report.steps.size() << " states: "
       << (sine_steady ? "yes" : "no") << "), bump " << to_string(b.report.verdict) << " (max extrema "
       << b.report.max_extrema << ", max TV growth " << b.report.max_tv_growth << " vs tol " << b.report.tv_tol
       << ", first at t=" << b.report.first_oscillation_time.value_or(-1.0) << "), " << elapsed << " s";
    o.detail = os.str();
    return o;
}

Outcome ac2_endpoint_duality() {
    struct Row {
        std::string name;
        double cfl;
    };
    std::vector<Row> rows;
    for (const char* n : {"three-point-upwind-2nd", "beam-warming", "lax-friedrichs", "ftcs", "lax-wendroff"})
        for (double cfl : {0.25, 0.5, 0.8}) rows.push_back({n, cfl});
    rows.push_back({"beam-warming", 1.5});

    Outcome o;
    std::size_t endpoints = 0;
    double worst = 0.0;
    std::ostringstream fails;
    for (const auto& [name, cfl] : rows) {
        const auto spec = catalog(name, 1.0, cfl);
        const auto interval = dds_interval(spec);
        for (double e : interval.finite_endpoints()) {
            ++endpoints;
            for (double d : {coefficient_at(spec, e), oracle::brute_force_d(spec, e)}) {
                const double miss = std::min(std::abs(d), std::abs(d - 1.0));
                worst = std::max(worst, miss);
                if (miss > 1e-10) {
                    o.pass = false;
                    fails << " " << name << "@" << cfl << ":D(" << e << ")=" << d;
                }
            }
            for (double step : {-1e-3, 1e-3}) {
                const double t = e + step;
                const double d = oracle::brute_force_d(spec, t);
                const bool strictly_inside = d > 0.0 && d < 1.0;
                const bool strictly_outside = d < 0.0 || d > 1.0;
                const bool ok = interval.contains(t) ? strictly_inside : strictly_outside;
                if (!ok) {
                    o.pass = false;
                    fails << " " << name << "@" << cfl << ":side(" << t << ")";
                }
            }
        }
    }
    std::ostringstream os;
    os << endpoints << " endpoints over " << rows.size() << " scheme/CFL pairs, max |D - {0,1}| = " << worst
       << fails.str();
    o.detail = os.str();
    return o;
}

Outcome ac3_uno_exclusivity() {
    Outcome o;
    std::size_t checked = 0, uno_upwind = 0, uno_centred = 0;
    for (double lam : {0.25, 0.5, 0.8}) {
        for (int k = -200; k <= 200; ++k) {
            const double beta = k / 100.0;
            const auto up = SchemeSpec::custom("sweep", Family::UpwindFlux, 1.0, lam, 1.0 + beta, beta);
            const bool u = is_uno(up);
            if (u) ++uno_upwind;
            if (u != (k == 0)) o.pass = false;
            // centred members (alpha = a - beta) are UNO only when they collapse onto the upwind flux
            const auto ce = SchemeSpec::custom("sweep", Family::CentredFlux, 1.0, lam, 1.0 - beta, beta);
            if (is_uno(ce)) {
                ++uno_centred;
                if (k != 100) o.pass = false;
            }
            ++checked;
        }
    }
    std::ostringstream os;
    os << checked << " upwind-family members, UNO only at beta = 0 (" << uno_upwind
       << " hits); centred family UNO only at alpha = 0 (" << uno_centred << " hits)";
    o.detail = os.str();
    return o;
}

Outcome ac4_eno2_uno() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    constexpr std::size_t n = 64;
    constexpr int states = 10000;
    Grid1D g = make_grid(-1.0, 1.0, n, 0.5, 1.0);
    double d_min = 1.0, d_max = 0.0, worst_tv = -1.0;
    for (double cfl : {0.1, 0.3, 0.5}) {
        const auto spec = catalog("eno2", 1.0, cfl);
        for (int trial = 0; trial < states; ++trial) {
            const State s = oracle::make_state(oracle::random_values(rng, n));
            for (std::size_t i = 0; i < n; ++i) {
                const auto c = eno2_coefficient(s, static_cast<std::ptrdiff_t>(i), 1.0, cfl);
                if (c.degenerate()) continue;
                d_min = std::min(d_min, c.value);
                d_max = std::max(d_max, c.value);
            }
            const double tv0 = total_variation(s);
            const double tv1 = total_variation(step_flux_form(g, spec, s));
            worst_tv = std::max(worst_tv, (tv1 - tv0) / tv0);
        }
    }
    if (d_min < 0.0 || d_max > 1.0 || worst_tv > 1e-10) o.pass = false;

    // Above CFL 1/2 the bound fails: search for a witness.
    bool witness = false;
    double witness_d = 0.0;
    for (int trial = 0; trial < 10000 && !witness; ++trial) {
        const State s = oracle::make_state(oracle::random_values(rng, n));
        for (std::size_t i = 0; i < n && !witness; ++i) {
            const auto c = eno2_coefficient(s, static_cast<std::ptrdiff_t>(i), 1.0, 0.8);
            if (!c.degenerate() && (c.value < 0.0 || c.value > 1.0)) {
                witness = true;
                witness_d = c.value;
            }
        }
    }
    if (!witness) o.pass = false;

    std::ostringstream os;
    os << 3 * states << " states, D in [" << d_min << ", " << d_max << "], max relative TV change " << worst_tv
       << "; CFL 0.8 witness " << (witness ? "found, D = " + std::to_string(witness_d) : "not found");
    o.detail = os.str();
    return o;
}

Outcome ac5_convergence() {
    Outcome o;
    const auto t0 = Clock::now();
    RunConfig c;
    c.t_final = 1.0;
    std::ostringstream os;
    struct Target {
        const char* name;
        double lo, hi;
    };
    for (const auto& [name, lo, hi] : {Target{"two-point-upwind", 0.8, 1.2}, Target{"lax-wendroff", 1.8, 2.2},
                                      Target{"beam-warming", 1.8, 2.2}}) {
        c.scheme = name;
        const auto rows = sweep(c, {50, 100, 200, 400});
        os << name << " EOC";
        for (const auto& r : rows) {
            if (!r.eoc) continue;
            os << " " << *r.eoc;
            if (*r.eoc < lo || *r.eoc > hi) o.pass = false;
        }
        os << "; ";
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 5.0) o.pass = false;
    os << elapsed << " s";
    o.detail = os.str();
    return o;
}

Outcome ac6_flux_incremental() {
    Outcome o;
    std::mt19937_64 rng(77);
    constexpr std::size_t n = 64;
    const Grid1D g = make_grid(-1.0, 1.0, n, 0.5, 1.0);
    double worst = 0.0;
    std::size_t compared = 0;
    for (const auto& name : kLinear) {
        std::vector<double> cfls = {0.25, 0.5};
        if (name != "three-point-upwind-2nd") cfls.push_back(0.8);
        if (name == "beam-warming") cfls.push_back(1.5);
        for (double a : {1.0, -1.0}) {
            for (double cfl : cfls) {
                const auto spec = catalog(name, a, cfl);
                for (int trial = 0; trial < 1000; ++trial) {
                    const State s = oracle::make_state(oracle::random_values(rng, n));
                    const State f = step_flux_form(g, spec, s);
                    const State inc = step_incremental(g, spec, s);
                    double diff = 0.0;
                    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(f[i] - inc[i]));
                    worst = std::max(worst, diff / max_abs(f));
                    ++compared;
                }
            }
        }
    }
    if (worst > 1e-12) o.pass = false;
    std::ostringstream os;
    os << compared << " random states across the linear catalog (both signs of a), max relative difference " << worst;
    o.detail = os.str();
    return o;
}

Outcome ac7_shift_and_conservation() {
    Outcome o;
    RunConfig c;
    c.scheme = "two-point-upwind";
    c.cfl = 1.0;
    c.ic = "bump";
    c.t_final = 4.0;  // h = k = 0.02: 200 steps
    const RunResult r = run(c);
    const double shift_err = r.report.errors.linf;
    if (r.final_state.step_index != 200 || shift_err > 1e-14) o.pass = false;

    std::mt19937_64 rng(99);
    const Grid1D g = make_grid(-1.0, 1.0, 50, 0.5, 1.0);
    double worst = 0.0;
    for (const auto& name : catalog_names()) {
        for (double a : {1.0, -1.0}) {
            const auto spec = catalog(name, a, 0.5);
            State s = oracle::make_state(oracle::random_values(rng, 50, -1.0, 2.0));
            for (int step = 0; step < 100; ++step) {
                const State t = step_flux_form(g, spec, s);
                double before = 0.0, after = 0.0, l1 = 0.0;
                for (std::size_t i = 0; i < 50; ++i) {
                    before += s[i];
                    after += t[i];
                    l1 += std::abs(s[i]);
                }
                worst = std::max(worst, std::abs(after - before) / l1);
                s = t;
            }
        }
    }
    if (worst > 1e-10) o.pass = false;
    std::ostringstream os;
    os << r.final_state.step_index << " unit-CFL upwind steps, max error " << shift_err
       << "; max relative sum drift per step " << worst;
    o.detail = os.str();
    return o;
}

Outcome ac8_von_neumann() {
    Outcome o;
    const double lw = std::abs(amplification_factor(catalog("lax-wendroff", 1.0, 0.8), std::numbers::pi));
    const double ftcs_max = amplification(catalog("ftcs", 1.0, 0.8), 257).max_magnitude();
    const auto up = amplification(catalog("two-point-upwind", 1.0, 1.0), 257);
    double up_dev = 0.0;
    for (double m : up.magnitudes) up_dev = std::max(up_dev, std::abs(m - 1.0));
    if (std::abs(lw - 0.28) > 1e-12 || !(ftcs_max > 1.0) || up_dev > 1e-12) o.pass = false;
    std::ostringstream os;
    os << "LxW |g(pi)| = " << lw << ", FTCS max |g| = " << ftcs_max << ", upwind max ||g| - 1| = " << up_dev;
    o.detail = os.str();
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        Outcome (*check)();
    };
    const Criterion criteria[] = {
        {"AC1", "Lax-Wendroff sine vs bump reproduction", ac1_figure_reproduction},
        {"AC2", "DDS endpoint duality", ac2_endpoint_duality},
        {"AC3", "UNO exclusivity sweep", ac3_uno_exclusivity},
        {"AC4", "ENO2 UNO property", ac4_eno2_uno},
        {"AC5", "convergence orders", ac5_convergence},
        {"AC6", "flux/incremental equivalence", ac6_flux_incremental},
        {"AC7", "exact shift and conservation", ac7_shift_and_conservation},
        {"AC8", "Von Neumann spot values", ac8_von_neumann},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.pass) ++failures;
        std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
