#include "advect/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace advect {

namespace {

constexpr double kConsistencyTol = 1e-12;

CflRange range(double lo, double hi, bool lo_closed, bool hi_closed) {
    return CflRange{lo, hi, lo_closed, hi_closed};
}

State advanced(const State& state, std::vector<double> values, double dt) {
    State out;
    out.values = std::move(values);
    out.time = state.time + dt;
    out.step_index = state.step_index + 1;
    out.diverged = state.diverged || !out.all_finite();
    return out;
}

}  // namespace

std::string to_string(Family family) {
    switch (family) {
        case Family::UpwindFlux: return "upwind";
        case Family::CentredFlux: return "centred";
        case Family::HybridENO2: return "hybrid-eno2";
    }
    return "unknown";
}

std::string to_string(DBranch branch) {
    switch (branch) {
        case DBranch::UpwindPositive: return "upwind+";
        case DBranch::UpwindNegative: return "upwind-";
        case DBranch::CentredPositive: return "centred+";
        case DBranch::CentredNegative: return "centred-";
        case DBranch::Eno2Case1: return "eno2-case1";
        case DBranch::Eno2Case2: return "eno2-case2";
        case DBranch::Eno2Case3: return "eno2-case3";
        case DBranch::Eno2Case4: return "eno2-case4";
        case DBranch::Degenerate: return "degenerate";
    }
    return "unknown";
}

bool CflRange::contains(double cfl) const {
    const bool above = lo_closed ? cfl >= lo : cfl > lo;
    const bool below = hi_closed ? cfl <= hi : cfl < hi;
    return above && below;
}

std::string CflRange::describe() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%c%g, %g%c", lo_closed ? '[' : '(', lo, hi, hi_closed ? ']' : ')');
    return buf;
}

double SchemeSpec::cfl() const { return std::abs(a) * lambda; }

double SchemeSpec::consistency_residual() const {
    switch (family) {
        case Family::UpwindFlux: return alpha - beta - a;
        case Family::CentredFlux: return alpha + beta - a;
        case Family::HybridENO2: return 0.0;
    }
    return 0.0;
}

SchemeSpec SchemeSpec::custom(std::string name, Family family, double a, double lambda, double alpha, double beta) {
    if (a == 0.0) throw std::invalid_argument("advection speed must be nonzero");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    SchemeSpec s;
    s.name = std::move(name);
    s.family = family;
    s.a = a;
    s.lambda = lambda;
    s.alpha = alpha;
    s.beta = beta;
    s.cfl_range = range(0.0, 1.0, false, true);
    if (std::abs(s.consistency_residual()) > kConsistencyTol * std::max(1.0, std::abs(a)))
        throw std::invalid_argument("inconsistent flux coefficients for scheme '" + s.name + "'");
    return s;
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "two-point-upwind", "three-point-upwind-2nd", "beam-warming", "lax-friedrichs", "ftcs", "lax-wendroff", "eno2",
    };
    return names;
}

SchemeSpec catalog(const std::string& name, double a, double lambda) {
    if (a == 0.0) throw std::invalid_argument("advection speed must be nonzero");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");

    SchemeSpec s;
    s.name = name;
    s.a = a;
    s.lambda = lambda;
    // Upwind rows scale with a at |a|*lambda; centred rows use the signed a*lambda.
    const double nu = std::abs(a) * lambda;
    const double signed_nu = a * lambda;

    if (name == "two-point-upwind") {
        s.family = Family::UpwindFlux;
        s.alpha = a;
        s.beta = 0.0;
        s.cfl_range = range(0.0, 1.0, false, true);
    } else if (name == "three-point-upwind-2nd") {
        s.family = Family::UpwindFlux;
        s.alpha = 1.5 * a;
        s.beta = 0.5 * a;
        s.cfl_range = range(0.0, 0.5, false, true);
    } else if (name == "beam-warming") {
        s.family = Family::UpwindFlux;
        s.alpha = 0.5 * a * (3.0 - nu);
        s.beta = 0.5 * a * (1.0 - nu);
        s.cfl_range = nu <= 1.0 ? range(0.0, 1.0, false, true) : range(1.0, 2.0, false, true);
    } else if (name == "lax-friedrichs") {
        s.family = Family::CentredFlux;
        s.alpha = (signed_nu - 1.0) / (2.0 * lambda);
        s.beta = (signed_nu + 1.0) / (2.0 * lambda);
        s.cfl_range = range(0.0, 1.0, false, true);
    } else if (name == "ftcs") {
        s.family = Family::CentredFlux;
        s.alpha = 0.5 * a;
        s.beta = 0.5 * a;
        s.cfl_range = range(0.0, 1.0, false, true);
    } else if (name == "lax-wendroff") {
        s.family = Family::CentredFlux;
        s.alpha = 0.5 * a * (1.0 - signed_nu);
        s.beta = 0.5 * a * (1.0 + signed_nu);
        s.cfl_range = range(0.0, 1.0, false, true);
    } else if (name == "eno2") {
        s.family = Family::HybridENO2;
        s.alpha = a;
        s.beta = 0.0;
        s.cfl_range = range(0.0, 0.5, false, true);
    } else {
        throw std::invalid_argument("unknown scheme '" + name + "'");
    }
    return s;
}

FluxStencil flux_stencil(const SchemeSpec& spec) {
    FluxStencil st;
    switch (spec.family) {
        case Family::UpwindFlux:
            if (spec.a > 0.0)
                st.offsets = {0, -1};
            else
                st.offsets = {1, 2};
            st.weights = {spec.alpha, -spec.beta};
            return st;
        case Family::CentredFlux:
            st.offsets = {1, 0};
            st.weights = {spec.alpha, spec.beta};
            return st;
        case Family::HybridENO2:
            break;
    }
    throw std::invalid_argument("ENO2 has no fixed linear flux stencil");
}

double eno2_flux(const State& state, std::ptrdiff_t i, double a) {
    if (a > 0.0) {
        const double outer = backward_diff(state, i);
        const double inner = forward_diff(state, i);
        if (std::abs(outer) <= std::abs(inner)) return a * (state.at(i) + 0.5 * outer);
        return a * (state.at(i) + 0.5 * inner);
    }
    const double outer = forward_diff(state, i + 1);
    const double inner = backward_diff(state, i + 1);
    if (std::abs(outer) <= std::abs(inner)) return a * (state.at(i + 1) - 0.5 * outer);
    return a * (state.at(i + 1) - 0.5 * inner);
}

double numerical_flux(const SchemeSpec& spec, const State& state, std::ptrdiff_t i) {
    if (spec.family == Family::HybridENO2) return eno2_flux(state, i, spec.a);
    const FluxStencil st = flux_stencil(spec);
    return st.weights[0] * state.at(i + st.offsets[0]) + st.weights[1] * state.at(i + st.offsets[1]);
}

DCoefficient eno2_case_table(double d0, double d1, double d2, double cfl) {
    DCoefficient c;
    c.theta_used = ThetaValue::ratio(d0, d1, Direction::Plus);
    if (d1 == 0.0) {
        c.branch = DBranch::Degenerate;
        c.value = cfl;
        return c;
    }
    // Ties go to the upwind-biased stencil at both faces.
    const bool downstream_upwind = std::abs(d1) <= std::abs(d2);
    const bool upstream_upwind = std::abs(d0) <= std::abs(d1);
    const double r0 = d0 / d1;
    const double r2 = d2 / d1;
    if (downstream_upwind && upstream_upwind) {
        c.branch = DBranch::Eno2Case1;
        c.value = cfl * (-0.5 * r0 + 1.5);
    } else if (downstream_upwind) {
        c.branch = DBranch::Eno2Case2;
        c.value = cfl;
    } else if (upstream_upwind) {
        c.branch = DBranch::Eno2Case3;
        c.value = cfl * (0.5 * (r2 - r0) + 1.0);
    } else {
        c.branch = DBranch::Eno2Case4;
        c.value = cfl * (0.5 * r2 + 0.5);
    }
    return c;
}

DCoefficient eno2_coefficient(const State& state, std::ptrdiff_t i, double a, double lambda) {
    const double cfl = std::abs(a) * lambda;
    if (a > 0.0) return eno2_case_table(backward_diff(state, i - 1), backward_diff(state, i), forward_diff(state, i), cfl);
    // Mirror image of the a > 0 stencil.
    DCoefficient c = eno2_case_table(forward_diff(state, i + 1), forward_diff(state, i), backward_diff(state, i), cfl);
    c.theta_used.direction = Direction::Minus;
    return c;
}

DCoefficient incremental_coefficient(const SchemeSpec& spec, const State& state, std::ptrdiff_t i) {
    if (spec.family == Family::HybridENO2) return eno2_coefficient(state, i, spec.a, spec.lambda);

    const double lam = spec.lambda;
    DCoefficient c;
    bool ratio_matters = true;
    if (spec.family == Family::UpwindFlux) {
        ratio_matters = spec.beta != 0.0;
        if (spec.a > 0.0) {
            // D = lambda (alpha - beta theta+_{i-1}),  theta+_{i-1} = D-u_{i-1} / D-u_i
            c.theta_used = theta_directed(state, i - 1, Direction::Plus);
            c.branch = DBranch::UpwindPositive;
            if (c.theta_used.finite()) c.value = lam * (spec.alpha - spec.beta * c.theta_used.value);
        } else {
            // D = lambda (beta theta-_{i+1} - alpha),  theta-_{i+1} = D+u_{i+1} / D+u_i
            c.theta_used = theta_directed(state, i + 1, Direction::Minus);
            c.branch = DBranch::UpwindNegative;
            if (c.theta_used.finite()) c.value = lam * (spec.beta * c.theta_used.value - spec.alpha);
        }
        if (!ratio_matters) c.value = spec.a > 0.0 ? lam * spec.alpha : -lam * spec.alpha;
    } else {
        if (spec.a > 0.0) {
            // D = lambda (alpha theta-_i + beta)
            ratio_matters = spec.alpha != 0.0;
            c.theta_used = theta_directed(state, i, Direction::Minus);
            c.branch = DBranch::CentredPositive;
            if (c.theta_used.finite()) c.value = lam * (spec.alpha * c.theta_used.value + spec.beta);
            if (!ratio_matters) c.value = lam * spec.beta;
        } else {
            // D = -lambda (alpha + beta theta+_i)
            ratio_matters = spec.beta != 0.0;
            c.theta_used = theta_directed(state, i, Direction::Plus);
            c.branch = DBranch::CentredNegative;
            if (c.theta_used.finite()) c.value = -lam * (spec.alpha + spec.beta * c.theta_used.value);
            if (!ratio_matters) c.value = -lam * spec.alpha;
        }
    }
    if (ratio_matters && !c.theta_used.finite()) {
        c.branch = DBranch::Degenerate;
        c.value = lam * std::abs(spec.a);
    }
    return c;
}

State step_flux_form(const Grid1D& grid, const SchemeSpec& spec, const State& state) {
    const std::size_t n = state.size();
    std::vector<double> flux(n);
    for (std::size_t i = 0; i < n; ++i) flux[i] = numerical_flux(spec, state, static_cast<std::ptrdiff_t>(i));

    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double left = flux[i == 0 ? n - 1 : i - 1];
        next[i] = state.values[i] - spec.lambda * (flux[i] - left);
    }
    return advanced(state, std::move(next), spec.lambda * grid.h);
}

State step_incremental(const Grid1D& grid, const SchemeSpec& spec, const State& state) {
    const std::size_t n = state.size();
    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ii = static_cast<std::ptrdiff_t>(i);
        const DCoefficient c = incremental_coefficient(spec, state, ii);
        if (c.degenerate()) {
            next[i] = state.values[i] -
                      spec.lambda * (numerical_flux(spec, state, ii) - numerical_flux(spec, state, ii - 1));
        } else if (spec.a > 0.0) {
            next[i] = state.values[i] - c.value * backward_diff(state, ii);
        } else {
            next[i] = state.values[i] + c.value * forward_diff(state, ii);
        }
    }
    return advanced(state, std::move(next), spec.lambda * grid.h);
}

State step_eno2(const Grid1D& grid, const State& state, double a, double lambda) {
    return step_flux_form(grid, catalog("eno2", a, lambda), state);
}

}  // namespace advect
