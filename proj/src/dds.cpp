#include "advect/dds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace advect {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt_real(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string theta_label(Direction dir, int offset) {
    std::string s = dir == Direction::Plus ? "theta+_{i" : "theta-_{i";
    if (offset > 0) s += "+" + std::to_string(offset);
    if (offset < 0) s += std::to_string(offset);
    return s + "}";
}

void require_linear(const SchemeSpec& spec, const char* what) {
    if (spec.family == Family::HybridENO2)
        throw std::invalid_argument(std::string(what) + " is defined for linear schemes only, not ENO2");
}

}  // namespace

double CoefficientLaw::operator()(double theta) const {
    if (c1 == 0.0) return c0;
    return c0 + c1 * (reciprocal ? 1.0 / theta : theta);
}

CoefficientLaw coefficient_law(const SchemeSpec& spec) {
    require_linear(spec, "coefficient law");
    const double lam = spec.lambda;
    CoefficientLaw law;
    if (spec.family == Family::UpwindFlux) {
        if (spec.a > 0.0) {
            law = {lam * spec.alpha, -lam * spec.beta, false, Direction::Plus, -1};
        } else {
            law = {-lam * spec.alpha, lam * spec.beta, false, Direction::Minus, +1};
        }
    } else {
        // Natural variable is theta- (a > 0) or theta+ (a < 0) at i; reported after inversion.
        if (spec.a > 0.0) {
            law = {lam * spec.beta, lam * spec.alpha, true, Direction::Plus, 0};
        } else {
            law = {-lam * spec.alpha, -lam * spec.beta, true, Direction::Minus, 0};
        }
    }
    return law;
}

double coefficient_at(const SchemeSpec& spec, double theta) { return coefficient_law(spec)(theta); }

std::string to_string(IntervalShape shape) {
    switch (shape) {
        case IntervalShape::AllReals: return "all-reals";
        case IntervalShape::Interval: return "interval";
        case IntervalShape::ComplementOfOpenInterval: return "complement-of-open-interval";
        case IntervalShape::Empty: return "empty";
    }
    return "unknown";
}

bool DdsInterval::contains(double theta) const {
    switch (shape) {
        case IntervalShape::AllReals: return true;
        case IntervalShape::Empty: return false;
        case IntervalShape::Interval: return theta >= lo && theta <= hi;
        case IntervalShape::ComplementOfOpenInterval: return !(theta > lo && theta < hi);
    }
    return false;
}

bool DdsInterval::contains(const ThetaValue& theta) const {
    if (theta.indeterminate()) return true;
    return contains(theta.value);
}

std::vector<double> DdsInterval::finite_endpoints() const {
    std::vector<double> out;
    if (shape == IntervalShape::AllReals || shape == IntervalShape::Empty) return out;
    if (std::isfinite(lo)) out.push_back(lo);
    if (std::isfinite(hi) && hi != lo) out.push_back(hi);
    return out;
}

std::string DdsInterval::describe() const {
    const std::string label = theta_label(theta_direction, theta_offset);
    switch (shape) {
        case IntervalShape::AllReals: return label + " in R (UNO)";
        case IntervalShape::Empty: return label + " in {} (never non-oscillatory)";
        case IntervalShape::Interval: return label + " in [" + fmt_real(lo) + ", " + fmt_real(hi) + "]";
        case IntervalShape::ComplementOfOpenInterval: {
            std::string left = lo == -kInf ? "{-inf}" : "(-inf, " + fmt_real(lo) + "]";
            std::string right = hi == kInf ? "{inf}" : "[" + fmt_real(hi) + ", inf)";
            return label + " in " + left + " U " + right;
        }
    }
    return label;
}

DdsInterval dds_interval(const SchemeSpec& spec) {
    require_linear(spec, "DDS interval");
    if (std::abs(spec.consistency_residual()) > 1e-12 * std::max(1.0, std::abs(spec.a)))
        throw std::invalid_argument("inconsistent flux coefficients for scheme '" + spec.name + "'");

    const CoefficientLaw law = coefficient_law(spec);
    DdsInterval out;
    out.theta_direction = law.direction;
    out.theta_offset = law.offset;

    if (law.c1 == 0.0) {
        out.shape = (law.c0 >= 0.0 && law.c0 <= 1.0) ? IntervalShape::AllReals : IntervalShape::Empty;
        return out;
    }

    // 0 <= c0 + c1 t <= 1 in the natural variable t.
    const double at_zero = -law.c0 / law.c1;
    const double at_one = (1.0 - law.c0) / law.c1;
    const double t_lo = std::min(at_zero, at_one);
    const double t_hi = std::max(at_zero, at_one);

    if (!law.reciprocal) {
        out.shape = IntervalShape::Interval;
        out.lo = t_lo;
        out.hi = t_hi;
        return out;
    }

    // theta = 1/t; t = 0 corresponds to theta = +-inf.
    if (t_lo < 0.0 && t_hi > 0.0) {
        out.shape = IntervalShape::ComplementOfOpenInterval;
        out.lo = 1.0 / t_lo;
        out.hi = 1.0 / t_hi;
    } else if (t_lo == 0.0) {
        out.shape = IntervalShape::ComplementOfOpenInterval;
        out.lo = -kInf;
        out.hi = 1.0 / t_hi;
    } else if (t_hi == 0.0) {
        out.shape = IntervalShape::ComplementOfOpenInterval;
        out.lo = 1.0 / t_lo;
        out.hi = kInf;
    } else {
        out.shape = IntervalShape::Interval;
        out.lo = 1.0 / t_hi;
        out.hi = 1.0 / t_lo;
    }
    return out;
}

bool is_uno(const SchemeSpec& spec) {
    if (spec.family == Family::HybridENO2) return spec.cfl() > 0.0 && spec.cfl() <= 0.5;
    return dds_interval(spec).shape == IntervalShape::AllReals;
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::InDds: return "in-dds";
        case Membership::Violation: return "violation";
        case Membership::Degenerate: return "degenerate";
    }
    return "unknown";
}

DdsReport classify_state(const SchemeSpec& spec, const State& state) {
    DdsReport report;
    report.points.reserve(state.size());

    if (spec.family == Family::HybridENO2) {
        for (std::size_t i = 0; i < state.size(); ++i) {
            const DCoefficient c = eno2_coefficient(state, static_cast<std::ptrdiff_t>(i), spec.a, spec.lambda);
            PointClass p{i, c.theta_used, Membership::InDds, c.value};
            if (c.degenerate())
                p.membership = Membership::Degenerate;
            else if (c.value < 0.0 || c.value > 1.0)
                p.membership = Membership::Violation;
            report.points.push_back(p);
        }
    } else {
        const DdsInterval interval = dds_interval(spec);
        const CoefficientLaw law = coefficient_law(spec);
        for (std::size_t i = 0; i < state.size(); ++i) {
            const auto idx = static_cast<std::ptrdiff_t>(i) + interval.theta_offset;
            const ThetaValue th = theta_directed(state, idx, interval.theta_direction);
            PointClass p{i, th, Membership::InDds, law.c0};
            if (th.indeterminate()) {
                p.membership = Membership::Degenerate;
            } else {
                p.d_value = law(th.value);
                if (!interval.contains(th)) p.membership = Membership::Violation;
            }
            report.points.push_back(p);
        }
    }

    for (const auto& p : report.points) {
        switch (p.membership) {
            case Membership::InDds: ++report.in_dds; break;
            case Membership::Violation: ++report.violations; break;
            case Membership::Degenerate: ++report.degenerate; break;
        }
    }
    return report;
}

std::vector<std::size_t> local_max_principle_check(FlowSign sign, const State& before, const State& after,
                                                   double rel_tol) {
    if (before.size() != after.size()) throw std::invalid_argument("states differ in length");
    double scale = 0.0;
    for (double v : before.values) scale = std::max(scale, std::abs(v));
    const double tol = rel_tol * scale;

    std::vector<std::size_t> bad;
    const int neighbour = sign == FlowSign::Positive ? -1 : 1;
    for (std::size_t i = 0; i < before.size(); ++i) {
        const auto ii = static_cast<std::ptrdiff_t>(i);
        const double u = before.values[i];
        const double v = before.at(ii + neighbour);
        const double lo = std::min(u, v) - tol;
        const double hi = std::max(u, v) + tol;
        const double w = after.values[i];
        if (!(w >= lo && w <= hi)) bad.push_back(i);
    }
    return bad;
}

double AmplificationProfile::max_magnitude() const {
    double m = 0.0;
    for (double g : magnitudes) m = std::max(m, g);
    return m;
}

std::complex<double> amplification_factor(const SchemeSpec& spec, double xi) {
    require_linear(spec, "amplification factor");
    const FluxStencil st = flux_stencil(spec);
    const std::complex<double> iu(0.0, 1.0);
    const std::complex<double> face_diff = 1.0 - std::exp(-iu * xi);
    std::complex<double> flux_symbol = 0.0;
    for (std::size_t m = 0; m < st.offsets.size(); ++m)
        flux_symbol += st.weights[m] * std::exp(iu * (static_cast<double>(st.offsets[m]) * xi));
    return 1.0 - spec.lambda * flux_symbol * face_diff;
}

AmplificationProfile amplification(const SchemeSpec& spec, std::size_t n_samples) {
    require_linear(spec, "amplification profile");
    if (n_samples < 2) throw std::invalid_argument("need at least two phase samples");
    AmplificationProfile prof;
    prof.xi_samples.resize(n_samples);
    prof.magnitudes.resize(n_samples);
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double xi = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_samples - 1);
        prof.xi_samples[k] = xi;
        prof.magnitudes[k] = std::abs(amplification_factor(spec, xi));
    }
    return prof;
}

}  // namespace advect
