#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "advect/grid.hpp"
#include "advect/schemes.hpp"
#include "advect/smoothness.hpp"

namespace advect {

/// D as an affine function of the constrained smoothness parameter:
///   D(theta) = c0 + c1 * theta        (upwind family)
///   D(theta) = c0 + c1 / theta        (centred family, after inversion)
/// where theta is theta^{direction} at (update index + offset).
struct CoefficientLaw {
    double c0 = 0.0;
    double c1 = 0.0;
    bool reciprocal = false;
    Direction direction = Direction::Plus;
    int offset = 0;

    double operator()(double theta) const;
};

CoefficientLaw coefficient_law(const SchemeSpec& spec);

/// Closed-form D(a lambda; theta) for a linear scheme.
double coefficient_at(const SchemeSpec& spec, double theta);

enum class IntervalShape { AllReals, Interval, ComplementOfOpenInterval, Empty };

/// Subset of the extended real line where 0 <= D(theta) <= 1.
///
/// Interval is [lo, hi]; ComplementOfOpenInterval is everything outside
/// (lo, hi), with lo = -inf or hi = +inf allowed so that the points at
/// infinity are represented exactly.
struct DdsInterval {
    IntervalShape shape = IntervalShape::AllReals;
    double lo = 0.0;
    double hi = 0.0;
    Direction theta_direction = Direction::Plus;
    int theta_offset = 0;

    bool contains(double theta) const;
    /// Indeterminate (0/0) counts as inside.
    bool contains(const ThetaValue& theta) const;
    /// Finite endpoints, in increasing order.
    std::vector<double> finite_endpoints() const;
    /// e.g. "theta+_{i-1} in [-1, 3]".
    std::string describe() const;
};

std::string to_string(IntervalShape shape);

DdsInterval dds_interval(const SchemeSpec& spec);

/// Linear schemes: the DDS region is all of R. ENO2: |a|lambda in (0, 1/2].
bool is_uno(const SchemeSpec& spec);

enum class Membership { InDds, Violation, Degenerate };

std::string to_string(Membership m);

struct PointClass {
    std::size_t index = 0;
    ThetaValue theta;
    Membership membership = Membership::InDds;
    double d_value = 0.0;
};

struct DdsReport {
    std::vector<PointClass> points;
    std::size_t in_dds = 0;
    std::size_t violations = 0;
    std::size_t degenerate = 0;
};

/// Per-point DDS membership of the theta each update depends on. ENO2 points
/// are classified directly by whether their D lies in [0, 1].
DdsReport classify_state(const SchemeSpec& spec, const State& state);

/// Indices where the update leaves the bracket of its two upwind-stencil
/// values: min(u_{i-1}, u_i) <= u_i^{n+1} <= max(u_{i-1}, u_i) for a > 0,
/// with u_{i+1} in place of u_{i-1} for a < 0.
std::vector<std::size_t> local_max_principle_check(FlowSign sign, const State& before, const State& after,
                                                   double rel_tol = 1e-12);

struct AmplificationProfile {
    std::vector<double> xi_samples;
    std::vector<double> magnitudes;

    double max_magnitude() const;
};

/// g(xi) from substituting u_j = g^n e^{i j xi} into the flux-form update.
std::complex<double> amplification_factor(const SchemeSpec& spec, double xi);

/// |g| on n_samples equispaced phases covering [0, pi]; linear families only.
AmplificationProfile amplification(const SchemeSpec& spec, std::size_t n_samples);

}  // namespace advect
