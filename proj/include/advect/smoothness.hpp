#pragma once

#include <cstddef>
#include <vector>

#include "advect/grid.hpp"

namespace advect {

enum class Direction { Plus, Minus };
enum class FlowSign { Positive, Negative };

inline FlowSign flow_sign(double a) { return a > 0.0 ? FlowSign::Positive : FlowSign::Negative; }

/// Ratio of consecutive differences with its degeneracy made explicit.
///
/// A zero denominator never produces NaN: a nonzero numerator gives a signed
/// infinity and 0/0 is Indeterminate (locally flat data).
struct ThetaValue {
    enum class Kind { Finite, PosInfinity, NegInfinity, Indeterminate };

    Kind kind = Kind::Indeterminate;
    double value = 0.0;  // +-inf for the infinite kinds, NaN when indeterminate
    Direction direction = Direction::Plus;
    double numerator = 0.0;
    double denominator = 0.0;

    bool finite() const { return kind == Kind::Finite; }
    bool infinite() const { return kind == Kind::PosInfinity || kind == Kind::NegInfinity; }
    bool indeterminate() const { return kind == Kind::Indeterminate; }

    /// Differences with |d| <= flat_eps are treated as exact zeros.
    static ThetaValue ratio(double numerator, double denominator, Direction dir, double flat_eps = 0.0);
};

struct ThetaField {
    std::vector<ThetaValue> entries;
    Direction direction = Direction::Plus;

    std::size_t size() const { return entries.size(); }
    const ThetaValue& operator[](std::size_t i) const { return entries[i]; }
};

/// u_{i+1} - u_i, periodic.
double forward_diff(const State& state, std::ptrdiff_t i);
/// u_i - u_{i-1}, periodic.
double backward_diff(const State& state, std::ptrdiff_t i);

/// theta+ = D-u_i / D+u_i for a > 0, theta- = D+u_i / D-u_i for a < 0.
ThetaValue theta(const State& state, std::ptrdiff_t i, FlowSign sign, double flat_eps = 0.0);

/// theta in an explicit direction, regardless of the flow sign.
ThetaValue theta_directed(const State& state, std::ptrdiff_t i, Direction dir, double flat_eps = 0.0);

ThetaField theta_field(const State& state, FlowSign sign, double flat_eps = 0.0);

}  // namespace advect
