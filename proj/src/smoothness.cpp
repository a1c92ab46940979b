#include "advect/smoothness.hpp"

#include <cmath>
#include <limits>

namespace advect {

ThetaValue ThetaValue::ratio(double numerator, double denominator, Direction dir, double flat_eps) {
    ThetaValue t;
    t.direction = dir;
    t.numerator = numerator;
    t.denominator = denominator;
    const bool num_zero = std::abs(numerator) <= flat_eps;
    const bool den_zero = std::abs(denominator) <= flat_eps;
    if (!den_zero) {
        t.kind = Kind::Finite;
        t.value = numerator / denominator;
    } else if (!num_zero) {
        const bool positive = numerator > 0.0;
        t.kind = positive ? Kind::PosInfinity : Kind::NegInfinity;
        t.value = positive ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    } else {
        t.kind = Kind::Indeterminate;
        t.value = std::numeric_limits<double>::quiet_NaN();
    }
    return t;
}

double forward_diff(const State& state, std::ptrdiff_t i) { return state.at(i + 1) - state.at(i); }

double backward_diff(const State& state, std::ptrdiff_t i) { return state.at(i) - state.at(i - 1); }

ThetaValue theta_directed(const State& state, std::ptrdiff_t i, Direction dir, double flat_eps) {
    const double fwd = forward_diff(state, i);
    const double bwd = backward_diff(state, i);
    if (dir == Direction::Plus) return ThetaValue::ratio(bwd, fwd, dir, flat_eps);
    return ThetaValue::ratio(fwd, bwd, dir, flat_eps);
}

ThetaValue theta(const State& state, std::ptrdiff_t i, FlowSign sign, double flat_eps) {
    return theta_directed(state, i, sign == FlowSign::Positive ? Direction::Plus : Direction::Minus, flat_eps);
}

ThetaField theta_field(const State& state, FlowSign sign, double flat_eps) {
    ThetaField field;
    field.direction = sign == FlowSign::Positive ? Direction::Plus : Direction::Minus;
    field.entries.reserve(state.size());
    for (std::size_t i = 0; i < state.size(); ++i)
        field.entries.push_back(theta(state, static_cast<std::ptrdiff_t>(i), sign, flat_eps));
    return field;
}

}  // namespace advect
