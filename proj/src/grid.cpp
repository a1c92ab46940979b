#include "advect/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace advect {

double Grid1D::cfl() const { return std::abs(a) * lambda; }

std::size_t Grid1D::wrap(std::ptrdiff_t i) const { return periodic_index(i, n_cells); }

double Grid1D::wrap_position(double x) const {
    const double len = length();
    double r = std::fmod(x - x_lo, len);
    if (r < 0.0) r += len;
    // fmod of a tiny negative number can round up to exactly len
    if (r >= len) r -= len;
    return x_lo + r;
}

Grid1D Grid1D::with_time_step(double k_new) const {
    if (!(k_new > 0.0)) throw std::invalid_argument("time step must be positive");
    Grid1D g = *this;
    g.k = k_new;
    g.lambda = k_new / h;
    return g;
}

Grid1D make_grid(double x_lo, double x_hi, std::size_t n_cells, double cfl, double a) {
    if (!(x_hi > x_lo)) throw std::invalid_argument("grid requires x_hi > x_lo");
    if (n_cells < 3) throw std::invalid_argument("grid requires at least 3 cells for a three-point stencil");
    if (a == 0.0 || !std::isfinite(a)) throw std::invalid_argument("advection speed must be finite and nonzero");
    if (!(cfl > 0.0) || !std::isfinite(cfl)) throw std::invalid_argument("CFL number must be positive");

    Grid1D g;
    g.x_lo = x_lo;
    g.x_hi = x_hi;
    g.n_cells = n_cells;
    g.a = a;
    g.h = (x_hi - x_lo) / static_cast<double>(n_cells);
    g.k = cfl * g.h / std::abs(a);
    g.lambda = g.k / g.h;
    return g;
}

bool State::all_finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

InitialData InitialData::sine_pi() {
    InitialData d;
    d.kind_ = InitialKind::SinePi;
    return d;
}

InitialData InitialData::compact_bump() {
    InitialData d;
    d.kind_ = InitialKind::CompactBump;
    return d;
}

InitialData InitialData::step(double x_jump, double left, double right) {
    InitialData d;
    d.kind_ = InitialKind::Step;
    d.p0_ = x_jump;
    d.p1_ = left;
    d.p2_ = right;
    return d;
}

InitialData InitialData::constant(double c) {
    InitialData d;
    d.kind_ = InitialKind::Constant;
    d.p0_ = c;
    return d;
}

InitialData InitialData::linear(double slope, double intercept) {
    InitialData d;
    d.kind_ = InitialKind::Linear;
    d.p0_ = slope;
    d.p1_ = intercept;
    return d;
}

InitialData InitialData::table(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("initial-data table is empty");
    InitialData d;
    d.kind_ = InitialKind::Table;
    d.table_ = std::move(values);
    return d;
}

InitialData InitialData::from_name(const std::string& name) {
    if (name == "sine" || name == "sinepi") return sine_pi();
    if (name == "bump") return compact_bump();
    if (name == "step") return step();
    if (name == "constant") return constant(1.0);
    if (name == "linear") return linear(1.0);
    throw std::invalid_argument("unknown initial data '" + name + "'");
}

std::string InitialData::name() const {
    switch (kind_) {
        case InitialKind::SinePi: return "sine";
        case InitialKind::CompactBump: return "bump";
        case InitialKind::Step: return "step";
        case InitialKind::Constant: return "constant";
        case InitialKind::Linear: return "linear";
        case InitialKind::Table: return "table";
    }
    return "unknown";
}

double InitialData::evaluate(double x, const Grid1D& grid) const {
    switch (kind_) {
        case InitialKind::SinePi:
            return std::sin(std::numbers::pi * x);
        case InitialKind::CompactBump: {
            if (std::abs(x) >= 1.0) return 0.0;
            return std::exp(-1.0 / (1.0 - x * x));
        }
        case InitialKind::Step:
            return x < p0_ ? p1_ : p2_;
        case InitialKind::Constant:
            return p0_;
        case InitialKind::Linear:
            return p0_ * x + p1_;
        case InitialKind::Table: {
            const std::size_t n = table_.size();
            double s = (x - grid.x_lo) / grid.h;
            const double nearest = std::round(s);
            if (std::abs(s - nearest) < 1e-9) s = nearest;
            const double base = std::floor(s);
            const double frac = s - base;
            const auto i0 = periodic_index(static_cast<std::ptrdiff_t>(base), n);
            const auto i1 = periodic_index(static_cast<std::ptrdiff_t>(base) + 1, n);
            return frac == 0.0 ? table_[i0] : (1.0 - frac) * table_[i0] + frac * table_[i1];
        }
    }
    return 0.0;
}

State sample_initial(const Grid1D& grid, const InitialData& data) {
    if (data.kind() == InitialKind::Table && data.table_values().size() != grid.n_cells)
        throw std::invalid_argument("initial-data table length does not match the grid");
    State s;
    s.values.resize(grid.n_cells);
    for (std::size_t i = 0; i < grid.n_cells; ++i) s.values[i] = data.evaluate(grid.x(i), grid);
    return s;
}

State exact_solution(const Grid1D& grid, const InitialData& data, double t) {
    if (t < 0.0) throw std::invalid_argument("exact solution requires t >= 0");
    State s = sample_initial(grid, data);
    s.time = t;
    if (t == 0.0) return s;
    for (std::size_t i = 0; i < grid.n_cells; ++i)
        s.values[i] = data.evaluate(grid.wrap_position(grid.x(i) - grid.a * t), grid);
    return s;
}

}  // namespace advect
