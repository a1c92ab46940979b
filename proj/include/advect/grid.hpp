#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace advect {

/// Uniform periodic mesh for u_t + a u_x = 0.
///
/// Points sit at x_i = x_lo + i*h for i = 0..n_cells-1; x_hi is identified
/// with x_lo. The time step k is stored and lambda = k/h is derived from it.
struct Grid1D {
    double x_lo = -1.0;
    double x_hi = 1.0;
    std::size_t n_cells = 0;
    double h = 0.0;
    double k = 0.0;
    double lambda = 0.0;
    double a = 1.0;

    double length() const { return x_hi - x_lo; }
    double x(std::size_t i) const { return x_lo + static_cast<double>(i) * h; }
    double cfl() const;

    /// Maps an arbitrary (possibly negative) index onto 0..n_cells-1.
    std::size_t wrap(std::ptrdiff_t i) const;

    /// Maps a coordinate onto [x_lo, x_hi).
    double wrap_position(double x) const;

    /// Same mesh with a different time step (used for the shortened final step).
    Grid1D with_time_step(double k_new) const;
};

Grid1D make_grid(double x_lo, double x_hi, std::size_t n_cells, double cfl, double a);

/// Periodic index helper shared by the stencil code.
inline std::size_t periodic_index(std::ptrdiff_t i, std::size_t n) {
    const auto m = static_cast<std::ptrdiff_t>(n);
    auto r = i % m;
    if (r < 0) r += m;
    return static_cast<std::size_t>(r);
}

/// Discrete solution u_i^n.
struct State {
    std::vector<double> values;
    double time = 0.0;
    std::size_t step_index = 0;
    bool diverged = false;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    /// Periodic access.
    double at(std::ptrdiff_t i) const { return values[periodic_index(i, values.size())]; }
    bool all_finite() const;
};

enum class InitialKind { SinePi, CompactBump, Step, Constant, Linear, Table };

/// Catalog of initial profiles u0(x).
class InitialData {
public:
    static InitialData sine_pi();
    static InitialData compact_bump();
    /// left for x < x_jump, right otherwise (before periodic wrap).
    static InitialData step(double x_jump = 0.0, double left = 1.0, double right = 0.0);
    static InitialData constant(double c);
    static InitialData linear(double slope, double intercept = 0.0);
    /// Grid values; evaluated off-grid by periodic linear interpolation.
    static InitialData table(std::vector<double> values);

    /// Parses the CLI/config names: sine, bump, step, constant, linear.
    static InitialData from_name(const std::string& name);

    InitialKind kind() const { return kind_; }
    std::string name() const;
    const std::vector<double>& table_values() const { return table_; }

    /// u0 at a position already wrapped into the grid's domain.
    double evaluate(double x, const Grid1D& grid) const;

private:
    InitialKind kind_ = InitialKind::Constant;
    double p0_ = 0.0;
    double p1_ = 0.0;
    double p2_ = 0.0;
    std::vector<double> table_;
};

State sample_initial(const Grid1D& grid, const InitialData& data);

/// u(x_i, t) = u0(x_i - a t), wrapped periodically.
State exact_solution(const Grid1D& grid, const InitialData& data, double t);

}  // namespace advect
