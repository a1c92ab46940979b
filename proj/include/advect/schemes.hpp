#pragma once

#include <array>
#include <string>
#include <vector>

#include "advect/grid.hpp"
#include "advect/smoothness.hpp"

namespace advect {

enum class Family { UpwindFlux, CentredFlux, HybridENO2 };

std::string to_string(Family family);

/// Admissible range of |a|*lambda.
struct CflRange {
    double lo = 0.0;
    double hi = 1.0;
    bool lo_closed = false;
    bool hi_closed = true;

    bool contains(double cfl) const;
    std::string describe() const;
};

/// A three-point scheme for u_t + a u_x = 0 at a fixed CFL.
///
/// Flux conventions at face i+1/2:
///   upwind,  a > 0:  F = alpha u_i     - beta u_{i-1}   (consistency alpha - beta = a)
///   upwind,  a < 0:  F = alpha u_{i+1} - beta u_{i+2}
///   centred:         F = alpha u_{i+1} + beta u_i       (consistency alpha + beta = a)
/// The hybrid ENO2 scheme selects its stencil per face; its alpha/beta are
/// nominal (a, 0) and unused by the stepping code.
struct SchemeSpec {
    std::string name;
    Family family = Family::UpwindFlux;
    double a = 1.0;
    double lambda = 1.0;
    double alpha = 1.0;
    double beta = 0.0;
    CflRange cfl_range;

    double cfl() const;
    FlowSign sign() const { return flow_sign(a); }
    bool cfl_admissible() const { return cfl_range.contains(cfl()); }
    /// Signed deviation from the family's consistency relation F(u,u) = a u.
    double consistency_residual() const;

    /// User-supplied coefficients; throws if the pair is inconsistent.
    static SchemeSpec custom(std::string name, Family family, double a, double lambda, double alpha, double beta);
};

/// Names accepted by catalog().
const std::vector<std::string>& catalog_names();

/// Coefficients of the named scheme at speed a and ratio lambda.
/// Throws std::invalid_argument for an unknown name or a == 0. A CFL outside
/// the scheme's range is allowed; check cfl_admissible().
SchemeSpec catalog(const std::string& name, double a, double lambda);

/// Face-i+1/2 flux weights for the linear families: F = sum w_m u_{i+offset_m}.
struct FluxStencil {
    std::array<int, 2> offsets{};
    std::array<double, 2> weights{};
};

FluxStencil flux_stencil(const SchemeSpec& spec);

/// F_{i+1/2}; dispatches on the family (ENO2 included).
double numerical_flux(const SchemeSpec& spec, const State& state, std::ptrdiff_t i);

/// ENO2 face flux: picks the upwind-biased stencil when its outer difference
/// is no larger than the central one, the centred stencil otherwise.
double eno2_flux(const State& state, std::ptrdiff_t i, double a);

enum class DBranch {
    UpwindPositive,
    UpwindNegative,
    CentredPositive,
    CentredNegative,
    Eno2Case1,
    Eno2Case2,
    Eno2Case3,
    Eno2Case4,
    Degenerate,
};

std::string to_string(DBranch branch);

/// Incremental-form coefficient: u_i^{n+1} = u_i - D D-u_i (a > 0) or u_i + D D+u_i (a < 0).
struct DCoefficient {
    double value = 0.0;
    ThetaValue theta_used;
    DBranch branch = DBranch::Degenerate;

    bool degenerate() const { return branch == DBranch::Degenerate; }
};

/// D at point i. When the dividing difference vanishes the branch is
/// Degenerate and value is |a|*lambda; the stepping code then falls back to
/// the flux form at that point.
DCoefficient incremental_coefficient(const SchemeSpec& spec, const State& state, std::ptrdiff_t i);

/// Four-case ENO2 coefficient. a < 0 is handled by reflection.
DCoefficient eno2_coefficient(const State& state, std::ptrdiff_t i, double a, double lambda);

/// ENO2 case table on raw differences: d0 is the upstream difference, d1 the
/// dividing one, d2 the downstream one (for a > 0: D-u_{i-1}, D-u_i, D+u_i).
DCoefficient eno2_case_table(double d0, double d1, double d2, double cfl);

/// Conservative update u_i - lambda (F_{i+1/2} - F_{i-1/2}); time advances by lambda*h.
State step_flux_form(const Grid1D& grid, const SchemeSpec& spec, const State& state);

/// Same update written as u_i -/+ D * difference.
State step_incremental(const Grid1D& grid, const SchemeSpec& spec, const State& state);

/// ENO2 step at the given a and lambda.
State step_eno2(const Grid1D& grid, const State& state, double a, double lambda);

}  // namespace advect
