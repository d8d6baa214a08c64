#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fronts/cell_solver.hpp"
#include "fronts/errors.hpp"
#include "fronts/grid.hpp"
#include "fronts/model.hpp"
#include "fronts/tridiagonal.hpp"

namespace fronts {

/// LeVeque-Yee speed estimate: total mass change between two time levels
/// divided by the jump between the end states.
struct SpeedEstimate {
    double sigma_hat = 0.0;
    double numerator_mass_change = 0.0;  // sum_i (prev_i - curr_i)
    double denominator_jump = 0.0;       // curr_last - curr_first
};

/// The sum runs over every stored index in fixed left-to-right order, so
/// repeated evaluation on the same profiles is bit-identical.
inline SpeedEstimate leveque_yee(const Profile& prev, const Profile& curr, double dx,
                                 double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("leveque_yee requires dt > 0");
    if (prev.size() != curr.size())
        throw std::invalid_argument("leveque_yee requires profiles on the same grid");
    double num = 0.0;
    const auto& p = prev.values();
    const auto& c = curr.values();
    for (std::size_t i = 0; i < c.size(); ++i) num += p[i] - c[i];
    const double den = c.back() - c.front();
    if (den == 0.0) throw numerical_error("leveque_yee: vanishing end-state jump");
    return SpeedEstimate{(dx / dt) * num / den, num, den};
}

enum class Integrator { ImplicitWB, ExplicitWB };

/// Time-step selection policy. Both integrators respect the hyperbolic
/// condition |sigma_hat|*dt <= cfl_safety*dx; the explicit one adds the
/// parabolic bound dt <= dx^2/2.
struct StepConfig {
    Integrator integrator = Integrator::ImplicitWB;
    double dt_cap = 0.05;
    double cfl_safety = 1.0;
    double sigma_floor = 1e-6;
};

inline double select_timestep(double sigma_hat, double dx, const StepConfig& cfg) {
    if (!(dx > 0.0)) throw std::invalid_argument("select_timestep requires dx > 0");
    double dt = std::min(cfg.dt_cap,
                         cfg.cfl_safety * dx / std::max(std::abs(sigma_hat), cfg.sigma_floor));
    if (cfg.integrator == Integrator::ExplicitWB) dt = std::min(dt, 0.5 * dx * dx);
    return dt;
}

/// Frozen factors F(u) at the cell midpoints (u_i + u_{i+1})/2.
inline std::vector<double> frozen_factors(std::span<const double> values,
                                          const ReactionModel& model) {
    std::vector<double> f(values.size() - 1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        f[i] = growth_factor(model, 0.5 * (values[i] + values[i + 1]));
    return f;
}

namespace detail {

// Moving-frame update, factor-explicit form. One implicit step solves
//
//   u_i - (dt/dx) (L_{i+1/2} - R_{i-1/2}) = u^n_i
//
// at the interior nodes, with L/R the one-sided derivatives of the
// per-cell exact solutions; the C1 defect L - R vanishes exactly on a
// global solution, which is the well-balanced property. End rows pin the
// Dirichlet states.
inline TridiagonalSystem assemble_implicit_frozen(std::span<const double> values,
                                                  double sigma, double dt,
                                                  std::span<const double> factors, double dx,
                                                  double left_state, double right_state) {
    const std::size_t n = values.size();
    if (factors.size() + 1 != n)
        throw std::invalid_argument("assemble: need one frozen factor per cell");
    TridiagonalSystem sys;
    sys.lower.assign(n - 1, 0.0);
    sys.diagonal.assign(n, 1.0);
    sys.upper.assign(n - 1, 0.0);
    sys.rhs.assign(values.begin(), values.end());
    const double lam = dt / dx;
    CellOperator right_cell = flux_matrix(sigma, factors[0], dx);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const CellOperator left_cell = right_cell;
        right_cell = flux_matrix(sigma, factors[i], dx);
        sys.lower[i - 1] = lam * left_cell.s[1][0];
        sys.diagonal[i] = 1.0 - lam * (right_cell.s[0][0] - left_cell.s[1][1]);
        sys.upper[i] = -lam * right_cell.s[0][1];
    }
    sys.rhs[0] = left_state;
    sys.rhs[n - 1] = right_state;
    return sys;
}

inline std::vector<double> explicit_step_frozen(std::span<const double> values, double sigma,
                                                double dt, std::span<const double> factors,
                                                double dx, double left_state,
                                                double right_state) {
    const std::size_t n = values.size();
    if (factors.size() + 1 != n)
        throw std::invalid_argument("explicit step: need one frozen factor per cell");
    std::vector<double> out(values.begin(), values.end());
    const double lam = dt / dx;
    CellOperator right_cell = flux_matrix(sigma, factors[0], dx);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const CellOperator left_cell = right_cell;
        right_cell = flux_matrix(sigma, factors[i], dx);
        const double l = right_cell.s[0][0] * values[i] + right_cell.s[0][1] * values[i + 1];
        const double r = left_cell.s[1][0] * values[i - 1] + left_cell.s[1][1] * values[i];
        out[i] = values[i] + lam * (l - r);
    }
    out[0] = left_state;
    out[n - 1] = right_state;
    return out;
}

// Well-balanced shift from the moving frame back to the stationary grid.
// After a step the moving node z_i sits at stationary position
// z_i + sigma*dt, so the stationary value at x_i lives a distance
// sigma*dt upwind: inside the left cell for sigma > 0 (local offset
// dx - sigma*dt) and inside the right cell for sigma < 0.
inline std::vector<double> shift_back_frozen(std::span<const double> values, double sigma,
                                             double dt, std::span<const double> factors,
                                             double dx, double left_state,
                                             double right_state) {
    const std::size_t n = values.size();
    if (factors.size() + 1 != n)
        throw std::invalid_argument("shift: need one frozen factor per cell");
    const double delta = sigma * dt;
    if (std::abs(delta) > dx * (1.0 + 1e-12))
        throw numerical_error("shift: |sigma*dt| exceeds dx (CFL violated)");
    std::vector<double> out(values.begin(), values.end());
    if (delta == 0.0) return out;
    if (delta > 0.0) {
        const double local = std::max(dx - delta, 0.0);
        for (std::size_t i = 1; i < n; ++i) {
            const ShiftRow t = shift_row(sigma, factors[i - 1], dx, local);
            out[i] = t.t[0] * values[i - 1] + t.t[1] * values[i];
        }
    } else {
        const double local = std::min(-delta, dx);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const ShiftRow t = shift_row(sigma, factors[i], dx, local);
            out[i] = t.t[0] * values[i] + t.t[1] * values[i + 1];
        }
    }
    out[0] = left_state;
    out[n - 1] = right_state;
    return out;
}

}  // namespace detail

inline TridiagonalSystem assemble_implicit(const Profile& curr, double sigma_hat, double dt,
                                           const ReactionModel& model, const Grid& grid) {
    const auto factors = frozen_factors(curr.values(), model);
    return detail::assemble_implicit_frozen(curr.values(), sigma_hat, dt, factors, grid.dx,
                                            curr.left_state(), curr.right_state());
}

/// Explicit moving-frame step (fluxes evaluated on the time-n values).
inline Profile wb_step_explicit(const Profile& curr, double sigma_hat, double dt,
                                const ReactionModel& model, const Grid& grid) {
    const auto factors = frozen_factors(curr.values(), model);
    return curr.with_values(detail::explicit_step_frozen(curr.values(), sigma_hat, dt, factors,
                                                         grid.dx, curr.left_state(),
                                                         curr.right_state()));
}

/// Shift of the moving-frame solution back to the stationary grid; the
/// frozen factors are refreshed from the updated midpoint values.
inline Profile shift_back(const Profile& moving, double sigma_hat, double dt,
                          const ReactionModel& model, const Grid& grid) {
    const auto factors = frozen_factors(moving.values(), model);
    return moving.with_values(detail::shift_back_frozen(moving.values(), sigma_hat, dt,
                                                        factors, grid.dx, moving.left_state(),
                                                        moving.right_state()));
}

/// Previous time level together with the step size that produced the
/// current one (the LeVeque-Yee formula needs both).
struct PriorLevel {
    const Profile* profile = nullptr;
    double dt = 0.0;
};

/// External overrides used by the harness: pin the speed estimate
/// (0-wave runs, exactness tests) or impose a shared time step
/// (fair-comparison sweeps).
struct StepControls {
    std::optional<double> sigma_override;
    std::optional<double> dt_override;
};

struct AdvanceResult {
    Profile profile;
    SpeedEstimate speed;
    double dt = 0.0;
};

/// One full scheme step: speed estimate, time-step selection, implicit
/// or explicit moving-frame update, shift back to the stationary frame.
/// With no prior level the estimate bootstraps at sigma_hat = 0 (the
/// first step runs as the 0-wave scheme).
inline AdvanceResult advance(const Profile& curr, const PriorLevel& prior,
                             const StepConfig& cfg, const ReactionModel& model,
                             const Grid& grid, const StepControls& controls = {}) {
    SpeedEstimate speed;
    if (prior.profile != nullptr)
        speed = leveque_yee(*prior.profile, curr, grid.dx, prior.dt);
    else
        speed.denominator_jump = curr.right_state() - curr.left_state();
    if (controls.sigma_override) speed.sigma_hat = *controls.sigma_override;

    double dt = select_timestep(speed.sigma_hat, grid.dx, cfg);
    if (controls.dt_override) dt = *controls.dt_override;
    if (!(dt > 0.0)) throw std::invalid_argument("advance requires dt > 0");
    if (std::abs(speed.sigma_hat) * dt > grid.dx * (1.0 + 1e-12))
        throw numerical_error("advance: hyperbolic CFL violated by imposed time step");

    Profile moving = (cfg.integrator == Integrator::ImplicitWB)
                         ? curr.with_values(thomas_solve(
                               assemble_implicit(curr, speed.sigma_hat, dt, model, grid)))
                         : wb_step_explicit(curr, speed.sigma_hat, dt, model, grid);
    Profile next = (speed.sigma_hat == 0.0)
                       ? std::move(moving)
                       : shift_back(moving, speed.sigma_hat, dt, model, grid);
    return AdvanceResult{std::move(next), speed, dt};
}

}  // namespace fronts
