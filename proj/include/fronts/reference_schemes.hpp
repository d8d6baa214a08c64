#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "fronts/errors.hpp"
#include "fronts/grid.hpp"
#include "fronts/model.hpp"
#include "fronts/tridiagonal.hpp"
#include "fronts/wb_scheme.hpp"

namespace fronts {

enum class ReactionMode { ExactLogistic, ImplicitEuler };

/// Strang splitting configuration. The exact logistic half-step applies
/// only to the FKPP nonlinearity; other models integrate the reaction
/// with one backward-Euler step solved by Newton per point.
struct OSConfig {
    double dt = 0.05;
    ReactionMode reaction_mode = ReactionMode::ExactLogistic;
};

namespace detail {

inline double exact_logistic_map(double v, double tau) {
    // e^tau / (e^tau - 1 + 1/v), rearranged so v = 0 needs no division
    const double g = std::expm1(tau);
    if (v * g <= -0.5)
        throw numerical_error("exact logistic map: value too far below 0");
    return v * (g + 1.0) / (1.0 + v * g);
}

inline double reaction_derivative(const ReactionModel& model, double u) {
    if (model.kind == ReactionKind::FKPP) return 1.0 - 2.0 * u;
    const double a = model.a;
    return 1.0 + 2.0 * (a - 1.0) * u - 3.0 * a * u * u;
}

inline double implicit_euler_reaction(double v, double tau, const ReactionModel& model) {
    // solve x - tau f(x) = v, Newton from x = v
    double x = v;
    for (int it = 0; it < 50; ++it) {
        const double g = x - tau * reaction_rate(model, x) - v;
        const double gp = 1.0 - tau * reaction_derivative(model, x);
        if (gp == 0.0) break;
        const double step = g / gp;
        x -= step;
        if (std::abs(step) <= 1e-13 * std::max(1.0, std::abs(x))) return x;
    }
    throw numerical_error("implicit Euler reaction: Newton did not converge");
}

}  // namespace detail

inline std::vector<double> reaction_half_step(std::span<const double> u, double tau,
                                              const ReactionModel& model, ReactionMode mode) {
    if (!(tau > 0.0)) throw std::invalid_argument("reaction step requires tau > 0");
    if (mode == ReactionMode::ExactLogistic && model.kind != ReactionKind::FKPP)
        throw std::invalid_argument("exact logistic reaction step is FKPP-only");
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = (mode == ReactionMode::ExactLogistic)
                     ? detail::exact_logistic_map(u[i], tau)
                     : detail::implicit_euler_reaction(u[i], tau, model);
    return out;
}

/// Crank-Nicolson heat step (I - lam/2 d2) v^{n+1} = (I + lam/2 d2) v^n
/// with Dirichlet ends.
inline std::vector<double> crank_nicolson_diffusion(std::span<const double> u, double dt,
                                                    double dx, double left_state,
                                                    double right_state) {
    if (!(dt > 0.0) || !(dx > 0.0))
        throw std::invalid_argument("crank_nicolson_diffusion requires dt, dx > 0");
    const std::size_t n = u.size();
    if (n < 3) throw std::invalid_argument("crank_nicolson_diffusion needs >= 3 points");
    const double lam = dt / (dx * dx);
    TridiagonalSystem sys;
    sys.lower.assign(n - 1, 0.0);
    sys.diagonal.assign(n, 1.0);
    sys.upper.assign(n - 1, 0.0);
    sys.rhs.assign(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        sys.lower[i - 1] = -0.5 * lam;
        sys.diagonal[i] = 1.0 + lam;
        sys.upper[i] = -0.5 * lam;
        sys.rhs[i] = 0.5 * lam * u[i - 1] + (1.0 - lam) * u[i] + 0.5 * lam * u[i + 1];
    }
    sys.rhs[0] = left_state;
    sys.rhs[n - 1] = right_state;
    return thomas_solve(sys);
}

/// One Strang step: reaction half, full diffusion, reaction half.
inline Profile strang_step(const Profile& u, const OSConfig& cfg, const ReactionModel& model,
                           const Grid& grid) {
    auto v = reaction_half_step(u.values(), 0.5 * cfg.dt, model, cfg.reaction_mode);
    v = crank_nicolson_diffusion(v, cfg.dt, grid.dx, u.left_state(), u.right_state());
    v = reaction_half_step(v, 0.5 * cfg.dt, model, cfg.reaction_mode);
    return u.with_values(std::move(v));
}

/// WB scheme with the speed estimate pinned to zero: no shift, frames
/// coincide. Well-balanced only for stationary states.
inline Profile zero_wave_step(const Profile& curr, double dt, const ReactionModel& model,
                              const Grid& grid, Integrator integrator) {
    if (integrator == Integrator::ExplicitWB && dt > 0.5 * grid.dx * grid.dx * (1.0 + 1e-12))
        throw std::invalid_argument("zero_wave_step: explicit parabolic CFL violated");
    if (integrator == Integrator::ImplicitWB)
        return curr.with_values(thomas_solve(assemble_implicit(curr, 0.0, dt, model, grid)));
    return wb_step_explicit(curr, 0.0, dt, model, grid);
}

}  // namespace fronts
