#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "fronts/errors.hpp"

namespace fronts {

// Closed-form solution of the frozen-coefficient two-point problem
//
//     -sigma w' - w'' = F w   on a cell (0, h),
//
// written as w(z) = e^{mz} (a*phi_c(z) + b*phi_s(z)) with m = -sigma/2 and
// kernel parameter D = sigma^2/4 - F (a quarter of the discriminant).
// phi_c/phi_s are cosh/sinh-like for D > 0, polynomial for D = 0 and
// cos/sin-like for D < 0; both are entire in D, so evaluating them
// through a short series near D = 0 removes the case boundary entirely.

enum class RootCase { TwoReal, Double, ComplexPair };

/// Roots of mu^2 + sigma*mu + F = 0 classified by the discriminant
/// Delta = sigma^2 - 4F. The Double branch is taken inside a relative
/// degeneracy band around Delta = 0.
struct RootSet {
    double discriminant = 0.0;
    RootCase kind = RootCase::Double;
    double mu_minus = 0.0;   // TwoReal
    double mu_plus = 0.0;    // TwoReal
    double mu = 0.0;         // Double
    double real_part = 0.0;  // ComplexPair
    double frequency = 0.0;  // ComplexPair, sqrt(-Delta)/2
};

inline RootSet characteristic_roots(double sigma, double F) {
    RootSet r;
    const double delta = sigma * sigma - 4.0 * F;
    r.discriminant = delta;
    const double band = std::max(1e-12, 1e-10 * sigma * sigma);
    if (std::abs(delta) <= band) {
        r.kind = RootCase::Double;
        r.mu = -0.5 * sigma;
        return r;
    }
    if (delta > 0.0) {
        r.kind = RootCase::TwoReal;
        const double s = std::sqrt(delta);
        if (sigma == 0.0) {
            r.mu_minus = -0.5 * s;
            r.mu_plus = 0.5 * s;
        } else {
            // q-form keeps the small root accurate when F ~ 0
            const double q = -0.5 * (sigma + std::copysign(s, sigma));
            const double other = F / q;
            r.mu_minus = std::min(q, other);
            r.mu_plus = std::max(q, other);
        }
        return r;
    }
    r.kind = RootCase::ComplexPair;
    r.real_part = -0.5 * sigma;
    r.frequency = 0.5 * std::sqrt(-delta);
    return r;
}

namespace detail {

struct PhiPair {
    double c;  // phi_c(len)
    double s;  // phi_s(len)
};

/// phi_c(len) = cosh(sqrt(D) len) continued through D <= 0,
/// phi_s(len) = sinh(sqrt(D) len)/sqrt(D) likewise; phi_c' = D*phi_s,
/// phi_s' = phi_c and phi_c^2 - D*phi_s^2 = 1.
inline PhiPair phi_kernels(double D, double len) {
    const double t = D * len * len;
    if (std::abs(t) <= 1e-8) {
        // |sqrt(|D|)*len| <= 1e-4: series, exact to well below 1 ulp
        const double c = 1.0 + t * (0.5 + t * (1.0 / 24.0 + t / 720.0));
        const double s = len * (1.0 + t * (1.0 / 6.0 + t * (1.0 / 120.0 + t / 5040.0)));
        return {c, s};
    }
    if (D > 0.0) {
        const double rq = std::sqrt(D);
        const double x = rq * len;
        return {std::cosh(x), std::sinh(x) / rq};
    }
    const double rq = std::sqrt(-D);
    const double x = rq * len;
    return {std::cos(x), std::sin(x) / rq};
}

constexpr double kPi = 3.14159265358979323846;

/// The two-point problem is singular when the oscillation frequency
/// sqrt(-Delta)/2 fits a half-integer number of periods in the cell.
inline void check_resonance(double D, double h) {
    if (D >= 0.0) return;
    const double x = std::sqrt(-D) * h;  // frequency * h
    const double k = std::round(x / kPi);
    if (k >= 1.0 && std::abs(x - k * kPi) <= 1e-9)
        throw numerical_error("resonant cell problem: frequency*h at a multiple of pi");
}

}  // namespace detail

/// Flux matrix S of one cell: given boundary values (u_left, u_right),
/// S*(u_left, u_right)^T = (w'(0+), w'(h-)) for the exact cell solution.
struct CellOperator {
    std::array<std::array<double, 2>, 2> s{};  // rows: left flux, right flux
    double sigma = 0.0;
    double growth = 0.0;  // frozen factor F
    double h = 0.0;
};

inline CellOperator flux_matrix(double sigma, double F, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("flux_matrix requires h > 0");
    const double m = -0.5 * sigma;
    const double D = 0.25 * sigma * sigma - F;
    detail::check_resonance(D, h);
    const auto [c, sh] = detail::phi_kernels(D, h);
    if (sh == 0.0) throw numerical_error("resonant cell problem: singular kernel");
    const double e = std::exp(m * h);
    CellOperator op;
    op.s[0][0] = m - c / sh;
    op.s[0][1] = (1.0 / e) / sh;
    op.s[1][0] = -e / sh;
    op.s[1][1] = m + c / sh;
    op.sigma = sigma;
    op.growth = F;
    op.h = h;
    return op;
}

/// Interior evaluation row T: T*(u_left, u_right)^T = w(delta) for the
/// exact cell solution, delta measured from the left cell edge.
struct ShiftRow {
    std::array<double, 2> t{};
    double delta = 0.0;
};

inline ShiftRow shift_row(double sigma, double F, double h, double delta) {
    if (!(h > 0.0)) throw std::invalid_argument("shift_row requires h > 0");
    if (delta < -1e-9 * h || delta > h * (1.0 + 1e-9))
        throw std::invalid_argument("shift_row requires delta in [0, h]");
    delta = std::min(std::max(delta, 0.0), h);
    const double m = -0.5 * sigma;
    const double D = 0.25 * sigma * sigma - F;
    detail::check_resonance(D, h);
    const auto [c, sh] = detail::phi_kernels(D, h);
    if (sh == 0.0) throw numerical_error("resonant cell problem: singular kernel");
    const double s_left = detail::phi_kernels(D, h - delta).s;
    const double s_right = detail::phi_kernels(D, delta).s;
    ShiftRow row;
    row.t[0] = std::exp(m * delta) * s_left / sh;
    row.t[1] = std::exp(m * (delta - h)) * s_right / sh;
    row.delta = delta;
    return row;
}

inline double cell_eval(double sigma, double F, double h, double u_left, double u_right,
                        double z) {
    const ShiftRow row = shift_row(sigma, F, h, z);
    return row.t[0] * u_left + row.t[1] * u_right;
}

}  // namespace fronts
