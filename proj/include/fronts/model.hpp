#pragma once

#include <cmath>
#include <stdexcept>

namespace fronts {

enum class ReactionKind { FKPP, Cubic };

/// Reaction nonlinearity f(u) of the equation u_t - u_xx = f(u).
///
/// FKPP:  f(u) = u(1-u)
/// Cubic: f(u) = u(1-u)(1+au),  a >= 0
struct ReactionModel {
    ReactionKind kind = ReactionKind::FKPP;
    double a = 0.0;  // cubic coefficient, ignored for FKPP

    static ReactionModel fkpp() { return {ReactionKind::FKPP, 0.0}; }
    static ReactionModel cubic(double a) {
        if (a < 0.0) throw std::invalid_argument("cubic coefficient a must be >= 0");
        return {ReactionKind::Cubic, a};
    }
};

inline double reaction_rate(const ReactionModel& model, double u) {
    const double base = u * (1.0 - u);
    if (model.kind == ReactionKind::FKPP) return base;
    return base * (1.0 + model.a * u);
}

/// Growth factor F(u) with f(u) = u*F(u), evaluated by its polynomial
/// form so that it stays finite at u = 0 (the leading edge).
inline double growth_factor(const ReactionModel& model, double u) {
    if (model.kind == ReactionKind::FKPP) return 1.0 - u;
    return (1.0 - u) * (1.0 + model.a * u);
}

/// Minimal traveling-wave speed. 2 in the pulled regime; the explicit
/// pushed value sqrt(a/2) + sqrt(2/a) for the cubic model with a > 2.
inline double minimal_wave_speed(const ReactionModel& model) {
    if (model.kind == ReactionKind::FKPP || model.a <= 2.0) return 2.0;
    return std::sqrt(model.a / 2.0) + std::sqrt(2.0 / model.a);
}

/// Exact pushed-front profile u(xi) = 1/(1 + e^{k xi}), k = sqrt(a/2),
/// normalized so that u(0) = 1/2. Valid for a > 2 only; it solves
/// u'' + sigma* u' + u(1-u)(1+au) = 0 with sigma* = k + 1/k.
inline double exact_pushed_front(double a, double xi) {
    if (!(a > 2.0)) throw std::invalid_argument("exact pushed front requires a > 2");
    const double t = std::sqrt(a / 2.0) * xi;
    if (t > 0.0) {
        const double e = std::exp(-std::min(t, 745.0));
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(std::max(t, -745.0)));
}

/// Sigmoid initial datum u0(x) = 1 - 1/(1 + e^{-3(x-40)}), evaluated in
/// the branch that keeps the exponent nonpositive (no overflow).
inline double sigmoid_initial(double x) {
    const double t = 3.0 * (x - 40.0);
    if (t > 0.0) {
        const double e = std::exp(-std::min(t, 745.0));
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(std::max(t, -745.0)));
}

}  // namespace fronts
