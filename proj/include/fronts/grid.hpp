#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fronts {

/// Uniform 1D mesh x_i = x_min + i*dx, i = 0..n_points-1. The moving
/// frame reuses the same spacing (dz = dx).
struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    double dx = 0.0;
    int n_points = 0;

    double x(int i) const { return x_min + i * dx; }
    int n_cells() const { return n_points - 1; }
};

/// Builds a grid covering [x_min, x_max]. The span must be an integer
/// multiple of dx (within 1e-9); anything else is rejected instead of
/// silently adjusting the spacing.
inline Grid make_grid(double x_min, double x_max, double dx) {
    if (!(dx > 0.0)) throw std::invalid_argument("grid spacing dx must be > 0");
    if (!(x_max > x_min)) throw std::invalid_argument("grid requires x_max > x_min");
    const double ratio = (x_max - x_min) / dx;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9)
        throw std::invalid_argument("domain length is not an integer multiple of dx");
    const int n = static_cast<int>(rounded) + 1;
    if (n < 3) throw std::invalid_argument("grid needs at least 3 points");
    return Grid{x_min, x_max, dx, n};
}

/// Solution values at one time level with pinned Dirichlet end states.
/// The two states must differ (they form the LeVeque-Yee denominator).
class Profile {
public:
    Profile(std::vector<double> values, double left_state, double right_state)
        : values_(std::move(values)), left_(left_state), right_(right_state) {
        if (values_.size() < 3) throw std::invalid_argument("profile needs at least 3 values");
        if (left_ == right_) throw std::invalid_argument("profile end states must differ");
        values_.front() = left_;
        values_.back() = right_;
    }

    const std::vector<double>& values() const { return values_; }
    double left_state() const { return left_; }
    double right_state() const { return right_; }
    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

    /// Same end states, new interior values.
    Profile with_values(std::vector<double> values) const {
        return Profile(std::move(values), left_, right_);
    }

private:
    std::vector<double> values_;
    double left_;
    double right_;
};

}  // namespace fronts
