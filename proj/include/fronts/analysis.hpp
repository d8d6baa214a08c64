#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fronts/errors.hpp"
#include "fronts/grid.hpp"

namespace fronts {

/// Time series recorded during a run, sampled at the output cadence.
/// All arrays are aligned; times are strictly increasing.
struct RunRecord {
    std::vector<double> times;
    std::vector<double> dts;
    std::vector<double> ly_speeds;
    std::vector<double> level_positions;
    double level_c = 0.5;
    Grid grid;  // mesh the run used; locates snapshot values
    std::vector<std::pair<double, Profile>> snapshots;

    void append(double t, double dt, double sigma, double x_c) {
        if (!times.empty() && !(t > times.back()))
            throw std::invalid_argument("run record times must be strictly increasing");
        times.push_back(t);
        dts.push_back(dt);
        ly_speeds.push_back(sigma);
        level_positions.push_back(x_c);
    }

    std::size_t size() const { return times.size(); }
};

/// Rightmost crossing of level c, linearly interpolated inside the
/// crossing cell: x_c = sup{ x : u(x) = c } on the discrete profile.
inline double level_set_position(const Profile& profile, const Grid& grid, double c) {
    if (!(c > 0.0) || !(c < 1.0))
        throw std::invalid_argument("level value c must lie in (0, 1)");
    const auto& u = profile.values();
    for (int i = profile.size() - 2; i >= 0; --i) {
        const std::size_t k = static_cast<std::size_t>(i);
        if (u[k] >= c && c > u[k + 1]) {
            return grid.x(i) + grid.dx * (u[k] - c) / (u[k] - u[k + 1]);
        }
    }
    throw numerical_error("level set " + std::to_string(c) +
                          " not found: front left the domain");
}

/// Least-squares fit of m(t) = alpha*log(t) + beta + gamma/sqrt(t) to
/// the delay y(t) = x_c(t) - reference_speed*t over the fit window.
struct FitResult {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double residual_rms = 0.0;
    std::pair<double, double> window{0.0, 0.0};
};

namespace detail {

inline std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> a,
                                    std::array<double, 3> b) {
    // Gaussian elimination with partial pivoting
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        if (std::abs(a[col][col]) < 1e-300)
            throw numerical_error("delay fit: rank-deficient basis");
        for (int r = col + 1; r < 3; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::array<double, 3> x{};
    for (int r = 2; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < 3; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return x;
}

}  // namespace detail

/// Fits the delay model over the last half of the record. The log-t and
/// constant basis elements are nearly collinear over short windows, so
/// the normal equations are formed in centered/scaled coordinates and
/// the coefficients mapped back.
inline FitResult fit_delay(const RunRecord& record, double reference_speed, double /*c*/) {
    if (record.size() < 10) throw std::invalid_argument("delay fit needs >= 10 samples");
    const double t_end = record.times.back();
    if (!(t_end > 0.0)) throw std::invalid_argument("delay fit needs positive times");
    const double t_start = 0.5 * t_end;
    if (record.times.front() > t_start * (1.0 + 1e-12))
        throw std::invalid_argument("delay fit: record does not span the last half window");

    std::vector<double> t, y;
    for (std::size_t i = 0; i < record.size(); ++i) {
        if (record.times[i] >= t_start * (1.0 - 1e-12)) {
            t.push_back(record.times[i]);
            y.push_back(record.level_positions[i] - reference_speed * record.times[i]);
        }
    }
    const std::size_t n = t.size();
    if (n < 10) throw std::invalid_argument("delay fit needs >= 10 samples in the window");

    std::vector<double> b1(n), b3(n);
    double m1 = 0.0, m3 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        b1[i] = std::log(t[i]);
        b3[i] = 1.0 / std::sqrt(t[i]);
        m1 += b1[i];
        m3 += b3[i];
    }
    m1 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    double s1 = 0.0, s3 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s1 = std::max(s1, std::abs(b1[i] - m1));
        s3 = std::max(s3, std::abs(b3[i] - m3));
    }
    if (s1 == 0.0 || s3 == 0.0) throw numerical_error("delay fit: degenerate time samples");

    std::array<std::array<double, 3>, 3> ata{};
    std::array<double, 3> aty{};
    for (std::size_t i = 0; i < n; ++i) {
        const std::array<double, 3> row{(b1[i] - m1) / s1, 1.0, (b3[i] - m3) / s3};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) ata[r][c] += row[r] * row[c];
            aty[r] += row[r] * y[i];
        }
    }
    const auto coef = detail::solve3(ata, aty);

    FitResult fit;
    fit.alpha = coef[0] / s1;
    fit.gamma = coef[2] / s3;
    fit.beta = coef[1] - fit.alpha * m1 - fit.gamma * m3;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.alpha * b1[i] + fit.beta + fit.gamma * b3[i]);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / static_cast<double>(n));
    fit.window = {t_start, t_end};
    return fit;
}

/// One row of a mesh-refinement study of the final LY speed.
struct ConvergenceRow {
    double dx = 0.0;
    double sigma = 0.0;
    double error = 0.0;  // sigma - target
    int sign = 0;
};

/// Rows sorted by dx descending (coarse to fine).
inline std::vector<ConvergenceRow> convergence_table(
    std::vector<std::pair<double, double>> results, double target) {
    if (results.size() < 2)
        throw std::invalid_argument("convergence table needs at least 2 rows");
    std::sort(results.begin(), results.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<ConvergenceRow> rows;
    rows.reserve(results.size());
    for (const auto& [dx, sigma] : results) {
        const double err = sigma - target;
        rows.push_back({dx, sigma, err, err > 0.0 ? 1 : (err < 0.0 ? -1 : 0)});
    }
    return rows;
}

}  // namespace fronts
