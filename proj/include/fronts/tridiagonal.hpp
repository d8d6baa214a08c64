#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fronts/errors.hpp"

namespace fronts {

/// Tridiagonal system with lower/upper of length n-1 and diagonal/rhs of
/// length n.
struct TridiagonalSystem {
    std::vector<double> lower;
    std::vector<double> diagonal;
    std::vector<double> upper;
    std::vector<double> rhs;

    std::size_t size() const { return diagonal.size(); }
};

/// Thomas' algorithm, no pivoting. A vanishing pivot aborts instead of
/// producing silent garbage.
inline std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    const std::size_t n = sys.size();
    if (n == 0) throw std::invalid_argument("thomas_solve: empty system");
    if (sys.lower.size() != n - 1 || sys.upper.size() != n - 1 || sys.rhs.size() != n)
        throw std::invalid_argument("thomas_solve: inconsistent band lengths");

    std::vector<double> c(n - 1);  // modified upper band
    std::vector<double> x(n);
    double pivot = sys.diagonal[0];
    if (std::abs(pivot) < 1e-300) throw numerical_error("thomas_solve: zero pivot at row 0");
    if (n > 1) c[0] = sys.upper[0] / pivot;
    x[0] = sys.rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = sys.diagonal[i] - sys.lower[i - 1] * c[i - 1];
        if (std::abs(pivot) < 1e-300)
            throw numerical_error("thomas_solve: zero pivot at row " + std::to_string(i));
        if (i < n - 1) c[i] = sys.upper[i] / pivot;
        x[i] = (sys.rhs[i] - sys.lower[i - 1] * x[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
}

}  // namespace fronts
