#pragma once

#include <cstddef>
#include <functional>

#include "lis/errors.hpp"
#include "lis/types.hpp"

namespace lis {

/// Convergence targets for disk integration. Defaults follow the evaluation
/// setup: absolute error 1e-10, relative error 1e-6.
struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-6;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

using PlaneField = std::function<double(double, double)>;

constexpr std::size_t kDefaultEvalBudget = 10'000'000;

/// Integrates f over the disk to the requested tolerance. Works in polar
/// coordinates about the disk center (adaptive Gauss-Kronrod panels in r,
/// adaptive panels in theta, with the r Jacobian). Exceeding the evaluation
/// budget throws QuadratureBudgetError with the best estimate attached.
QuadratureResult integrate_disk(const PlaneField& f, const Disk& d,
                                const Tolerance& tol = {},
                                std::size_t max_evals = kDefaultEvalBudget);

/// Midpoint Riemann sum on an n x n polar grid, including the r Jacobian.
/// Deliberately a different scheme from integrate_disk so agreement between
/// the two is evidence rather than tautology. n >= 16.
double integrate_disk_oracle(const PlaneField& f, const Disk& d, int n);

}  // namespace lis
