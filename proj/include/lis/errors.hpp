#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace lis {

/// Quadrature exceeded its evaluation budget. Carries the best estimate so
/// far and its error bound; the value is never returned silently.
class QuadratureBudgetError : public std::runtime_error {
   public:
    QuadratureBudgetError(const std::string& what, double best, double err,
                          std::size_t evals)
        : std::runtime_error(what),
          best_estimate(best),
          error_bound(err),
          evaluations(evals) {}

    double best_estimate;
    double error_bound;
    std::size_t evaluations;
};

/// Fisher matrix is numerically singular; names the near-null direction.
class SingularFisherError : public std::runtime_error {
   public:
    SingularFisherError(const std::string& what, std::array<double, 3> dir)
        : std::runtime_error(what), near_null_direction(dir) {}

    std::array<double, 3> near_null_direction;
};

/// Two independent closed-form routes disagreed beyond tolerance.
class InternalConsistencyError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lis
