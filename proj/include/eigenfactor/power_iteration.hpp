#ifndef EIGENFACTOR_POWER_ITERATION_HPP_
#define EIGENFACTOR_POWER_ITERATION_HPP_

#include <string>
#include <utility>

#include <Eigen/Core>

#include "eigenfactor/errors.hpp"
#include "eigenfactor/stochastic.hpp"

namespace eigenfactor {

/// Damping factor, convergence tolerance (L1 on successive iterates), and
/// iteration budget for the power iteration.
struct DampingParameters {
  double alpha = 0.85;
  double tolerance = 1e-12;
  long max_iterations = 100000;
};

/// Throws InvalidParameter unless alpha is strictly inside (0, 1), the
/// tolerance is positive, and the iteration budget is at least one. alpha = 1
/// would drop teleportation, alpha = 0 would drop citations entirely.
inline void validate(const DampingParameters& params) {
  if (!(params.alpha > 0.0) || !(params.alpha < 1.0)) {
    throw InvalidParameter("alpha must lie strictly between 0 and 1, got " +
                           std::to_string(params.alpha));
  }
  if (!(params.tolerance > 0.0)) {
    throw InvalidParameter("tolerance must be positive");
  }
  if (params.max_iterations < 1) {
    throw InvalidParameter("max_iterations must be at least 1");
  }
}

/// Stationary distribution of the traversal matrix plus convergence
/// metadata.
template <typename Scalar>
struct StationaryVector {
  Eigen::VectorX<Scalar> distribution;  // pi*, sums to 1
  long iterations = 0;
  Scalar residual = Scalar(0);
};

using StationaryVectorXd = StationaryVector<double>;

/// Leading eigenvector of P by power iteration. Starts from the article
/// vector, renormalizes the iterate to sum 1 every step to absorb
/// floating-point drift, and stops once the L1 change drops to tolerance.
///
/// Throws NoConvergence when the budget runs out first.
template <typename Scalar>
StationaryVector<Scalar> leading_eigenvector(const PatchedMatrix<Scalar>& patched,
                                             const Eigen::VectorX<Scalar>& articles,
                                             const DampingParameters& params) {
  validate(params);
  const Scalar alpha = static_cast<Scalar>(params.alpha);
  Eigen::VectorX<Scalar> current = articles;
  Scalar residual = Scalar(0);
  for (long iteration = 1; iteration <= params.max_iterations; ++iteration) {
    Eigen::VectorX<Scalar> next = traversal_apply(patched, articles, alpha, current);
    next /= next.sum();
    residual = (next - current).template lpNorm<1>();
    current = std::move(next);
    if (residual <= static_cast<Scalar>(params.tolerance)) {
      return StationaryVector<Scalar>{std::move(current), iteration, residual};
    }
  }
  throw NoConvergence(params.max_iterations, static_cast<double>(residual));
}

}  // namespace eigenfactor

#endif  // EIGENFACTOR_POWER_ITERATION_HPP_
