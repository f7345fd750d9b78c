#ifndef EIGENFACTOR_DENSE_REFERENCE_HPP_
#define EIGENFACTOR_DENSE_REFERENCE_HPP_

#include <cmath>

#include <Eigen/Core>

#include "eigenfactor/citation_matrix.hpp"
#include "eigenfactor/errors.hpp"
#include "eigenfactor/journal.hpp"
#include "eigenfactor/stochastic.hpp"

namespace eigenfactor {

/// Reference results computed along a fully dense route.
template <typename Scalar>
struct DenseReference {
  Eigen::MatrixX<Scalar> traversal;      // P, materialized
  Eigen::VectorX<Scalar> stationary;     // dominant eigenvector of P
  Eigen::VectorX<Scalar> eigenfactor;
  long iterations = 0;
};

using DenseReferenceXd = DenseReference<double>;

inline constexpr Eigen::Index kDenseReferenceLimit = 64;

/// Brute-force oracle for the whole scoring chain. Materializes H, H', and
/// P = alpha H' + (1 - alpha) a e^T as dense matrices, runs the dominant
/// eigenvector to a machine-precision fixed point by repeated dense
/// multiplication from the uniform start, and applies the final EF formula
/// with dense arithmetic. Exists solely so the sparse implementation has an
/// independent route to agree with.
///
/// Throws InstanceTooLarge above the dense limit and NoInternalCitations
/// when H pi is the zero vector.
template <typename Scalar>
DenseReference<Scalar> dense_oracle(const CrossCitationMatrix<Scalar>& cross,
                                    const JournalRegistry& registry,
                                    Scalar alpha) {
  const Eigen::Index n = cross.cols();
  if (n > kDenseReferenceLimit) {
    throw InstanceTooLarge(n);
  }
  if (n < 1) {
    throw DimensionMismatch("dense reference needs at least one journal");
  }
  if (!(alpha > Scalar(0)) || !(alpha < Scalar(1))) {
    throw InvalidParameter("alpha must lie strictly between 0 and 1");
  }

  const Eigen::MatrixX<Scalar> dense_cross = Eigen::MatrixX<Scalar>(cross);
  const Eigen::VectorX<Scalar> articles = article_vector<Scalar>(registry);

  Eigen::MatrixX<Scalar> stochastic = Eigen::MatrixX<Scalar>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Scalar column_sum = dense_cross.col(j).sum();
    if (column_sum == Scalar(0)) {
      stochastic.col(j) = articles;  // dangling substitution, dense
    } else {
      stochastic.col(j) = dense_cross.col(j) / column_sum;
    }
  }

  DenseReference<Scalar> reference;
  reference.traversal =
      alpha * stochastic + (Scalar(1) - alpha) * (articles * Eigen::RowVectorX<Scalar>::Ones(n));

  // The traversal contracts L1 distances by alpha per step, so a fixed
  // iteration count suffices to land within 1e-15 of the fixed point.
  const long steps = static_cast<long>(
      std::ceil(std::log(2.0 / 1e-15) / -std::log(static_cast<double>(alpha)))) + 1;
  Eigen::VectorX<Scalar> state =
      Eigen::VectorX<Scalar>::Constant(n, Scalar(1) / static_cast<Scalar>(n));
  for (long step = 0; step < steps; ++step) {
    state = reference.traversal * state;
    state /= state.sum();
  }
  reference.stationary = state;
  reference.iterations = steps;

  Eigen::VectorX<Scalar> weighted = Eigen::VectorX<Scalar>::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (dense_cross.col(j).sum() != Scalar(0)) {
      weighted += stochastic.col(j) * state[j];
    }
  }
  const Scalar total = weighted.sum();
  if (!(total > Scalar(0))) {
    throw NoInternalCitations();
  }
  reference.eigenfactor = (Scalar(100) / total) * weighted;
  return reference;
}

}  // namespace eigenfactor

#endif  // EIGENFACTOR_DENSE_REFERENCE_HPP_
