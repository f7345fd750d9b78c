#ifndef EIGENFACTOR_STOCHASTIC_HPP_
#define EIGENFACTOR_STOCHASTIC_HPP_

#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "eigenfactor/citation_matrix.hpp"
#include "eigenfactor/errors.hpp"
#include "eigenfactor/journal.hpp"

namespace eigenfactor {

/// Column-normalized citation matrix H together with the set of dangling
/// columns (journals whose column sum in Z was zero). Non-dangling columns
/// sum to 1; dangling columns stay all-zero.
template <typename Scalar>
struct NormalizedMatrix {
  Eigen::SparseMatrix<Scalar> weights;   // H
  std::vector<Eigen::Index> dangling;    // ascending column indices

  Eigen::Index dimension() const noexcept { return weights.cols(); }
};

using NormalizedMatrixXd = NormalizedMatrix<double>;

/// Normalizes every column of Z by its sum, turning columns into outgoing
/// citation probability distributions. Zero-sum columns are recorded as
/// dangling and left untouched.
template <typename Scalar>
NormalizedMatrix<Scalar> normalize_columns(const CrossCitationMatrix<Scalar>& cross) {
  const Eigen::Index n = cross.cols();
  NormalizedMatrix<Scalar> normalized;
  normalized.weights = cross;
  for (Eigen::Index j = 0; j < n; ++j) {
    Scalar column_sum = Scalar(0);
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(normalized.weights, j); it; ++it) {
      column_sum += it.value();
    }
    if (column_sum == Scalar(0)) {
      normalized.dangling.push_back(j);
      continue;
    }
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(normalized.weights, j); it; ++it) {
      it.valueRef() /= column_sum;
    }
  }
  return normalized;
}

/// Shares of total articles published over the five-year window. The result
/// is a probability vector; it doubles as the teleportation distribution and
/// the power-iteration start vector.
///
/// Throws ZeroTotalArticles when every journal reports zero articles.
template <typename Scalar = double>
Eigen::VectorX<Scalar> article_vector(const JournalRegistry& registry) {
  const Eigen::Index n = registry.size();
  const std::int64_t total = registry.total_articles();
  if (total <= 0) {
    throw ZeroTotalArticles();
  }
  Eigen::VectorX<Scalar> shares(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    shares[j] = static_cast<Scalar>(registry.at(j).articles) / static_cast<Scalar>(total);
  }
  return shares;
}

/// H' = H with every dangling column replaced by the article vector, held
/// implicitly: the product H'x is H x plus the article vector scaled by the
/// probability mass x places on dangling columns. H' itself is never stored
/// densely.
template <typename Scalar>
struct PatchedMatrix {
  Eigen::SparseMatrix<Scalar> weights;    // H
  Eigen::VectorX<Scalar> patch;           // column substituted into dangling slots
  Eigen::VectorX<Scalar> dangling_mask;   // 1 on dangling columns, 0 elsewhere

  Eigen::Index dimension() const noexcept { return weights.cols(); }
};

using PatchedMatrixXd = PatchedMatrix<double>;

template <typename Scalar>
PatchedMatrix<Scalar> patch_dangling(const NormalizedMatrix<Scalar>& normalized,
                                     const Eigen::VectorX<Scalar>& articles) {
  if (articles.size() != normalized.dimension()) {
    throw DimensionMismatch("article vector has length " + std::to_string(articles.size()) +
                            " but the matrix dimension is " + std::to_string(normalized.dimension()));
  }
  PatchedMatrix<Scalar> patched;
  patched.weights = normalized.weights;
  patched.patch = articles;
  patched.dangling_mask = Eigen::VectorX<Scalar>::Zero(normalized.dimension());
  for (Eigen::Index j : normalized.dangling) {
    patched.dangling_mask[j] = Scalar(1);
  }
  return patched;
}

/// H' x without materializing H'.
template <typename Scalar, typename Derived>
Eigen::VectorX<Scalar> apply(const PatchedMatrix<Scalar>& patched, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != patched.dimension()) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) +
                            " applied to a matrix of dimension " + std::to_string(patched.dimension()));
  }
  const Scalar dangling_mass = patched.dangling_mask.dot(x.derived());
  return patched.weights * x.derived() + dangling_mass * patched.patch;
}

/// One step of the traversal matrix P = alpha H' + (1 - alpha) a e^T applied
/// to x, computed as alpha H'x + (1 - alpha) a (e^T x). P is never formed.
/// For a probability vector x the output is again a probability vector.
template <typename Scalar, typename Derived>
Eigen::VectorX<Scalar> traversal_apply(const PatchedMatrix<Scalar>& patched,
                                       const Eigen::VectorX<Scalar>& articles,
                                       Scalar alpha,
                                       const Eigen::MatrixBase<Derived>& x) {
  if (articles.size() != patched.dimension()) {
    throw DimensionMismatch("article vector has length " + std::to_string(articles.size()) +
                            " but the matrix dimension is " + std::to_string(patched.dimension()));
  }
  return alpha * apply(patched, x) + (Scalar(1) - alpha) * x.sum() * articles;
}

}  // namespace eigenfactor

#endif  // EIGENFACTOR_STOCHASTIC_HPP_
