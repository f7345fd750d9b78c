#ifndef EIGENFACTOR_SCORES_HPP_
#define EIGENFACTOR_SCORES_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "eigenfactor/errors.hpp"
#include "eigenfactor/journal.hpp"
#include "eigenfactor/stochastic.hpp"

namespace eigenfactor {

/// EF = 100 H pi / sum_i [H pi]_i. Deliberately uses H rather than H': the
/// dangling substitution and teleportation shape the random walk only;
/// dangling columns pass no weight through the final projection.
///
/// Throws NoInternalCitations when H pi is the zero vector.
template <typename Scalar>
Eigen::VectorX<Scalar> eigenfactor_scores(const NormalizedMatrix<Scalar>& normalized,
                                          const Eigen::VectorX<Scalar>& pi) {
  if (pi.size() != normalized.dimension()) {
    throw DimensionMismatch("stationary vector has length " + std::to_string(pi.size()) +
                            " but the matrix dimension is " + std::to_string(normalized.dimension()));
  }
  Eigen::VectorX<Scalar> weighted = normalized.weights * pi;
  const Scalar total = weighted.sum();
  if (!(total > Scalar(0))) {
    throw NoInternalCitations();
  }
  return (Scalar(100) / total) * weighted;
}

/// AI_i = 0.01 EF_i / a_i, so 1.0 marks the average journal. Journals with a
/// zero article share get no number at all.
template <typename Scalar>
std::vector<std::optional<Scalar>> article_influence(const Eigen::VectorX<Scalar>& eigenfactor,
                                                     const Eigen::VectorX<Scalar>& articles) {
  if (eigenfactor.size() != articles.size()) {
    throw DimensionMismatch("score vector has length " + std::to_string(eigenfactor.size()) +
                            " but the article vector has length " + std::to_string(articles.size()));
  }
  std::vector<std::optional<Scalar>> influence(static_cast<std::size_t>(eigenfactor.size()));
  for (Eigen::Index i = 0; i < eigenfactor.size(); ++i) {
    if (articles[i] > Scalar(0)) {
      influence[static_cast<std::size_t>(i)] = Scalar(0.01) * eigenfactor[i] / articles[i];
    }
  }
  return influence;
}

/// Dense ranks 1..n by descending Eigenfactor, ties broken by ascending
/// journal id. Returned in registry order.
template <typename Scalar>
std::vector<int> journal_ranks(const Eigen::VectorX<Scalar>& eigenfactor,
                               const JournalRegistry& registry) {
  if (eigenfactor.size() != registry.size()) {
    throw DimensionMismatch("score vector has length " + std::to_string(eigenfactor.size()) +
                            " but the registry holds " + std::to_string(registry.size()) + " journals");
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(registry.size()));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::sort(order.begin(), order.end(), [&](Eigen::Index lhs, Eigen::Index rhs) {
    if (eigenfactor[lhs] != eigenfactor[rhs]) {
      return eigenfactor[lhs] > eigenfactor[rhs];
    }
    return registry.at(lhs).id < registry.at(rhs).id;
  });
  std::vector<int> ranks(order.size());
  for (std::size_t position = 0; position < order.size(); ++position) {
    ranks[static_cast<std::size_t>(order[position])] = static_cast<int>(position) + 1;
  }
  return ranks;
}

}  // namespace eigenfactor

#endif  // EIGENFACTOR_SCORES_HPP_
