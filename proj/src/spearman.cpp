#include "eigenfactor/spearman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "eigenfactor/errors.hpp"

namespace eigenfactor {

Eigen::VectorXd fractional_ranks(const Eigen::VectorXd& values) {
  const Eigen::Index n = values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index lhs, Eigen::Index rhs) { return values[lhs] < values[rhs]; });

  Eigen::VectorXd ranks(n);
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start;
    while (stop + 1 < n && values[order[stop + 1]] == values[order[start]]) {
      ++stop;
    }
    const double average = 0.5 * static_cast<double>(start + stop) + 1.0;
    for (Eigen::Index k = start; k <= stop; ++k) {
      ranks[order[k]] = average;
    }
    start = stop + 1;
  }
  return ranks;
}

namespace {

bool has_ties(const Eigen::VectorXd& ranks) {
  for (Eigen::Index i = 0; i < ranks.size(); ++i) {
    if (ranks[i] != std::floor(ranks[i])) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<double> spearman_rank_correlation(const Eigen::VectorXd& lhs,
                                                const Eigen::VectorXd& rhs) {
  if (lhs.size() != rhs.size() || lhs.size() < 2) {
    throw LengthMismatch("rank correlation needs two sequences of equal length >= 2, got " +
                         std::to_string(lhs.size()) + " and " + std::to_string(rhs.size()));
  }
  const Eigen::Index n = lhs.size();
  const Eigen::VectorXd ranks_lhs = fractional_ranks(lhs);
  const Eigen::VectorXd ranks_rhs = fractional_ranks(rhs);

  if (ranks_lhs.maxCoeff() == ranks_lhs.minCoeff() || ranks_rhs.maxCoeff() == ranks_rhs.minCoeff()) {
    return std::nullopt;  // constant sequence, undefined statistic
  }

  if (!has_ties(ranks_lhs) && !has_ties(ranks_rhs)) {
    const double squared_diffs = (ranks_lhs - ranks_rhs).squaredNorm();
    const double count = static_cast<double>(n);
    return 1.0 - 6.0 * squared_diffs / (count * (count * count - 1.0));
  }

  const Eigen::VectorXd centered_lhs = ranks_lhs.array() - ranks_lhs.mean();
  const Eigen::VectorXd centered_rhs = ranks_rhs.array() - ranks_rhs.mean();
  return centered_lhs.dot(centered_rhs) /
         std::sqrt(centered_lhs.squaredNorm() * centered_rhs.squaredNorm());
}

}  // namespace eigenfactor
