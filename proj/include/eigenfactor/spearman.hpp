#ifndef EIGENFACTOR_SPEARMAN_HPP_
#define EIGENFACTOR_SPEARMAN_HPP_

#include <optional>

#include <Eigen/Core>

namespace eigenfactor {

/// Fractional ranks (1-based) with tied values assigned the average rank of
/// their run.
Eigen::VectorXd fractional_ranks(const Eigen::VectorXd& values);

/// Spearman rank correlation. Without ties this is the textbook
/// rho = 1 - 6 sum d^2 / (n (n^2 - 1)), which returns exactly 1 for equal
/// rankings; with ties it falls back to the Pearson correlation of the
/// average-tie fractional ranks.
///
/// Returns nullopt when either sequence is constant (the statistic is
/// undefined there). Throws LengthMismatch unless both sequences have the
/// same length of at least 2.
std::optional<double> spearman_rank_correlation(const Eigen::VectorXd& lhs,
                                                const Eigen::VectorXd& rhs);

}  // namespace eigenfactor

#endif  // EIGENFACTOR_SPEARMAN_HPP_
