#ifndef EIGENFACTOR_PIPELINE_HPP_
#define EIGENFACTOR_PIPELINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "eigenfactor/citation_matrix.hpp"
#include "eigenfactor/journal.hpp"
#include "eigenfactor/power_iteration.hpp"

namespace eigenfactor {

struct RankingRow {
  int rank = 0;
  std::string id;
  std::string name;
  double eigenfactor = 0.0;
  std::optional<double> article_influence;  // empty when the journal published no articles
  double pi = 0.0;
};

/// Full per-journal scores plus run metadata. Rows are stored in rank order.
struct Ranking {
  std::vector<RankingRow> rows;
  double alpha = 0.0;
  double tolerance = 0.0;
  long max_iterations = 0;
  long iterations = 0;
  double residual = 0.0;
  Eigen::Index journal_count = 0;
  Eigen::Index dangling_count = 0;
  std::optional<long> census_year;  // pass-through label, no computational role
};

/// Z -> H -> H' -> pi -> EF/AI/ranks in one call.
///
/// Propagates ZeroTotalArticles, NoConvergence, and NoInternalCitations from
/// the individual steps.
Ranking compute_ranking(const JournalRegistry& registry,
                        const CrossCitationMatrixXd& cross,
                        const DampingParameters& params = {},
                        std::optional<long> census_year = std::nullopt);

}  // namespace eigenfactor

#endif  // EIGENFACTOR_PIPELINE_HPP_
