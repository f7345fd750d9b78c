#include "eigenfactor/pipeline.hpp"

#include <algorithm>

#include "eigenfactor/scores.hpp"
#include "eigenfactor/stochastic.hpp"

namespace eigenfactor {

Ranking compute_ranking(const JournalRegistry& registry,
                        const CrossCitationMatrixXd& cross,
                        const DampingParameters& params,
                        std::optional<long> census_year) {
  const NormalizedMatrixXd normalized = normalize_columns(cross);
  const Eigen::VectorXd articles = article_vector(registry);
  const PatchedMatrixXd patched = patch_dangling(normalized, articles);
  const StationaryVectorXd stationary = leading_eigenvector(patched, articles, params);
  const Eigen::VectorXd scores = eigenfactor_scores(normalized, stationary.distribution);
  const auto influence = article_influence(scores, articles);
  const std::vector<int> ranks = journal_ranks(scores, registry);

  Ranking ranking;
  ranking.alpha = params.alpha;
  ranking.tolerance = params.tolerance;
  ranking.max_iterations = params.max_iterations;
  ranking.iterations = stationary.iterations;
  ranking.residual = stationary.residual;
  ranking.journal_count = registry.size();
  ranking.dangling_count = static_cast<Eigen::Index>(normalized.dangling.size());
  ranking.census_year = census_year;

  ranking.rows.resize(static_cast<std::size_t>(registry.size()));
  for (Eigen::Index i = 0; i < registry.size(); ++i) {
    const Journal& journal = registry.at(i);
    RankingRow row;
    row.rank = ranks[static_cast<std::size_t>(i)];
    row.id = journal.id;
    row.name = journal.name;
    row.eigenfactor = scores[i];
    row.article_influence = influence[static_cast<std::size_t>(i)];
    row.pi = stationary.distribution[i];
    ranking.rows[static_cast<std::size_t>(row.rank - 1)] = std::move(row);
  }
  return ranking;
}

}  // namespace eigenfactor
