#include "eigenfactor/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

#include "eigenfactor/errors.hpp"
#include "eigenfactor/random.hpp"
#include "eigenfactor/scores.hpp"
#include "eigenfactor/spearman.hpp"
#include "eigenfactor/stochastic.hpp"

namespace eigenfactor {

namespace {

/// First `count` positions of a partial Fisher-Yates shuffle, returned in
/// registry order.
std::vector<Eigen::Index> sample_positions(std::mt19937_64& engine, Eigen::Index population,
                                           Eigen::Index count) {
  std::vector<Eigen::Index> pool(static_cast<std::size_t>(population));
  std::iota(pool.begin(), pool.end(), Eigen::Index(0));
  for (Eigen::Index i = 0; i < count; ++i) {
    const auto offset = static_cast<Eigen::Index>(
        uniform_index(engine, static_cast<std::uint64_t>(population - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(i + offset)]);
  }
  pool.resize(static_cast<std::size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

Eigen::VectorXd subset_eigenfactor(const JournalRegistry& registry,
                                   const CrossCitationMatrixXd& cross,
                                   const DampingParameters& params) {
  const NormalizedMatrixXd normalized = normalize_columns(cross);
  const Eigen::VectorXd articles = article_vector(registry);
  const PatchedMatrixXd patched = patch_dangling(normalized, articles);
  const StationaryVectorXd stationary = leading_eigenvector(patched, articles, params);
  return eigenfactor_scores(normalized, stationary.distribution);
}

}  // namespace

RobustnessReport robustness_harness(const JournalRegistry& registry,
                                    std::span<const CitationEdge> edges,
                                    const RobustnessOptions& options) {
  if (!(options.keep_fraction > 0.0) || !(options.keep_fraction <= 1.0)) {
    throw InvalidParameter("keep_fraction must lie in (0, 1], got " +
                           std::to_string(options.keep_fraction));
  }
  if (options.trials < 1) {
    throw InvalidParameter("trials must be at least 1");
  }

  const Eigen::Index population = registry.size();
  const Eigen::Index sample_size =
      options.keep_fraction >= 1.0
          ? population
          : std::min(population, static_cast<Eigen::Index>(std::ceil(
                                     options.keep_fraction * static_cast<double>(population))));
  if (sample_size < 2) {
    throw SampleTooSmall("keep_fraction " + std::to_string(options.keep_fraction) + " of " +
                         std::to_string(population) + " journals keeps fewer than 2");
  }

  // Baseline ranks over the full network.
  const CrossCitationMatrixXd full_cross = build_cross_citation_matrix(registry, edges);
  const Eigen::VectorXd full_scores = subset_eigenfactor(registry, full_cross, options.params);
  const std::vector<int> full_ranks = journal_ranks(full_scores, registry);

  RobustnessReport report;
  report.keep_fraction = options.keep_fraction;
  report.trials = options.trials;
  report.seed = options.seed;
  report.correlations.resize(static_cast<std::size_t>(options.trials));

  double sum = 0.0;
  long completed = 0;
  for (long trial = 0; trial < options.trials; ++trial) {
    std::mt19937_64 engine = stream_engine(options.seed, static_cast<std::uint64_t>(trial));
    const std::vector<Eigen::Index> sample = sample_positions(engine, population, sample_size);

    std::vector<Journal> kept;
    kept.reserve(sample.size());
    std::unordered_set<std::string> kept_ids;
    for (Eigen::Index position : sample) {
      kept.push_back(registry.at(position));
      kept_ids.insert(kept.back().id);
    }
    const JournalRegistry sub_registry(std::move(kept));

    std::vector<CitationEdge> sub_edges;
    for (const CitationEdge& edge : edges) {
      if (kept_ids.contains(edge.citing) && kept_ids.contains(edge.cited)) {
        sub_edges.push_back(edge);
      }
    }

    std::optional<double> correlation;
    try {
      const CrossCitationMatrixXd sub_cross = build_cross_citation_matrix(sub_registry, sub_edges);
      const Eigen::VectorXd sub_scores = subset_eigenfactor(sub_registry, sub_cross, options.params);
      const std::vector<int> sub_ranks = journal_ranks(sub_scores, sub_registry);

      Eigen::VectorXd baseline(sample_size);
      Eigen::VectorXd resampled(sample_size);
      for (Eigen::Index k = 0; k < sample_size; ++k) {
        baseline[k] = static_cast<double>(full_ranks[static_cast<std::size_t>(sample[static_cast<std::size_t>(k)])]);
        resampled[k] = static_cast<double>(sub_ranks[static_cast<std::size_t>(k)]);
      }
      correlation = spearman_rank_correlation(baseline, resampled);
    } catch (const NoInternalCitations&) {
      // subnetwork carries no internal citation weight; skip the trial
    } catch (const ZeroTotalArticles&) {
      // every sampled journal reports zero articles; same treatment
    }

    report.correlations[static_cast<std::size_t>(trial)] = correlation;
    if (correlation) {
      sum += *correlation;
      ++completed;
      report.min = report.min ? std::min(*report.min, *correlation) : *correlation;
      report.max = report.max ? std::max(*report.max, *correlation) : *correlation;
    } else {
      ++report.skipped;
    }
  }
  if (completed > 0) {
    report.mean = sum / static_cast<double>(completed);
  }
  return report;
}

}  // namespace eigenfactor
