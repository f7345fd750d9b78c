#ifndef EIGENFACTOR_ROBUSTNESS_HPP_
#define EIGENFACTOR_ROBUSTNESS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eigenfactor/citation_matrix.hpp"
#include "eigenfactor/journal.hpp"
#include "eigenfactor/power_iteration.hpp"

namespace eigenfactor {

struct RobustnessOptions {
  double keep_fraction = 0.8;
  long trials = 1;
  std::uint64_t seed = 0;
  DampingParameters params;
};

/// Rank-stability statistics across journal-subset resamples. One entry per
/// trial; a missing correlation marks a trial whose subnetwork produced no
/// internal citation weight and was skipped.
struct RobustnessReport {
  double keep_fraction = 0.0;
  long trials = 0;
  std::uint64_t seed = 0;
  long skipped = 0;
  std::vector<std::optional<double>> correlations;
  std::optional<double> mean;  // over completed trials; empty if none completed
  std::optional<double> min;
  std::optional<double> max;
};

/// For each trial, uniformly samples ceil(keep_fraction * n) journals
/// without replacement, rebuilds the cross-citation matrix restricted to the
/// sample, recomputes Eigenfactor scores, and reports the Spearman
/// correlation between full-network and subset-network ranks over the
/// retained journals. Per-trial RNG streams derive from (seed, trial), so
/// reports reproduce exactly and trials are order-independent.
///
/// Throws InvalidParameter for keep_fraction outside (0, 1] or trials < 1
/// and SampleTooSmall when the sample would hold fewer than two journals.
RobustnessReport robustness_harness(const JournalRegistry& registry,
                                    std::span<const CitationEdge> edges,
                                    const RobustnessOptions& options);

}  // namespace eigenfactor

#endif  // EIGENFACTOR_ROBUSTNESS_HPP_
