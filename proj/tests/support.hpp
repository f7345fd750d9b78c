// Shared helpers for the test suites: tiny registry builders and a seeded
// random-instance generator driven by the library's portable RNG mapping so
// frozen expectations stay valid across platforms.
#ifndef EIGENFACTOR_TESTS_SUPPORT_HPP_
#define EIGENFACTOR_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "eigenfactor/citation_matrix.hpp"
#include "eigenfactor/journal.hpp"
#include "eigenfactor/random.hpp"

namespace eftest {

inline eigenfactor::JournalRegistry make_registry(
    std::vector<std::tuple<std::string, std::string, std::int64_t>> rows) {
  std::vector<eigenfactor::Journal> journals;
  journals.reserve(rows.size());
  for (auto& [id, name, articles] : rows) {
    journals.push_back(eigenfactor::Journal{std::move(id), std::move(name), articles});
  }
  return eigenfactor::JournalRegistry(std::move(journals));
}

struct RandomInstance {
  eigenfactor::JournalRegistry registry;
  std::vector<eigenfactor::CitationEdge> edges;
};

inline std::string instance_journal_id(std::uint64_t index) {
  return "J" + std::string(index < 10 ? "0" : "") + std::to_string(index);
}

/// Citation network with `size` journals, article counts in 1..50, and each
/// ordered pair (citing != cited) present with probability `density` and a
/// count in 1..99. Fully determined by the engine state.
inline RandomInstance make_random_instance(std::mt19937_64& engine, Eigen::Index size,
                                           double density) {
  std::vector<eigenfactor::Journal> journals;
  for (Eigen::Index i = 0; i < size; ++i) {
    const auto index = static_cast<std::uint64_t>(i);
    journals.push_back(eigenfactor::Journal{
        instance_journal_id(index), "Journal " + std::to_string(index),
        static_cast<std::int64_t>(1 + eigenfactor::uniform_index(engine, 50))});
  }
  std::vector<eigenfactor::CitationEdge> edges;
  for (Eigen::Index citing = 0; citing < size; ++citing) {
    for (Eigen::Index cited = 0; cited < size; ++cited) {
      if (citing == cited) {
        continue;
      }
      if (eigenfactor::uniform_real(engine) < density) {
        edges.push_back(eigenfactor::CitationEdge{
            instance_journal_id(static_cast<std::uint64_t>(citing)),
            instance_journal_id(static_cast<std::uint64_t>(cited)),
            static_cast<double>(1 + eigenfactor::uniform_index(engine, 99))});
      }
    }
  }
  return RandomInstance{eigenfactor::JournalRegistry(std::move(journals)), std::move(edges)};
}

}  // namespace eftest

#endif  // EIGENFACTOR_TESTS_SUPPORT_HPP_
