#ifndef EIGENFACTOR_JOURNAL_HPP_
#define EIGENFACTOR_JOURNAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

namespace eigenfactor {

/// One journal record: a unique id token, a display name, and the number of
/// articles it published over the five-year window.
struct Journal {
  std::string id;
  std::string name;
  std::int64_t articles = 0;
};

/// Ordered set of journals. Positions are 0..n-1 in insertion order and the
/// id index is the inverse of that ordering; all matrices in the library are
/// defined over this index set. Immutable after construction and safe to
/// share across concurrent readers.
class JournalRegistry {
 public:
  JournalRegistry() = default;

  /// Validates ids (non-empty, unique) and article counts (non-negative).
  /// Throws DuplicateJournalId or NegativeArticleCount.
  explicit JournalRegistry(std::vector<Journal> journals);

  Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(journals_.size()); }
  bool empty() const noexcept { return journals_.empty(); }

  const Journal& at(Eigen::Index position) const { return journals_.at(static_cast<std::size_t>(position)); }
  const std::vector<Journal>& journals() const noexcept { return journals_; }

  /// Position of a journal id, or nullopt when the id is not registered.
  std::optional<Eigen::Index> find(std::string_view id) const;

  /// Like find() but throws UnknownJournal.
  Eigen::Index require(std::string_view id) const;

  /// Sum of article counts over all journals.
  std::int64_t total_articles() const noexcept { return total_articles_; }

 private:
  std::vector<Journal> journals_;
  std::unordered_map<std::string, Eigen::Index> index_;
  std::int64_t total_articles_ = 0;
};

}  // namespace eigenfactor

#endif  // EIGENFACTOR_JOURNAL_HPP_
