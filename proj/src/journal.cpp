#include "eigenfactor/journal.hpp"

#include <utility>

#include "eigenfactor/errors.hpp"

namespace eigenfactor {

JournalRegistry::JournalRegistry(std::vector<Journal> journals) : journals_(std::move(journals)) {
  index_.reserve(journals_.size());
  for (std::size_t pos = 0; pos < journals_.size(); ++pos) {
    const Journal& journal = journals_[pos];
    if (journal.id.empty()) {
      throw ParseError("<registry>", pos + 1, "id", "journal id must be non-empty");
    }
    if (journal.articles < 0) {
      throw NegativeArticleCount(journal.id);
    }
    auto [it, inserted] = index_.emplace(journal.id, static_cast<Eigen::Index>(pos));
    if (!inserted) {
      throw DuplicateJournalId(journal.id);
    }
    total_articles_ += journal.articles;
  }
}

std::optional<Eigen::Index> JournalRegistry::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Eigen::Index JournalRegistry::require(std::string_view id) const {
  if (auto position = find(id)) {
    return *position;
  }
  throw UnknownJournal(std::string(id));
}

}  // namespace eigenfactor
