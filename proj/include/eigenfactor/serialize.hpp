#ifndef EIGENFACTOR_SERIALIZE_HPP_
#define EIGENFACTOR_SERIALIZE_HPP_

#include <optional>
#include <string>

#include "eigenfactor/pipeline.hpp"
#include "eigenfactor/robustness.hpp"

namespace eigenfactor {

/// Shortest-of-17-significant-digits decimal form; round-trips to the exact
/// same double. Locale-independent.
std::string format_full(double value);

/// Fixed six decimal places, for the human-readable csv display columns.
std::string format_fixed6(double value);

/// RFC-style csv quoting, applied only when the field needs it.
std::string csv_quote(const std::string& field);

std::string json_escape(const std::string& text);

// The emitters below are shared by the command-line tool and the test suite;
// identical inputs produce byte-identical text. Display columns carry six
// decimals, the *_full companions and every json number carry full
// precision. Undefined Article Influence serializes as NA (csv) or null
// (json).

std::string write_ranking_csv(const Ranking& ranking, std::optional<long> top = std::nullopt);
std::string write_ranking_json(const Ranking& ranking, std::optional<long> top = std::nullopt);

std::string write_robustness_csv(const RobustnessReport& report);
std::string write_robustness_json(const RobustnessReport& report);

}  // namespace eigenfactor

#endif  // EIGENFACTOR_SERIALIZE_HPP_
