#include "eigenfactor/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <string_view>

namespace eigenfactor {

namespace {

std::string to_chars_string(double value, std::chars_format format, int precision) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value, format, precision);
  return std::string(buffer, result.ptr);
}

long row_limit(std::size_t rows, std::optional<long> top) {
  const long available = static_cast<long>(rows);
  if (!top || *top < 0 || *top > available) {
    return available;
  }
  return *top;
}

}  // namespace

std::string format_full(double value) {
  return to_chars_string(value, std::chars_format::general, 17);
}

std::string format_fixed6(double value) {
  return to_chars_string(value, std::chars_format::fixed, 6);
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) {
    return field;
  }
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') {
      quoted += "\"\"";
    } else {
      quoted.push_back(c);
    }
  }
  quoted.push_back('"');
  return quoted;
}

std::string json_escape(const std::string& text) {
  std::string escaped;
  escaped.reserve(text.size());
  for (unsigned char c : text) {
    switch (c) {
      case '"': escaped += "\\\""; break;
      case '\\': escaped += "\\\\"; break;
      case '\b': escaped += "\\b"; break;
      case '\f': escaped += "\\f"; break;
      case '\n': escaped += "\\n"; break;
      case '\r': escaped += "\\r"; break;
      case '\t': escaped += "\\t"; break;
      default:
        if (c < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
          escaped += buffer;
        } else {
          escaped.push_back(static_cast<char>(c));
        }
    }
  }
  return escaped;
}

std::string write_ranking_csv(const Ranking& ranking, std::optional<long> top) {
  std::string out;
  out += "# alpha=" + format_full(ranking.alpha) + "\n";
  out += "# tolerance=" + format_full(ranking.tolerance) + "\n";
  out += "# max_iterations=" + std::to_string(ranking.max_iterations) + "\n";
  out += "# iterations=" + std::to_string(ranking.iterations) + "\n";
  out += "# residual=" + format_full(ranking.residual) + "\n";
  out += "# journals=" + std::to_string(ranking.journal_count) + "\n";
  out += "# dangling=" + std::to_string(ranking.dangling_count) + "\n";
  if (ranking.census_year) {
    out += "# census_year=" + std::to_string(*ranking.census_year) + "\n";
  }
  out += "rank,id,name,eigenfactor,article_influence,pi,"
         "eigenfactor_full,article_influence_full,pi_full\n";
  const long limit = row_limit(ranking.rows.size(), top);
  for (long i = 0; i < limit; ++i) {
    const RankingRow& row = ranking.rows[static_cast<std::size_t>(i)];
    out += std::to_string(row.rank);
    out += ',' + csv_quote(row.id);
    out += ',' + csv_quote(row.name);
    out += ',' + format_fixed6(row.eigenfactor);
    out += ',';
    out += row.article_influence ? format_fixed6(*row.article_influence) : "NA";
    out += ',' + format_fixed6(row.pi);
    out += ',' + format_full(row.eigenfactor);
    out += ',';
    out += row.article_influence ? format_full(*row.article_influence) : "NA";
    out += ',' + format_full(row.pi);
    out += '\n';
  }
  return out;
}

std::string write_ranking_json(const Ranking& ranking, std::optional<long> top) {
  std::string out = "{\n  \"metadata\": {\n";
  out += "    \"alpha\": " + format_full(ranking.alpha) + ",\n";
  out += "    \"tolerance\": " + format_full(ranking.tolerance) + ",\n";
  out += "    \"max_iterations\": " + std::to_string(ranking.max_iterations) + ",\n";
  out += "    \"iterations\": " + std::to_string(ranking.iterations) + ",\n";
  out += "    \"residual\": " + format_full(ranking.residual) + ",\n";
  out += "    \"journals\": " + std::to_string(ranking.journal_count) + ",\n";
  out += "    \"dangling\": " + std::to_string(ranking.dangling_count);
  if (ranking.census_year) {
    out += ",\n    \"census_year\": " + std::to_string(*ranking.census_year);
  }
  out += "\n  },\n  \"rankings\": [";
  const long limit = row_limit(ranking.rows.size(), top);
  for (long i = 0; i < limit; ++i) {
    const RankingRow& row = ranking.rows[static_cast<std::size_t>(i)];
    out += (i == 0) ? "\n" : ",\n";
    out += "    {\"rank\": " + std::to_string(row.rank);
    out += ", \"id\": \"" + json_escape(row.id) + "\"";
    out += ", \"name\": \"" + json_escape(row.name) + "\"";
    out += ", \"eigenfactor\": " + format_full(row.eigenfactor);
    out += ", \"article_influence\": ";
    out += row.article_influence ? format_full(*row.article_influence) : "null";
    out += ", \"pi\": " + format_full(row.pi) + "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

std::string write_robustness_csv(const RobustnessReport& report) {
  std::string out;
  out += "# keep_fraction=" + format_full(report.keep_fraction) + "\n";
  out += "# trials=" + std::to_string(report.trials) + "\n";
  out += "# seed=" + std::to_string(report.seed) + "\n";
  out += "# skipped=" + std::to_string(report.skipped) + "\n";
  out += "# mean=" + (report.mean ? format_full(*report.mean) : "NA") + "\n";
  out += "# min=" + (report.min ? format_full(*report.min) : "NA") + "\n";
  out += "# max=" + (report.max ? format_full(*report.max) : "NA") + "\n";
  out += "trial,correlation,correlation_full\n";
  for (std::size_t trial = 0; trial < report.correlations.size(); ++trial) {
    const auto& correlation = report.correlations[trial];
    out += std::to_string(trial);
    out += ',';
    out += correlation ? format_fixed6(*correlation) : "NA";
    out += ',';
    out += correlation ? format_full(*correlation) : "NA";
    out += '\n';
  }
  return out;
}

std::string write_robustness_json(const RobustnessReport& report) {
  std::string out = "{\n";
  out += "  \"keep_fraction\": " + format_full(report.keep_fraction) + ",\n";
  out += "  \"trials\": " + std::to_string(report.trials) + ",\n";
  out += "  \"seed\": " + std::to_string(report.seed) + ",\n";
  out += "  \"skipped\": " + std::to_string(report.skipped) + ",\n";
  out += "  \"correlations\": [";
  for (std::size_t trial = 0; trial < report.correlations.size(); ++trial) {
    out += (trial == 0) ? "" : ", ";
    out += report.correlations[trial] ? format_full(*report.correlations[trial]) : "null";
  }
  out += "],\n";
  out += "  \"summary\": {";
  out += "\"mean\": " + (report.mean ? format_full(*report.mean) : "null");
  out += ", \"min\": " + (report.min ? format_full(*report.min) : "null");
  out += ", \"max\": " + (report.max ? format_full(*report.max) : "null");
  out += "}\n}\n";
  return out;
}

}  // namespace eigenfactor
