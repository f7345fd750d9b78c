#include "eigenfactor/io.hpp"

#include <charconv>
#include <fstream>
#include <unordered_set>

#include "eigenfactor/errors.hpp"

namespace eigenfactor {

namespace {

// Strips a UTF-8 byte-order mark and a trailing carriage return.
std::string_view clean_line(std::string_view line, bool first_line) {
  if (first_line && line.starts_with("\xEF\xBB\xBF")) {
    line.remove_prefix(3);
  }
  if (line.ends_with('\r')) {
    line.remove_suffix(1);
  }
  return line;
}

std::int64_t parse_count(std::string_view text, std::string_view filename, std::size_t line_number,
                         std::string_view field) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError(std::string(filename), line_number, std::string(field),
                     "'" + std::string(text) + "' is not an integer");
  }
  return value;
}

void expect_header(const std::vector<std::string>& fields, std::string_view expected_joined,
                   const std::vector<std::string_view>& expected, std::string_view filename) {
  bool matches = fields.size() == expected.size();
  for (std::size_t i = 0; matches && i < expected.size(); ++i) {
    matches = fields[i] == expected[i];
  }
  if (!matches) {
    throw ParseError(std::string(filename), 1, "header",
                     "expected header '" + std::string(expected_joined) + "'");
  }
}

}  // namespace

std::vector<std::string> split_csv_record(std::string_view line, std::string_view filename,
                                          std::size_t line_number) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      if (!current.empty()) {
        throw ParseError(std::string(filename), line_number, current,
                         "quote may only open at the start of a field");
      }
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
    ++i;
  }
  if (quoted) {
    throw ParseError(std::string(filename), line_number, current, "unterminated quoted field");
  }
  fields.push_back(std::move(current));
  return fields;
}

JournalRegistry load_registry(std::istream& input, std::string_view filename) {
  std::vector<Journal> journals;
  std::unordered_set<std::string> seen;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(input, raw)) {
    ++line_number;
    const std::string_view line = clean_line(raw, line_number == 1);
    if (line_number == 1) {
      expect_header(split_csv_record(line, filename, 1), "id,name,articles",
                    {"id", "name", "articles"}, filename);
      continue;
    }
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> fields = split_csv_record(line, filename, line_number);
    if (fields.size() != 3) {
      throw ParseError(std::string(filename), line_number, "row",
                       "expected 3 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) {
      throw ParseError(std::string(filename), line_number, "id", "journal id must be non-empty");
    }
    if (!seen.insert(fields[0]).second) {
      throw DuplicateJournalId(fields[0],
                               std::string(filename) + ":" + std::to_string(line_number));
    }
    const std::int64_t articles = parse_count(fields[2], filename, line_number, "articles");
    if (articles < 0) {
      throw NegativeArticleCount(fields[0],
                                 std::string(filename) + ":" + std::to_string(line_number));
    }
    journals.push_back(Journal{std::move(fields[0]), std::move(fields[1]), articles});
  }
  return JournalRegistry(std::move(journals));
}

JournalRegistry load_registry(const std::filesystem::path& path) {
  std::ifstream input(path);
  if (!input) {
    throw Error("cannot open journals file '" + path.string() + "'");
  }
  return load_registry(input, path.string());
}

std::vector<CitationEdge> load_edges(std::istream& input, std::string_view filename) {
  std::vector<CitationEdge> edges;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(input, raw)) {
    ++line_number;
    const std::string_view line = clean_line(raw, line_number == 1);
    if (line_number == 1) {
      expect_header(split_csv_record(line, filename, 1), "citing,cited,count",
                    {"citing", "cited", "count"}, filename);
      continue;
    }
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> fields = split_csv_record(line, filename, line_number);
    if (fields.size() != 3) {
      throw ParseError(std::string(filename), line_number, "row",
                       "expected 3 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError(std::string(filename), line_number, fields[0].empty() ? "citing" : "cited",
                       "journal id must be non-empty");
    }
    const std::int64_t count = parse_count(fields[2], filename, line_number, "count");
    if (count < 1) {
      throw ParseError(std::string(filename), line_number, "count",
                       "citation count must be a positive integer, got " + fields[2]);
    }
    edges.push_back(CitationEdge{std::move(fields[0]), std::move(fields[1]),
                                 static_cast<double>(count)});
  }
  return edges;
}

std::vector<CitationEdge> load_edges(const std::filesystem::path& path) {
  std::ifstream input(path);
  if (!input) {
    throw Error("cannot open edges file '" + path.string() + "'");
  }
  return load_edges(input, path.string());
}

}  // namespace eigenfactor
