#ifndef EIGENFACTOR_IO_HPP_
#define EIGENFACTOR_IO_HPP_

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "eigenfactor/citation_matrix.hpp"
#include "eigenfactor/journal.hpp"

namespace eigenfactor {

/// Journals file: UTF-8, comma-separated, header `id,name,articles`, one
/// journal per row. Quoted fields may embed commas and doubled quotes.
JournalRegistry load_registry(std::istream& input, std::string_view filename);
JournalRegistry load_registry(const std::filesystem::path& path);

/// Edges file: UTF-8, comma-separated, header `citing,cited,count`, one edge
/// per row. Counts must be positive integers.
std::vector<CitationEdge> load_edges(std::istream& input, std::string_view filename);
std::vector<CitationEdge> load_edges(const std::filesystem::path& path);

/// Splits one CSV record. Handles quoted fields with embedded separators and
/// doubled quotes; throws ParseError on unbalanced quoting.
std::vector<std::string> split_csv_record(std::string_view line, std::string_view filename,
                                          std::size_t line_number);

}  // namespace eigenfactor

#endif  // EIGENFACTOR_IO_HPP_
