#include "eigenfactor/graph_export.hpp"

#include <unordered_map>

#include "eigenfactor/errors.hpp"
#include "eigenfactor/serialize.hpp"

namespace eigenfactor {

namespace {

std::string dot_quote(const std::string& text) {
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') {
      quoted.push_back('\\');
    }
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string xml_escape(const std::string& text) {
  std::string escaped;
  escaped.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': escaped += "&amp;"; break;
      case '<': escaped += "&lt;"; break;
      case '>': escaped += "&gt;"; break;
      case '"': escaped += "&quot;"; break;
      case '\'': escaped += "&apos;"; break;
      default: escaped.push_back(c);
    }
  }
  return escaped;
}

}  // namespace

std::string write_citation_graph(const JournalRegistry& registry,
                                 const NormalizedMatrixXd& normalized,
                                 const Ranking& ranking,
                                 GraphFormat format,
                                 double edge_threshold) {
  if (normalized.dimension() != registry.size()) {
    throw DimensionMismatch("matrix dimension " + std::to_string(normalized.dimension()) +
                            " does not match registry size " + std::to_string(registry.size()));
  }
  std::unordered_map<std::string, double> score_by_id;
  score_by_id.reserve(ranking.rows.size());
  for (const RankingRow& row : ranking.rows) {
    score_by_id.emplace(row.id, row.eigenfactor);
  }

  std::string out;
  if (format == GraphFormat::dot) {
    out += "digraph citation_flow {\n";
    for (Eigen::Index i = 0; i < registry.size(); ++i) {
      const Journal& journal = registry.at(i);
      out += "  " + dot_quote(journal.id) + " [label=" + dot_quote(journal.name) +
             ", size=" + format_full(score_by_id.at(journal.id)) + "];\n";
    }
    for (Eigen::Index citing = 0; citing < normalized.dimension(); ++citing) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(normalized.weights, citing); it; ++it) {
        if (it.value() < edge_threshold) {
          continue;
        }
        out += "  " + dot_quote(registry.at(citing).id) + " -> " + dot_quote(registry.at(it.row()).id) +
               " [weight=" + format_full(it.value()) + "];\n";
      }
    }
    out += "}\n";
    return out;
  }

  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  out += "  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n";
  out += "  <key id=\"size\" for=\"node\" attr.name=\"size\" attr.type=\"double\"/>\n";
  out += "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n";
  out += "  <graph id=\"citation_flow\" edgedefault=\"directed\">\n";
  for (Eigen::Index i = 0; i < registry.size(); ++i) {
    const Journal& journal = registry.at(i);
    out += "    <node id=\"" + xml_escape(journal.id) + "\">";
    out += "<data key=\"name\">" + xml_escape(journal.name) + "</data>";
    out += "<data key=\"size\">" + format_full(score_by_id.at(journal.id)) + "</data>";
    out += "</node>\n";
  }
  for (Eigen::Index citing = 0; citing < normalized.dimension(); ++citing) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(normalized.weights, citing); it; ++it) {
      if (it.value() < edge_threshold) {
        continue;
      }
      out += "    <edge source=\"" + xml_escape(registry.at(citing).id) + "\" target=\"" +
             xml_escape(registry.at(it.row()).id) + "\">";
      out += "<data key=\"weight\">" + format_full(it.value()) + "</data>";
      out += "</edge>\n";
    }
  }
  out += "  </graph>\n";
  out += "</graphml>\n";
  return out;
}

}  // namespace eigenfactor
