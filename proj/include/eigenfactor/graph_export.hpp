#ifndef EIGENFACTOR_GRAPH_EXPORT_HPP_
#define EIGENFACTOR_GRAPH_EXPORT_HPP_

#include <string>

#include "eigenfactor/journal.hpp"
#include "eigenfactor/pipeline.hpp"
#include "eigenfactor/stochastic.hpp"

namespace eigenfactor {

enum class GraphFormat { dot, graphml };

/// Citation-flow view of the network: one node per journal with its
/// Eigenfactor score as the size attribute, one directed edge per citation
/// link (citing -> cited) weighted by the citation probability H_ij. Edges
/// with weight below `edge_threshold` are omitted.
std::string write_citation_graph(const JournalRegistry& registry,
                                 const NormalizedMatrixXd& normalized,
                                 const Ranking& ranking,
                                 GraphFormat format,
                                 double edge_threshold = 0.0);

}  // namespace eigenfactor

#endif  // EIGENFACTOR_GRAPH_EXPORT_HPP_
