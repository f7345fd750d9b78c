#ifndef EIGENFACTOR_CITATION_MATRIX_HPP_
#define EIGENFACTOR_CITATION_MATRIX_HPP_

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "eigenfactor/errors.hpp"
#include "eigenfactor/journal.hpp"

namespace eigenfactor {

/// A directed citation link: `count` citations issued by `citing` that point
/// at articles published by `cited`.
struct CitationEdge {
  std::string citing;
  std::string cited;
  double count = 0.0;
};

/// The cross-citation matrix Z is a plain column-major Eigen sparse matrix:
/// entry (i, j) holds the citations from journal j (column) to journal i
/// (row). The diagonal is identically zero.
template <typename Scalar>
using CrossCitationMatrix = Eigen::SparseMatrix<Scalar>;

using CrossCitationMatrixXd = CrossCitationMatrix<double>;

/// Accumulates edges into Z over the registry's index set. Repeated
/// (citing, cited) pairs add up; self-citation edges are dropped so the
/// diagonal stays zero by construction.
///
/// Throws UnknownJournal for an unresolvable endpoint and MalformedEdge for
/// a count that is not a positive finite number.
template <typename Scalar = double>
CrossCitationMatrix<Scalar> build_cross_citation_matrix(const JournalRegistry& registry,
                                                        std::span<const CitationEdge> edges) {
  const Eigen::Index n = registry.size();
  std::vector<Eigen::Triplet<Scalar>> triplets;
  triplets.reserve(edges.size());
  for (const CitationEdge& edge : edges) {
    const Eigen::Index citing = registry.require(edge.citing);
    const Eigen::Index cited = registry.require(edge.cited);
    if (!(edge.count > 0.0) || !std::isfinite(edge.count)) {
      throw MalformedEdge("edge " + edge.citing + " -> " + edge.cited +
                          " has non-positive count " + std::to_string(edge.count));
    }
    if (citing == cited) {
      continue;  // self-citations are excluded
    }
    triplets.emplace_back(cited, citing, static_cast<Scalar>(edge.count));
  }
  CrossCitationMatrix<Scalar> cross(n, n);
  cross.setFromTriplets(triplets.begin(), triplets.end());
  return cross;
}

/// Structural summary of a cross-citation matrix. Dangling columns belong to
/// journals that issue no citations; isolated journals neither issue nor
/// receive any.
struct MatrixSummary {
  std::vector<Eigen::Index> dangling_columns;
  std::vector<Eigen::Index> isolated_journals;
  double total_citations = 0.0;
};

template <typename Scalar>
MatrixSummary validate_matrix(const CrossCitationMatrix<Scalar>& cross) {
  const Eigen::Index n = cross.cols();
  Eigen::VectorX<Scalar> column_sums = Eigen::VectorX<Scalar>::Zero(n);
  Eigen::VectorX<Scalar> row_sums = Eigen::VectorX<Scalar>::Zero(n);
  MatrixSummary summary;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (typename CrossCitationMatrix<Scalar>::InnerIterator it(cross, j); it; ++it) {
      column_sums[j] += it.value();
      row_sums[it.row()] += it.value();
      summary.total_citations += static_cast<double>(it.value());
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    if (column_sums[j] == Scalar(0)) {
      summary.dangling_columns.push_back(j);
      if (row_sums[j] == Scalar(0)) {
        summary.isolated_journals.push_back(j);
      }
    }
  }
  return summary;
}

}  // namespace eigenfactor

#endif  // EIGENFACTOR_CITATION_MATRIX_HPP_
