#pragma once

#include <cstddef>
#include <vector>

#include "pagerank/graph.hpp"
#include "pagerank/linalg.hpp"

namespace pagerank {

/// Analytic R2 under uniform weight for a structured graph, in the node order
/// of generate(spec).
struct ClosedFormResult {
  StructureSpec spec;
  double c;
  std::vector<double> r2;
  double normalizer;  // N = ||r2||_1
  std::vector<double> r1;
};

// All evaluators require 0 < c < 1 and throw InvalidParams for sizes or
// attachment indices outside the ranges accepted by generate().

/// r2_i = (1 - c^(n_L - i + 1)) / (1 - c)
ClosedFormResult line_r2(std::size_t n_line, double c);

/// Extra node n_L+1 linking to line node j. Line nodes gain c^(j+1-i) for
/// i <= j; the normalizer is evaluated in closed form.
ClosedFormResult line_with_attached_node_r2(std::size_t n_line, std::size_t j, double c);

/// Every node 1 / (1 - c), independent of n_G.
ClosedFormResult complete_r2(std::size_t n_complete, double c);

/// Complete graph whose node 1 also links to an external sink. The sink value
/// 1 + (c / n_G) R2_1 is appended as the last entry.
ClosedFormResult complete_with_outlink_r2(std::size_t n_complete, double c);

ClosedFormResult complete_to_line_r2(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                     double c);

/// Line node j gets one extra link to graph node 1. When j = 1 that link is
/// the node's only out-link, so no mass is split.
ClosedFormResult line_to_complete_r2(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                     double c);

/// Line node j is a complete-graph member. Uses the analytic normalizer.
ClosedFormResult line_sharing_node_r2(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                      double c);

/// Analytic normalizer of the shared-node structure.
double line_sharing_node_normalizer(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                    double c);

/// Inverse of I - c A^T for the line with the extra edge 1 -> 2.
DenseMatrix line_with_backlink_inverse(std::size_t n_line, double c);

/// Dispatches on spec.kind; every kind has a closed form.
ClosedFormResult evaluate(const StructureSpec& spec, double c);

}  // namespace pagerank
