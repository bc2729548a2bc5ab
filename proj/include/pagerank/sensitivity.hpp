#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pagerank/graph.hpp"
#include "pagerank/solver.hpp"

namespace pagerank {

/// values[k][m] is the rank of nodes[m] at c_grid[k].
struct SweepRecord {
  RankVariant variant;
  std::vector<NodeId> nodes;
  std::vector<double> c_grid;
  std::vector<std::vector<double>> values;
};

/// Evenly spaced grid of `steps` points from c_lo to c_hi inclusive.
/// Throws InvalidRange unless 0 < c_lo < c_hi < 1 and steps >= 2.
std::vector<double> c_grid(double c_lo, double c_hi, std::size_t steps);

/// R1 or R2 from the closed forms. An empty node list selects every node.
SweepRecord sweep_c(const StructureSpec& spec, RankVariant variant, std::vector<NodeId> nodes,
                    double c_lo, double c_hi, std::size_t steps);
/// R1 or R2 from dense solves under uniform weight.
SweepRecord sweep_c(const DirectedGraph& g, RankVariant variant, std::vector<NodeId> nodes,
                    double c_lo, double c_hi, std::size_t steps);

double dr2_dc_line(std::size_t n_line, std::size_t i, double c);

using RankFunction = std::function<std::vector<double>(double)>;

/// Central difference (f(c+h) - f(c-h)) / 2h. StepOutOfRange unless
/// 0 < c-h and c+h < 1.
std::vector<double> dr_dc_numeric(const RankFunction& f, double c, double h = 1e-6);

// Printed derivative expressions for the shared-node structure, evaluated
// literally.
double shared_node_derivative_printed(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                      double c);
double graph_only_derivative_printed(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                     double c);

struct DerivativeCheck {
  double printed;
  double numeric;
  bool agrees;             // relative difference within 1e-5
  double value;            // printed when it agrees, numeric otherwise
  std::string diagnostic;  // empty when agrees
};

DerivativeCheck shared_node_derivative(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                       double c);
DerivativeCheck graph_only_derivative(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                      double c);

struct CMaxResult {
  double c_max;
  double value_at_max;
  bool boundary_hit;
};

/// Maximizes the closed-form R1 of `node` over c: grid scan, then
/// golden-section refinement to 1e-6 inside the best grid cell's neighbours.
/// A maximum on the first or last grid point is reported as is.
CMaxResult find_c_max(const StructureSpec& spec, NodeId node, double c_lo = 0.001,
                      double c_hi = 0.999, std::size_t grid_points = 999);

}  // namespace pagerank
