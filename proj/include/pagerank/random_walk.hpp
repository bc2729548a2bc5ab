#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pagerank/graph.hpp"

namespace pagerank {

struct WalkConfig {
  std::size_t walks_per_node = 100000;
  std::uint64_t seed = 0;
  std::size_t max_steps = 10000;
};

struct VisitEstimate {
  std::vector<double> mean;
  std::vector<double> std_error;
  std::size_t truncated = 0;  // walks cut off at max_steps
};

struct HitEstimate {
  double probability = 0.0;
  double std_error = 0.0;
  std::size_t truncated = 0;
};

// Each walk continues with probability c to a uniformly chosen out-link and
// stops otherwise, or at a dangling node. Every start node draws from its own
// std::mt19937_64 stream seeded with (seed, start), so results do not depend
// on evaluation order.

/// Expected visit counts, start visit included, summed over one walk batch per
/// start node.
VisitEstimate estimate_r2(const DirectedGraph& g, double c, const WalkConfig& cfg);

/// Fraction of walks from `from` that reach `to`.
HitEstimate hitting_probability(const DirectedGraph& g, double c, NodeId from, NodeId to,
                                const WalkConfig& cfg);

}  // namespace pagerank
