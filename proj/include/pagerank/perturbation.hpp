#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pagerank/graph.hpp"
#include "pagerank/linalg.hpp"
#include "pagerank/solver.hpp"

namespace pagerank {

struct CachedInverse {
  std::uint64_t fingerprint;
  double c;
  DenseMatrix inverse;  // (I - c A^T)^-1
};

CachedInverse build_cache(const DirectedGraph& g, double c);

/// inverse * (n u) with u = v / ||v||_1. FingerprintMismatch when the cache
/// was built for a different graph.
RankVector r2_from_cache(const CachedInverse& cache, const DirectedGraph& g, const WeightVector& v);

// Deltas use raw weights of 1 per node, x = inverse * v_raw, so each start
// node contributes exactly one visit to itself.

/// x(all ones) - x(ones with the node's weight set to 0), i.e. the node's
/// column of the inverse.
std::vector<double> zeroing_delta(const DirectedGraph& g, double c, NodeId node);
std::vector<double> zeroing_delta(const DirectedGraph& g, double c, std::span<const NodeId> nodes);

/// x(ones with the node's weight set to 2) - x(all ones).
std::vector<double> doubling_delta(const DirectedGraph& g, double c, NodeId node);

/// 1 / (1 - c^2), the most a node can lose of its own rank by zeroing its
/// weight.
double zeroing_bound(double c);

}  // namespace pagerank
