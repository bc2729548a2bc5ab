#include "pagerank/perturbation.hpp"

#include <string>

#include "pagerank/error.hpp"

namespace pagerank {

namespace {

std::vector<double> raw_solve(const DirectedGraph& g, double c, std::vector<double> v) {
  return lu_solve(system_matrix(g, c), v);
}

void check_node(const DirectedGraph& g, NodeId node) {
  if (node < 1 || node > g.size()) {
    throw Error(ErrorCode::InvalidNode, "node " + std::to_string(node) + " not in graph", node);
  }
}

std::vector<double> difference(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> d(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) d[k] = a[k] - b[k];
  return d;
}

}  // namespace

CachedInverse build_cache(const DirectedGraph& g, double c) {
  return {fingerprint(g), c, invert(system_matrix(g, c))};
}

RankVector r2_from_cache(const CachedInverse& cache, const DirectedGraph& g, const WeightVector& v) {
  if (fingerprint(g) != cache.fingerprint) {
    throw Error(ErrorCode::FingerprintMismatch, "cached inverse belongs to a different graph");
  }
  if (v.size() != g.size()) {
    throw Error(ErrorCode::DimensionMismatch, "weight vector length differs from node count");
  }
  auto b = v.normalized();
  for (double& x : b) x *= static_cast<double>(g.size());
  return {RankVariant::R2, cache.c, cache.inverse * b, v};
}

std::vector<double> zeroing_delta(const DirectedGraph& g, double c, NodeId node) {
  const NodeId one[] = {node};
  return zeroing_delta(g, c, one);
}

std::vector<double> zeroing_delta(const DirectedGraph& g, double c,
                                  std::span<const NodeId> nodes) {
  require_damping(c);
  std::vector<double> perturbed(g.size(), 1.0);
  for (NodeId id : nodes) {
    check_node(g, id);
    perturbed[id - 1] = 0.0;
  }
  return difference(raw_solve(g, c, std::vector<double>(g.size(), 1.0)),
                    raw_solve(g, c, std::move(perturbed)));
}

std::vector<double> doubling_delta(const DirectedGraph& g, double c, NodeId node) {
  require_damping(c);
  check_node(g, node);
  std::vector<double> perturbed(g.size(), 1.0);
  perturbed[node - 1] = 2.0;
  return difference(raw_solve(g, c, std::move(perturbed)),
                    raw_solve(g, c, std::vector<double>(g.size(), 1.0)));
}

double zeroing_bound(double c) {
  require_damping(c);
  return 1.0 / (1.0 - c * c);
}

}  // namespace pagerank
