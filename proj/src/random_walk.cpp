#include "pagerank/random_walk.hpp"

#include <cmath>
#include <random>
#include <string>

#include "pagerank/error.hpp"

namespace pagerank {

namespace {

constexpr std::uint64_t kHitStream = 0x68697473ULL;

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

// Uniform in [0, 1) from the top 53 bits; avoids implementation-defined
// distribution classes.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check(const DirectedGraph& g, double c, const WalkConfig& cfg) {
  require_damping(c);
  if (cfg.walks_per_node < 1 || cfg.max_steps < 1) {
    throw Error(ErrorCode::InvalidParams, "walks_per_node and max_steps must be >= 1");
  }
  (void)g;
}

// One step from `node`; returns 0 when the walk stops.
NodeId step(const DirectedGraph& g, double c, NodeId node, std::mt19937_64& rng) {
  const auto links = g.out_links(node);
  if (links.empty()) return 0;
  const double u = unit(rng);
  if (u >= c) return 0;
  auto k = static_cast<std::size_t>(u / c * static_cast<double>(links.size()));
  if (k >= links.size()) k = links.size() - 1;
  return links[k];
}

}  // namespace

VisitEstimate estimate_r2(const DirectedGraph& g, double c, const WalkConfig& cfg) {
  check(g, c, cfg);
  const std::size_t n = g.size();
  const double walks = static_cast<double>(cfg.walks_per_node);
  VisitEstimate est{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 0};
  std::vector<double> sum(n), sum_sq(n), variance(n, 0.0);
  std::vector<std::size_t> visits(n, 0);
  std::vector<NodeId> touched;

  for (NodeId start = 1; start <= n; ++start) {
    auto rng = make_stream(cfg.seed, start);
    std::fill(sum.begin(), sum.end(), 0.0);
    std::fill(sum_sq.begin(), sum_sq.end(), 0.0);
    for (std::size_t w = 0; w < cfg.walks_per_node; ++w) {
      NodeId node = start;
      std::size_t steps = 0;
      while (node != 0) {
        if (visits[node - 1]++ == 0) touched.push_back(node);
        if (steps++ == cfg.max_steps) {
          ++est.truncated;
          break;
        }
        node = step(g, c, node, rng);
      }
      for (NodeId t : touched) {
        const double x = static_cast<double>(visits[t - 1]);
        sum[t - 1] += x;
        sum_sq[t - 1] += x * x;
        visits[t - 1] = 0;
      }
      touched.clear();
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double m = sum[k] / walks;
      est.mean[k] += m;
      if (cfg.walks_per_node > 1) {
        const double var = std::max(0.0, (sum_sq[k] - walks * m * m) / (walks - 1.0));
        variance[k] += var / walks;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) est.std_error[k] = std::sqrt(variance[k]);
  return est;
}

HitEstimate hitting_probability(const DirectedGraph& g, double c, NodeId from, NodeId to,
                                const WalkConfig& cfg) {
  check(g, c, cfg);
  for (NodeId id : {from, to}) {
    if (id < 1 || id > g.size()) {
      throw Error(ErrorCode::InvalidNode, "node " + std::to_string(id) + " not in graph", id);
    }
  }
  if (from == to) throw Error(ErrorCode::SameNode, "from and to must differ", from);

  auto rng = make_stream(cfg.seed ^ kHitStream, from, to);
  HitEstimate est;
  std::size_t hits = 0;
  for (std::size_t w = 0; w < cfg.walks_per_node; ++w) {
    NodeId node = from;
    for (std::size_t steps = 0;; ++steps) {
      if (steps == cfg.max_steps) {
        ++est.truncated;
        break;
      }
      node = step(g, c, node, rng);
      if (node == 0) break;
      if (node == to) {
        ++hits;
        break;
      }
    }
  }
  const double walks = static_cast<double>(cfg.walks_per_node);
  est.probability = static_cast<double>(hits) / walks;
  est.std_error = std::sqrt(est.probability * (1.0 - est.probability) / walks);
  return est;
}

}  // namespace pagerank
