#include "pagerank/solver.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pagerank/error.hpp"
#include "pagerank/linalg.hpp"

namespace pagerank {

namespace {

void require_weight_size(const DirectedGraph& g, const WeightVector& w) {
  if (w.size() != g.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "weight vector has " + std::to_string(w.size()) + " entries for " +
                    std::to_string(g.size()) + " nodes");
  }
}

void require_options(const SolveOptions& opts) {
  if (!(opts.tol > 0.0) || opts.max_iter < 1) {
    throw Error(ErrorCode::InvalidParams, "need tol > 0 and max_iter >= 1");
  }
}

double l1(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += std::abs(v);
  return s;
}

double l1_change(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

// y = c A^T x
void apply_transition(const DirectedGraph& g, double c, const std::vector<double>& x,
                      std::vector<double>& y) {
  std::fill(y.begin(), y.end(), 0.0);
  for (NodeId i = 1; i <= g.size(); ++i) {
    const auto links = g.out_links(i);
    if (links.empty()) continue;
    const double share = c * x[i - 1] / static_cast<double>(links.size());
    for (NodeId t : links) y[t - 1] += share;
  }
}

std::vector<double> power_r1(const DirectedGraph& g, double c, const std::vector<double>& u,
                             const SolveOptions& opts, std::size_t* iterations = nullptr) {
  std::vector<double> x(u);
  std::vector<double> next(u.size());
  for (std::size_t iter = 1; iter <= opts.max_iter; ++iter) {
    apply_transition(g, c, x, next);
    double dangling_mass = 0.0;
    for (NodeId d : g.dangling()) dangling_mass += x[d - 1];
    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    const double teleport = c * dangling_mass + (1.0 - c) * total;
    for (std::size_t k = 0; k < x.size(); ++k) next[k] += teleport * u[k];
    const double change = l1_change(next, x);
    x.swap(next);
    if (change < opts.tol) {
      if (iterations) *iterations = iter;
      return x;
    }
  }
  throw Error(ErrorCode::NotConverged,
              "power iteration did not converge in " + std::to_string(opts.max_iter) +
                  " iterations",
              opts.max_iter);
}

std::vector<double> scaled_start(const WeightVector& w) {
  auto b = w.normalized();
  const double n = static_cast<double>(w.size());
  for (double& x : b) x *= n;
  return b;
}

// Stops once the geometric tail bound change * c / (1 - c) falls below
// tol * max(1, ||x||_1).
std::vector<double> neumann_r2(const DirectedGraph& g, double c, const std::vector<double>& b,
                               const SolveOptions& opts, std::size_t* iterations) {
  std::vector<double> x(b);
  std::vector<double> next(b.size());
  for (std::size_t iter = 1; iter <= opts.max_iter; ++iter) {
    apply_transition(g, c, x, next);
    for (std::size_t k = 0; k < x.size(); ++k) next[k] += b[k];
    const double change = l1_change(next, x);
    x.swap(next);
    if (change * c / (1.0 - c) < opts.tol * std::max(1.0, l1(x))) {
      *iterations = iter;
      return x;
    }
  }
  throw Error(ErrorCode::NotConverged,
              "Neumann iteration did not converge in " + std::to_string(opts.max_iter) +
                  " iterations",
              opts.max_iter);
}

std::vector<double> r2_values(const DirectedGraph& g, double c, const WeightVector& w,
                              const SolveOptions& opts, std::size_t& iterations) {
  iterations = 0;
  switch (opts.engine) {
    case Engine::DenseLU: {
      const auto b = scaled_start(w);
      return lu_solve(system_matrix(g, c), b);
    }
    case Engine::Neumann:
      return neumann_r2(g, c, scaled_start(w), opts, &iterations);
    case Engine::Power: {
      auto x = power_r1(g, c, w.normalized(), opts, &iterations);
      double linked = 0.0;
      for (NodeId i = 1; i <= g.size(); ++i) {
        if (!g.is_dangling(i)) linked += x[i - 1];
      }
      const double scale = static_cast<double>(g.size()) / (1.0 - c * linked);
      for (double& v : x) v *= scale;
      return x;
    }
  }
  return {};
}

}  // namespace

const char* to_string(RankVariant v) noexcept {
  switch (v) {
    case RankVariant::R1: return "r1";
    case RankVariant::R2: return "r2";
    case RankVariant::R3: return "r3";
  }
  return "?";
}

RankVariant parse_variant(std::string_view name) {
  if (name == "r1") return RankVariant::R1;
  if (name == "r2") return RankVariant::R2;
  if (name == "r3") return RankVariant::R3;
  throw Error(ErrorCode::InvalidVariant, "unknown variant '" + std::string(name) + "'");
}

Engine parse_engine(std::string_view name) {
  if (name == "power") return Engine::Power;
  if (name == "lu") return Engine::DenseLU;
  if (name == "neumann") return Engine::Neumann;
  throw Error(ErrorCode::InvalidParams, "unknown engine '" + std::string(name) + "'");
}

RankVector pagerank_r1(const DirectedGraph& g, double c, const WeightVector& w,
                       const SolveOptions& opts) {
  require_damping(c);
  require_weight_size(g, w);
  require_options(opts);
  std::size_t iterations = 0;
  if (opts.engine == Engine::Power) {
    auto x = power_r1(g, c, w.normalized(), opts, &iterations);
    return {RankVariant::R1, c, std::move(x), w, iterations};
  }
  auto x = r2_values(g, c, w, opts, iterations);
  return normalize({RankVariant::R2, c, std::move(x), w, iterations});
}

RankVector pagerank_r2(const DirectedGraph& g, double c, const WeightVector& w,
                       const SolveOptions& opts) {
  require_damping(c);
  require_weight_size(g, w);
  require_options(opts);
  std::size_t iterations = 0;
  auto x = r2_values(g, c, w, opts, iterations);
  return {RankVariant::R2, c, std::move(x), w, iterations};
}

RankVector pagerank_r3(const DirectedGraph& g, double c, const WeightVector& w,
                       const SolveOptions& opts) {
  auto r = pagerank_r1(g, c, w, opts);
  std::vector<double> flow(r.values.size());
  apply_transition(g, c, r.values, flow);
  const double d = 1.0 - std::accumulate(flow.begin(), flow.end(), 0.0);
  if (std::abs(d) < 1e-12) {
    throw Error(ErrorCode::DegenerateScale, "scale d = 1 - sum(c A^T R1) vanishes");
  }
  const double scale = w.l1() / d;
  for (double& v : r.values) v *= scale;
  r.variant = RankVariant::R3;
  return r;
}

RankVector solve(const DirectedGraph& g, double c, const WeightVector& w, RankVariant variant,
                 const SolveOptions& opts) {
  switch (variant) {
    case RankVariant::R1: return pagerank_r1(g, c, w, opts);
    case RankVariant::R2: return pagerank_r2(g, c, w, opts);
    case RankVariant::R3: return pagerank_r3(g, c, w, opts);
  }
  throw Error(ErrorCode::InvalidVariant, "unknown variant");
}

RankVector normalize(const RankVector& r) {
  if (r.variant == RankVariant::R1) {
    throw Error(ErrorCode::InvalidVariant, "normalize expects an R2 or R3 vector");
  }
  const double total = l1(r.values);
  if (!(total > 0.0)) throw Error(ErrorCode::ZeroVector, "cannot normalize a zero vector");
  RankVector out = r;
  for (double& v : out.values) v /= total;
  out.variant = RankVariant::R1;
  return out;
}

}  // namespace pagerank
