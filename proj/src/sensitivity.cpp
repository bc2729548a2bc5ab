#include "pagerank/sensitivity.hpp"

#include <cmath>
#include <sstream>

#include "pagerank/closed_forms.hpp"
#include "pagerank/error.hpp"

namespace pagerank {

namespace {

void check_nodes(std::vector<NodeId>& nodes, std::size_t n) {
  if (nodes.empty()) {
    for (NodeId i = 1; i <= n; ++i) nodes.push_back(i);
    return;
  }
  for (NodeId id : nodes) {
    if (id < 1 || id > n) {
      throw Error(ErrorCode::InvalidNode, "node " + std::to_string(id) + " not in graph", id);
    }
  }
}

void check_variant(RankVariant v) {
  if (v == RankVariant::R3) throw Error(ErrorCode::InvalidVariant, "sweeps support r1 and r2");
}

template <typename Eval>
SweepRecord run_sweep(RankVariant variant, std::vector<NodeId> nodes, std::size_t n, double c_lo,
                      double c_hi, std::size_t steps, Eval eval) {
  check_variant(variant);
  auto grid = c_grid(c_lo, c_hi, steps);
  check_nodes(nodes, n);
  SweepRecord rec{variant, std::move(nodes), std::move(grid), {}};
  for (double c : rec.c_grid) {
    const auto all = eval(c);
    std::vector<double> row;
    row.reserve(rec.nodes.size());
    for (NodeId id : rec.nodes) row.push_back(all[id - 1]);
    rec.values.push_back(std::move(row));
  }
  return rec;
}

double ipow(double c, std::size_t k) { return std::pow(c, static_cast<double>(k)); }

// Derivative of (1 - c^m) / (1 - c) as printed for the line.
double geometric_derivative(std::size_t m, double c) {
  const double om = 1.0 - c;
  const double cm = ipow(c, m);
  return 1.0 / (om * om) - cm * static_cast<double>(m) / (c * om) - cm / (om * om);
}

DerivativeCheck compare(double printed, double numeric, const char* label) {
  const double scale = std::max({std::abs(printed), std::abs(numeric), 1e-12});
  const bool agrees = std::abs(printed - numeric) <= 1e-5 * scale;
  DerivativeCheck out{printed, numeric, agrees, agrees ? printed : numeric, {}};
  if (!agrees) {
    std::ostringstream msg;
    msg.precision(12);
    msg << label << ": printed expression gives " << printed << ", central difference gives "
        << numeric << "; using the numeric value";
    out.diagnostic = msg.str();
  }
  return out;
}

}  // namespace

std::vector<double> c_grid(double c_lo, double c_hi, std::size_t steps) {
  if (!(c_lo > 0.0 && c_lo < c_hi && c_hi < 1.0) || steps < 2) {
    throw Error(ErrorCode::InvalidRange, "need 0 < c_lo < c_hi < 1 and steps >= 2");
  }
  std::vector<double> grid(steps);
  const double span = c_hi - c_lo;
  for (std::size_t k = 0; k < steps; ++k) {
    grid[k] = c_lo + span * static_cast<double>(k) / static_cast<double>(steps - 1);
  }
  grid.back() = c_hi;
  return grid;
}

SweepRecord sweep_c(const StructureSpec& spec, RankVariant variant, std::vector<NodeId> nodes,
                    double c_lo, double c_hi, std::size_t steps) {
  validate(spec);
  return run_sweep(variant, std::move(nodes), spec.node_count(), c_lo, c_hi, steps,
                   [&](double c) {
                     auto res = evaluate(spec, c);
                     return variant == RankVariant::R1 ? res.r1 : res.r2;
                   });
}

SweepRecord sweep_c(const DirectedGraph& g, RankVariant variant, std::vector<NodeId> nodes,
                    double c_lo, double c_hi, std::size_t steps) {
  const auto w = WeightVector::uniform(g.size());
  SolveOptions opts;
  opts.engine = Engine::DenseLU;
  return run_sweep(variant, std::move(nodes), g.size(), c_lo, c_hi, steps,
                   [&](double c) { return solve(g, c, w, variant, opts).values; });
}

double dr2_dc_line(std::size_t n_line, std::size_t i, double c) {
  require_damping(c);
  if (i < 1 || i > n_line) throw Error(ErrorCode::InvalidParams, "need 1 <= i <= n_line");
  if (i == n_line) return 0.0;
  return geometric_derivative(n_line - i + 1, c);
}

std::vector<double> dr_dc_numeric(const RankFunction& f, double c, double h) {
  if (!(h > 0.0 && c - h > 0.0 && c + h < 1.0)) {
    throw Error(ErrorCode::StepOutOfRange, "c - h and c + h must lie inside (0, 1)");
  }
  const auto hi = f(c + h);
  const auto lo = f(c - h);
  if (hi.size() != lo.size()) throw Error(ErrorCode::DimensionMismatch, "rank sizes differ");
  std::vector<double> d(hi.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = (hi[k] - lo[k]) / (2.0 * h);
  return d;
}

double shared_node_derivative_printed(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                      double c) {
  require_damping(c);
  const double ng = static_cast<double>(n_complete);
  const double p = (c - 1.0) * ng * ng + (c - 1.0) * (c - 1.0) * ng - c * c;
  const double q = (c - 1.0) * ng - 2.0 * c + 1.0;
  const std::size_t m = n_line - j + 1;
  const double g = (1.0 - ipow(c, m)) / (1.0 - c);
  const double dg = geometric_derivative(m, c);
  const double first = p * q * dg * ng;
  const double second =
      (ng - 1.0) * (c * ((c - 2.0) * ng + 2.0 - 2.0 * c) * g - (ng - 1.0) * (ng + c * c)) * ng;
  return (first - second) / (p * p);
}

double graph_only_derivative_printed(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                     double c) {
  require_damping(c);
  const double ng = static_cast<double>(n_complete);
  const std::size_t e = n_line - j;
  const double om = 1.0 - c;
  const double d = ng * (ng - 1.0) - (ng - 1.0) * c * c - ng * (ng - 2.0) * c;
  const double num = (c + ng) * (ng - 1.0) * om + (ng - 1.0) * c * c * (1.0 - ipow(c, e));
  const double t1 =
      ((ng - 1.0) * om - (c - ng) * (ng - 1.0) + 2.0 * (ng - 1.0) * c * (1.0 - ipow(c, e))) /
      (om * d);
  const double t2 = -(ng - 1.0) * ipow(c, 1 + e) * static_cast<double>(e) / (om * d);
  const double t3 = num / (om * om * d);
  const double t4 = -num * (2.0 * c + (2.0 - 2.0 * c - ng) * ng) / (om * d * d);
  return t1 + t2 + t3 + t4;
}

DerivativeCheck shared_node_derivative(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                       double c) {
  const double printed = shared_node_derivative_printed(n_line, n_complete, j, c);
  const auto numeric = dr_dc_numeric(
      [&](double x) { return line_sharing_node_r2(n_line, n_complete, j, x).r2; }, c);
  return compare(printed, numeric[j - 1], "shared node derivative");
}

DerivativeCheck graph_only_derivative(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                      double c) {
  const double printed = graph_only_derivative_printed(n_line, n_complete, j, c);
  const auto numeric = dr_dc_numeric(
      [&](double x) { return line_sharing_node_r2(n_line, n_complete, j, x).r2; }, c);
  return compare(printed, numeric[n_line], "graph-only node derivative");
}

CMaxResult find_c_max(const StructureSpec& spec, NodeId node, double c_lo, double c_hi,
                      std::size_t grid_points) {
  validate(spec);
  if (node < 1 || node > spec.node_count()) {
    throw Error(ErrorCode::InvalidParams, "node " + std::to_string(node) + " not in structure",
                node);
  }
  if (!(c_lo > 0.0 && c_lo < c_hi && c_hi < 1.0) || grid_points < 3) {
    throw Error(ErrorCode::InvalidParams, "need 0 < c_lo < c_hi < 1 and at least 3 grid points");
  }
  auto f = [&](double c) { return evaluate(spec, c).r1[node - 1]; };

  const auto grid = c_grid(c_lo, c_hi, grid_points);
  std::size_t best = 0;
  double best_value = f(grid[0]);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double v = f(grid[k]);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  if (best == 0 || best + 1 == grid.size()) return {grid[best], best_value, true};

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = grid[best - 1];
  double b = grid[best + 1];
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > 1e-6) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  const double c_star = 0.5 * (a + b);
  const double v_star = f(c_star);
  if (v_star >= best_value) return {c_star, v_star, false};
  return {grid[best], best_value, false};
}

}  // namespace pagerank
