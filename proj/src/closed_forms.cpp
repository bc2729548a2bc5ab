#include "pagerank/closed_forms.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pagerank/error.hpp"

namespace pagerank {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidParams, what);
}

double ipow(double c, std::size_t k) { return std::pow(c, static_cast<double>(k)); }

// sum_{k=0}^{m-1} c^k
double geometric(double c, std::size_t m) { return (1.0 - ipow(c, m)) / (1.0 - c); }

double line_value(std::size_t n_line, std::size_t i, double c) {
  return geometric(c, n_line - i + 1);
}

ClosedFormResult finish(const StructureSpec& spec, double c, std::vector<double> r2,
                        double normalizer) {
  for (double v : r2) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidParams, "closed form produced a non-positive value");
    }
  }
  std::vector<double> r1(r2);
  for (double& v : r1) v /= normalizer;
  return {spec, c, std::move(r2), normalizer, std::move(r1)};
}

ClosedFormResult finish(const StructureSpec& spec, double c, std::vector<double> r2) {
  const double n = std::accumulate(r2.begin(), r2.end(), 0.0);
  return finish(spec, c, std::move(r2), n);
}

// Denominator n(n-1) - (n-1)c^2 - n(n-2)c.
double outlink_denominator(double n, double c) {
  return n * (n - 1.0) - (n - 1.0) * c * c - n * (n - 2.0) * c;
}

// Complete-graph hitting quantity (n-1) - c(n-2).
double complete_q(double n, double c) { return (n - 1.0) - c * (n - 2.0); }

void check_composite(std::size_t n_line, std::size_t n_complete, std::size_t j, double c) {
  require_damping(c);
  require(n_line >= 1, "n_line must be >= 1");
  require(n_complete >= 2, "n_complete must be >= 2");
  require(j >= 1 && j <= n_line, "need 1 <= j <= n_line");
}

}  // namespace

ClosedFormResult line_r2(std::size_t n_line, double c) {
  require_damping(c);
  require(n_line >= 1, "n_line must be >= 1");
  std::vector<double> r2(n_line);
  for (std::size_t i = 1; i <= n_line; ++i) r2[i - 1] = line_value(n_line, i, c);
  return finish(StructureSpec::line(n_line), c, std::move(r2));
}

ClosedFormResult line_with_attached_node_r2(std::size_t n_line, std::size_t j, double c) {
  require_damping(c);
  require(n_line >= 1, "n_line must be >= 1");
  require(j >= 1 && j <= n_line, "need 1 <= j <= n_line");
  std::vector<double> r2(n_line + 1);
  for (std::size_t i = 1; i <= n_line; ++i) {
    const double b = i <= j ? ipow(c, j + 1 - i) : 0.0;
    r2[i - 1] = line_value(n_line, i, c) + b;
  }
  r2[n_line] = 1.0;

  double n = 1.0 + c * geometric(c, j);
  for (std::size_t k = 0; k < n_line; ++k) n += static_cast<double>(n_line - k) * ipow(c, k);
  return finish({StructureKind::LineWithAttachedNode, n_line, 0, j}, c, std::move(r2), n);
}

ClosedFormResult complete_r2(std::size_t n_complete, double c) {
  require_damping(c);
  require(n_complete >= 2, "n_complete must be >= 2");
  const double v = 1.0 / (1.0 - c);
  return finish(StructureSpec::complete(n_complete), c, std::vector<double>(n_complete, v),
                static_cast<double>(n_complete) * v);
}

ClosedFormResult complete_with_outlink_r2(std::size_t n_complete, double c) {
  require_damping(c);
  require(n_complete >= 2, "n_complete must be >= 2");
  const double n = static_cast<double>(n_complete);
  const double d = outlink_denominator(n, c);
  const double first = (n * (n - 1.0) + n * c) / d;
  const double rest = (c + n) * (n - 1.0) / d;
  std::vector<double> r2(n_complete + 1, rest);
  r2[0] = first;
  r2[n_complete] = 1.0 + c / n * first;
  return finish({StructureKind::CompleteWithOutLink, 0, n_complete, 0}, c, std::move(r2));
}

ClosedFormResult complete_to_line_r2(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                     double c) {
  check_composite(n_line, n_complete, j, c);
  const double ng = static_cast<double>(n_complete);
  const double d = outlink_denominator(ng, c);
  std::vector<double> r2(n_line + n_complete);
  for (std::size_t i = 1; i <= n_line; ++i) {
    const double b = i <= j ? ipow(c, j + 1 - i) * (c + ng - 1.0) / d : 0.0;
    r2[i - 1] = line_value(n_line, i, c) + b;
  }
  r2[n_line] = (ng * (ng - 1.0) + ng * c) / d;
  for (std::size_t k = 1; k < n_complete; ++k) r2[n_line + k] = (c + ng) * (ng - 1.0) / d;
  return finish({StructureKind::CompleteToLine, n_line, n_complete, j}, c, std::move(r2));
}

ClosedFormResult line_to_complete_r2(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                     double c) {
  check_composite(n_line, n_complete, j, c);
  const double h = j > 1 ? 0.5 : 1.0;
  const double arriving = geometric(c, n_line + 1 - j);  // visits to line node j
  std::vector<double> r2(n_line + n_complete);
  for (std::size_t i = 1; i <= n_line; ++i) {
    r2[i - 1] = i >= j ? line_value(n_line, i, c)
                       : geometric(c, j - i) + h * ipow(c, j - i) * arriving;
  }
  const double q = complete_q(static_cast<double>(n_complete), c);
  const double base = 1.0 / (1.0 - c);
  const double inflow = h * c * arriving;
  r2[n_line] = inflow * q / (q - c * c) + base;
  for (std::size_t k = 1; k < n_complete; ++k) r2[n_line + k] = inflow * c / (q - c * c) + base;
  return finish({StructureKind::LineToComplete, n_line, n_complete, j}, c, std::move(r2));
}

namespace {

double shared_node_value(std::size_t n_line, std::size_t n_complete, std::size_t j, double c) {
  const double ng = static_cast<double>(n_complete);
  const double q = complete_q(ng, c);
  if (j == 1) {
    const double inflow = c * geometric(c, n_line - 1);
    return 1.0 / (1.0 - c) + inflow * q / (q - c * c);
  }
  const double g = geometric(c, n_line - j + 1);
  return (g + c * (ng - 1.0) / q) * ng * q / (ng * q - c * c * (ng - 1.0));
}

double graph_only_value(std::size_t n_line, std::size_t n_complete, std::size_t j, double c) {
  const double ng = static_cast<double>(n_complete);
  if (j == 1) {
    const double q = complete_q(ng, c);
    const double inflow = c * geometric(c, n_line - 1);
    return 1.0 / (1.0 - c) + inflow * c / (q - c * c);
  }
  const double d = outlink_denominator(ng, c);
  const double num = (c + ng) * (ng - 1.0) * (1.0 - c) +
                     (ng - 1.0) * c * c * (1.0 - ipow(c, n_line - j));
  return num / ((1.0 - c) * d);
}

}  // namespace

double line_sharing_node_normalizer(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                    double c) {
  check_composite(n_line, n_complete, j, c);
  const double ng = static_cast<double>(n_complete);
  const double nl = static_cast<double>(n_line);
  const double rj = shared_node_value(n_line, n_complete, j, c);
  const double rg = graph_only_value(n_line, n_complete, j, c);
  const double om = 1.0 - c;
  const double below = c * (1.0 - ipow(c, j - 1));
  return (ng - 1.0) * rg + rj + (nl - 1.0) / om - c * (1.0 - ipow(c, n_line - j)) / (om * om) -
         below / (om * om) + below * rj / (ng * om);
}

ClosedFormResult line_sharing_node_r2(std::size_t n_line, std::size_t n_complete, std::size_t j,
                                      double c) {
  check_composite(n_line, n_complete, j, c);
  const double ng = static_cast<double>(n_complete);
  const double rj = shared_node_value(n_line, n_complete, j, c);
  // Node 1 as the shared node has no line link below it, so the i < j branch
  // never applies there.
  std::vector<double> r2(n_line + n_complete - 1);
  for (std::size_t i = 1; i <= n_line; ++i) {
    if (i > j) {
      r2[i - 1] = line_value(n_line, i, c);
    } else if (i == j) {
      r2[i - 1] = rj;
    } else {
      r2[i - 1] = ipow(c, j - i) * rj / ng + geometric(c, j - i);
    }
  }
  const double rg = graph_only_value(n_line, n_complete, j, c);
  for (std::size_t k = 0; k + 1 < n_complete; ++k) r2[n_line + k] = rg;
  return finish(StructureSpec::sharing(n_line, n_complete, j), c, std::move(r2),
                line_sharing_node_normalizer(n_line, n_complete, j, c));
}

DenseMatrix line_with_backlink_inverse(std::size_t n_line, double c) {
  require_damping(c);
  require(n_line >= 2, "n_line must be >= 2");
  const double s = 1.0 / (1.0 - c * c);
  DenseMatrix inv(n_line, n_line);
  for (std::size_t k = 1; k <= n_line; ++k) {
    inv(0, k - 1) = s * ipow(c, k - 1);
    inv(1, k - 1) = k == 1 ? s * c : s * ipow(c, k - 2);
  }
  for (std::size_t i = 3; i <= n_line; ++i) {
    for (std::size_t k = i; k <= n_line; ++k) inv(i - 1, k - 1) = ipow(c, k - i);
  }
  return inv;
}

ClosedFormResult evaluate(const StructureSpec& spec, double c) {
  validate(spec);
  switch (spec.kind) {
    case StructureKind::Line:
      return line_r2(spec.n_line, c);
    case StructureKind::LineWithBacklink: {
      const auto inv = line_with_backlink_inverse(spec.n_line, c);
      const std::vector<double> ones(spec.n_line, 1.0);
      return finish(spec, c, inv * ones);
    }
    case StructureKind::LineWithAttachedNode:
      return line_with_attached_node_r2(spec.n_line, spec.attach, c);
    case StructureKind::LineSplit: {
      require_damping(c);
      std::vector<double> r2(spec.n_line);
      for (std::size_t i = 1; i <= spec.n_line; ++i) {
        r2[i - 1] = i <= spec.attach ? line_value(spec.attach, i, c) : line_value(spec.n_line, i, c);
      }
      return finish(spec, c, std::move(r2));
    }
    case StructureKind::Complete:
      return complete_r2(spec.n_complete, c);
    case StructureKind::CompleteWithOutLink:
      return complete_with_outlink_r2(spec.n_complete, c);
    case StructureKind::CompleteToLine:
      return complete_to_line_r2(spec.n_line, spec.n_complete, spec.attach, c);
    case StructureKind::LineToComplete:
      return line_to_complete_r2(spec.n_line, spec.n_complete, spec.attach, c);
    case StructureKind::LineSharingNodeWithComplete:
      return line_sharing_node_r2(spec.n_line, spec.n_complete, spec.attach, c);
  }
  throw Error(ErrorCode::InvalidSpec, "unknown structure kind");
}

}  // namespace pagerank
