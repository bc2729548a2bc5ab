#include "pagerank/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pagerank/error.hpp"

namespace pagerank {

namespace {

constexpr double kPivotFloor = 1e-14;

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
}

void require_square(const DenseMatrix& m) {
  if (!m.square() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "matrix must be square and non-empty");
  }
}

struct LuFactors {
  DenseMatrix lu;
  std::vector<std::size_t> perm;
};

LuFactors factorize(const DenseMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  LuFactors f{m, std::vector<std::size_t>(n)};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  auto& a = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(a(r, k)) > std::abs(a(p, k))) p = r;
    }
    if (std::abs(a(p, k)) < kPivotFloor) {
      throw Error(ErrorCode::Singular, "pivot below 1e-14 in column " + std::to_string(k + 1), k + 1);
    }
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      std::swap(f.perm[k], f.perm[p]);
    }
    const double pivot = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double factor = a(r, k) / pivot;
      a(r, k) = factor;
      if (factor == 0.0) continue;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= factor * a(k, c);
    }
  }
  return f;
}

std::vector<double> substitute(const LuFactors& f, std::span<const double> rhs) {
  const std::size_t n = f.lu.rows();
  const auto& a = f.lu;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = rhs[f.perm[i]];
    for (std::size_t k = 0; k < i; ++k) s -= a(i, k) * x[k];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a(i, k) * x[k];
    x[i] = s / a(i, i);
  }
  return x;
}

DenseMatrix invert_named(const DenseMatrix& m, const char* name) {
  try {
    return invert(m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    throw Error(ErrorCode::Singular, std::string("block ") + name + " is singular", e.detail());
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                               std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block exceeds matrix bounds");
  }
  DenseMatrix b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  }
  return b;
}

void DenseMatrix::set_block(std::size_t r0, std::size_t c0, const DenseMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block exceeds matrix bounds");
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  DenseMatrix out(a);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  }
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  DenseMatrix out(a);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  }
  return out;
}

DenseMatrix operator-(const DenseMatrix& a) {
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = -a(r, c);
  }
  return out;
}

std::vector<double> operator*(const DenseMatrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "vector length differs");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto row = a.row(r);
    y[r] = std::inner_product(row.begin(), row.end(), x.begin(), 0.0);
  }
  return y;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

double inf_norm(std::span<const double> x) {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, std::abs(v));
  return worst;
}

DenseMatrix system_matrix(const DirectedGraph& g, double c) {
  require_damping(c);
  const std::size_t n = g.size();
  DenseMatrix m = DenseMatrix::identity(n);
  for (NodeId i = 1; i <= n; ++i) {
    const auto links = g.out_links(i);
    if (links.empty()) continue;
    const double w = c / static_cast<double>(links.size());
    for (NodeId j : links) m(j - 1, i - 1) -= w;  // column i of A^T holds row i of A
  }
  return m;
}

std::vector<double> lu_solve(const DenseMatrix& m, std::span<const double> rhs) {
  require_square(m);
  if (rhs.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length differs");
  return substitute(factorize(m), rhs);
}

DenseMatrix invert(const DenseMatrix& m) {
  const auto f = factorize(m);
  const std::size_t n = m.rows();
  DenseMatrix inv(n, n);
  std::vector<double> e(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    e[c] = 1.0;
    const auto col = substitute(f, e);
    e[c] = 0.0;
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
  }
  return inv;
}

DenseMatrix block_invert(const DenseMatrix& m, BlockPartition p) {
  require_square(m);
  const std::size_t n = m.rows();
  if (p.split < 1 || p.split >= n) {
    throw Error(ErrorCode::DimensionMismatch, "split must satisfy 1 <= split < n");
  }
  const std::size_t k = p.split;
  const std::size_t rest = n - k;
  const DenseMatrix b = m.block(0, 0, k, k);
  const DenseMatrix c = m.block(0, k, k, rest);
  const DenseMatrix d = m.block(k, 0, rest, k);
  const DenseMatrix e = m.block(k, k, rest, rest);

  const DenseMatrix e_inv = invert_named(e, "E");
  const DenseMatrix c_e_inv = c * e_inv;
  const DenseMatrix s_inv = invert_named(b - c_e_inv * d, "Schur complement");
  const DenseMatrix e_inv_d_s_inv = e_inv * d * s_inv;

  DenseMatrix out(n, n);
  out.set_block(0, 0, s_inv);
  out.set_block(0, k, -(s_inv * c_e_inv));
  out.set_block(k, 0, -e_inv_d_s_inv);
  out.set_block(k, k, e_inv + e_inv_d_s_inv * c_e_inv);
  return out;
}

DenseMatrix complete_graph_inverse(std::size_t n, double c) {
  if (n < 2) throw Error(ErrorCode::InvalidN, "complete graph inverse needs n >= 2", n);
  require_damping(c);
  const double nn = static_cast<double>(n);
  const double q = (nn - 1.0) - c * (nn - 2.0);
  const double denom = q - c * c;
  DenseMatrix inv(n, n, c / denom);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = q / denom;
  return inv;
}

}  // namespace pagerank
