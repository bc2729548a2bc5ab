#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pagerank/graph.hpp"

namespace pagerank {

/// Row-major dense real matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<double>& data() const noexcept { return data_; }

  /// Copy of the sub-block starting at (r0, c0).
  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a);
std::vector<double> operator*(const DenseMatrix& a, std::span<const double> x);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double inf_norm(std::span<const double> x);

/// I - c A^T with A_ij = 1/r_i per edge i -> j; dangling rows of A stay zero.
DenseMatrix system_matrix(const DirectedGraph& g, double c);

/// LU with partial pivoting. Singular when a pivot magnitude is below 1e-14.
std::vector<double> lu_solve(const DenseMatrix& m, std::span<const double> rhs);
DenseMatrix invert(const DenseMatrix& m);

/// Top-left block B is split x split, bottom-right block E is the remainder.
struct BlockPartition {
  std::size_t split = 1;
};

/// Inverse assembled from the Schur complement S = B - C E^-1 D:
///   [ S^-1             -S^-1 C E^-1              ]
///   [ -E^-1 D S^-1      E^-1 + E^-1 D S^-1 C E^-1 ]
/// Singular names the failing block ("E" or "Schur complement").
DenseMatrix block_invert(const DenseMatrix& m, BlockPartition p);

/// Analytic inverse of I - c A^T for the complete graph on n nodes.
DenseMatrix complete_graph_inverse(std::size_t n, double c);

}  // namespace pagerank
