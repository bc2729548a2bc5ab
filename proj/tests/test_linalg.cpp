#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pagerank/error.hpp"
#include "pagerank/graph.hpp"
#include "pagerank/linalg.hpp"

using namespace pagerank;

namespace {

DirectedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  Adjacency adj(n);
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = 1; j <= n; ++j) {
      if (i != j && edge(rng)) adj[i - 1].push_back(j);
    }
  }
  return DirectedGraph(n, std::move(adj));
}

// reach[i][j]: a path of length >= 1 leads from i to j.
std::vector<std::vector<bool>> reachability(const DirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (NodeId s = 1; s <= n; ++s) {
    std::vector<NodeId> stack(g.out_links(s).begin(), g.out_links(s).end());
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      if (reach[s - 1][v - 1]) continue;
      reach[s - 1][v - 1] = true;
      for (NodeId t : g.out_links(v)) stack.push_back(t);
    }
  }
  return reach;
}

DenseMatrix random_dominant(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    double off = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c) continue;
      m(r, c) = u(rng);
      off += std::abs(m(r, c));
    }
    m(r, r) = (u(rng) < 0 ? -1.0 : 1.0) * (off + 0.5 + std::abs(u(rng)));
  }
  return m;
}

}  // namespace

TEST(SystemMatrix, LineHasSuperdiagonal) {
  const double c = 0.85;
  const auto m = system_matrix(generate(StructureSpec::line(5)), c);
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t k = 0; k < 5; ++k) {
      const double expected = r == k ? 1.0 : (k == r + 1 ? -c : 0.0);
      EXPECT_DOUBLE_EQ(m(r, k), expected);
    }
  }
}

TEST(SystemMatrix, CompletePattern) {
  const auto m = system_matrix(generate(StructureSpec::complete(5)), 0.85);
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t k = 0; k < 5; ++k) {
      EXPECT_DOUBLE_EQ(m(r, k), r == k ? 1.0 : -0.85 / 4.0);
    }
  }
}

TEST(SystemMatrix, AllDanglingIsIdentity) {
  EXPECT_EQ(max_abs_diff(system_matrix(DirectedGraph(3, Adjacency(3)), 0.5),
                         DenseMatrix::identity(3)),
            0.0);
}

TEST(SystemMatrix, RejectsBadC) {
  EXPECT_THROW(system_matrix(generate(StructureSpec::line(2)), 1.0), Error);
  EXPECT_THROW(system_matrix(generate(StructureSpec::line(2)), 0.0), Error);
}

TEST(LuSolve, Examples) {
  const std::vector<double> rhs{1, 2, 3};
  EXPECT_EQ(lu_solve(DenseMatrix::identity(3), rhs), rhs);

  const std::vector<double> ones5(5, 1.0);
  const auto line = lu_solve(system_matrix(generate(StructureSpec::line(5)), 0.85), ones5);
  const std::vector<double> expected{3.70863125, 3.186625, 2.5725, 1.85, 1.0};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(line[i], expected[i], 1e-12);

  const auto complete = lu_solve(system_matrix(generate(StructureSpec::complete(5)), 0.85), ones5);
  for (double v : complete) EXPECT_NEAR(v, 1.0 / 0.15, 1e-12);
}

TEST(LuSolve, ResidualBound) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 11;
    const auto m = random_dominant(rng, n);
    std::vector<double> b(n);
    std::uniform_real_distribution<double> u(-5, 5);
    for (double& x : b) x = u(rng);
    const auto x = lu_solve(m, b);
    const auto mx = m * x;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(mx[i] - b[i]));
    EXPECT_LE(worst, 1e-10 * inf_norm(b));
  }
}

TEST(LuSolve, Singular) {
  DenseMatrix m(2, 2, 1.0);
  const std::vector<double> b{1, 1};
  try {
    lu_solve(m, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
  }
  EXPECT_THROW(lu_solve(DenseMatrix(2, 3), b), Error);
}

TEST(Invert, Identity) {
  EXPECT_LE(max_abs_diff(invert(DenseMatrix::identity(4)), DenseMatrix::identity(4)), 1e-15);
}

TEST(Invert, LinePowers) {
  const double c = 0.5;
  const auto inv = invert(system_matrix(generate(StructureSpec::line(5)), c));
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      EXPECT_NEAR(inv(i, j), j >= i ? std::pow(c, static_cast<double>(j - i)) : 0.0, 1e-14);
    }
  }
}

TEST(Invert, BacklinkCorner) {
  const auto inv = invert(system_matrix(generate({StructureKind::LineWithBacklink, 5, 0, 0}), 0.5));
  const double s = 4.0 / 3.0;
  EXPECT_NEAR(inv(0, 0), s, 1e-12);
  EXPECT_NEAR(inv(0, 1), s * 0.5, 1e-12);
  EXPECT_NEAR(inv(1, 0), s * 0.5, 1e-12);
  EXPECT_NEAR(inv(1, 1), s, 1e-12);
}

TEST(Invert, ResidualOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_graph(rng, 2 + t % 15, 0.3);
    const auto m = system_matrix(g, 0.9);
    EXPECT_LE(max_abs_diff(m * invert(m), DenseMatrix::identity(g.size())), 1e-9);
  }
}

TEST(BlockInvert, BlockDiagonal) {
  DenseMatrix m(3, 3);
  m(0, 0) = 2.0;
  m(1, 1) = 4.0;
  m(1, 2) = 1.0;
  m(2, 2) = 5.0;
  const auto inv = block_invert(m, {1});
  EXPECT_NEAR(inv(0, 0), 0.5, 1e-15);
  EXPECT_EQ(inv(0, 1), 0.0);
  EXPECT_EQ(inv(1, 0), 0.0);
  EXPECT_LE(max_abs_diff(inv, invert(m)), 1e-15);
}

TEST(BlockInvert, CompleteWithOutLinkBlock) {
  const double c = 0.85;
  const auto m = system_matrix(generate({StructureKind::CompleteWithOutLink, 0, 5, 0}), c);
  const auto inv = block_invert(m, {1});
  EXPECT_LE(max_abs_diff(inv, invert(m)), 1e-9);

  // Graph block in closed form, s = 4c^2 + 15c - 20.
  const double s = 4 * c * c + 15 * c - 20;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      double expected;
      if (i == 0 && j == 0) expected = (15 * c - 20) / s;
      else if (i == 0) expected = -5 * c / s;
      else if (j == 0) expected = -4 * c / s;
      else if (i == j) expected = (12 * c * c + 40 * c - 80) / ((c + 4) * s);
      else expected = -4 * c * (5 + c) / ((c + 4) * s);
      EXPECT_NEAR(inv(i, j), expected, 1e-9) << i << ',' << j;
    }
  }
}

TEST(BlockInvert, SeededRandomCases) {
  std::mt19937_64 rng(2024);
  int cases = 0;
  while (cases < 200) {
    const std::size_t n = 2 + static_cast<std::size_t>(cases) % 11;
    const auto m = random_dominant(rng, n);
    const auto reference = invert(m);
    for (std::size_t split = 1; split < n; ++split) {
      EXPECT_LE(max_abs_diff(block_invert(m, {split}), reference), 1e-9)
          << "n=" << n << " split=" << split;
    }
    ++cases;
  }
}

TEST(BlockInvert, ReportsSingularBlock) {
  DenseMatrix m = DenseMatrix::identity(3);
  m(2, 2) = 0.0;
  m(0, 2) = 1.0;
  m(2, 0) = 1.0;
  try {
    block_invert(m, {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
    EXPECT_NE(std::string(e.what()).find("block E"), std::string::npos);
  }
  DenseMatrix s(2, 2, 1.0);
  try {
    block_invert(s, {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("Schur"), std::string::npos);
  }
}

TEST(CompleteInverse, TwoNodes) {
  const auto inv = complete_graph_inverse(2, 0.5);
  EXPECT_NEAR(inv(0, 0), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(inv(0, 1), 2.0 / 3.0, 1e-15);
  EXPECT_LE(max_abs_diff(inv, invert(system_matrix(generate(StructureSpec::complete(2)), 0.5))),
            1e-12);
}

TEST(CompleteInverse, RowSumAndAgreement) {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (double c : {0.1, 0.5, 0.85, 0.99}) {
      const auto inv = complete_graph_inverse(n, c);
      double row = 0.0;
      for (std::size_t k = 0; k < n; ++k) row += inv(0, k);
      EXPECT_NEAR(row, 1.0 / (1.0 - c), 1e-9);
      EXPECT_LE(max_abs_diff(inv, invert(system_matrix(generate(StructureSpec::complete(n)), c))),
                1e-9);
    }
  }
}

TEST(CompleteInverse, SmallCIsIdentity) {
  EXPECT_LE(max_abs_diff(complete_graph_inverse(6, 1e-12), DenseMatrix::identity(6)), 1e-11);
}

TEST(CompleteInverse, InvalidN) {
  try {
    complete_graph_inverse(1, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidN);
  }
}

TEST(InverseProperties, RandomGraphs) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 14;
    const auto g = random_graph(rng, n, t % 3 == 0 ? 0.15 : 0.35);
    const double c = std::vector<double>{0.3, 0.5, 0.85, 0.95}[t % 4];
    const auto inv = invert(system_matrix(g, c));
    const auto reach = reachability(g);
    for (NodeId k = 1; k <= n; ++k) {
      double column = 0.0;
      for (std::size_t r = 0; r < n; ++r) {
        EXPECT_GE(inv(r, k - 1), -1e-12);
        column += inv(r, k - 1);
      }
      bool leaks = g.is_dangling(k);
      for (NodeId d : g.dangling()) leaks = leaks || reach[k - 1][d - 1];
      EXPECT_LE(column, 1.0 / (1.0 - c) + 1e-9);
      if (leaks) {
        EXPECT_LT(column, 1.0 / (1.0 - c) - 1e-9);
      } else {
        EXPECT_NEAR(column, 1.0 / (1.0 - c), 1e-9);
      }
      if (!reach[k - 1][k - 1]) {
        EXPECT_NEAR(inv(k - 1, k - 1), 1.0, 1e-12);
      } else {
        EXPECT_GT(inv(k - 1, k - 1), 1.0);
      }
    }
  }
}
