#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "pagerank/closed_forms.hpp"
#include "pagerank/error.hpp"
#include "pagerank/linalg.hpp"
#include "pagerank/solver.hpp"

using namespace pagerank;

namespace {

std::vector<double> dense_r2(const StructureSpec& spec, double c) {
  const auto g = generate(spec);
  SolveOptions o;
  o.engine = Engine::DenseLU;
  return pagerank_r2(g, c, WeightVector::uniform(g.size()), o).values;
}

double linf(const std::vector<double>& a, const std::vector<double>& b) {
  EXPECT_EQ(a.size(), b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

void expect_all(const std::vector<double>& v, double x, double tol) {
  for (double e : v) EXPECT_NEAR(e, x, tol);
}

}  // namespace

TEST(Line, Examples) {
  EXPECT_LE(linf(line_r2(5, 0.85).r2, {3.70863125, 3.186625, 2.5725, 1.85, 1.0}), 1e-12);
  EXPECT_LE(linf(line_r2(1, 0.3).r2, {1.0}), 0.0);
  EXPECT_LE(linf(line_r2(3, 0.5).r2, {1.75, 1.5, 1.0}), 1e-15);
}

TEST(Line, ResultInvariants) {
  const auto r = line_r2(7, 0.6);
  EXPECT_NEAR(std::accumulate(r.r1.begin(), r.r1.end(), 0.0), 1.0, 1e-12);
  for (double v : r.r2) EXPECT_GE(v, 1.0);
  EXPECT_EQ(r.spec, StructureSpec::line(7));
}

TEST(AttachedNode, Examples) {
  const auto a = line_with_attached_node_r2(5, 3, 0.5);
  EXPECT_NEAR(a.r2[2], 2.25, 1e-15);
  EXPECT_NEAR(a.r2[3], 1.5, 1e-15);
  EXPECT_EQ(a.r2[5], 1.0);
  expect_all(line_with_attached_node_r2(5, 3, 1e-12).r2, 1.0, 1e-11);

  const auto b = line_with_attached_node_r2(2, 2, 0.85);
  EXPECT_NEAR(b.r2[1], 1.85, 1e-15);
  EXPECT_NEAR(b.r2[0], 2.5725, 1e-15);
  EXPECT_NEAR(b.normalizer, 5.4225, 1e-12);
}

TEST(Complete, Examples) {
  expect_all(complete_r2(5, 0.85).r2, 1.0 / 0.15, 1e-12);
  EXPECT_NEAR(complete_r2(5, 0.85).r2[0], 6.67, 5e-3);
  expect_all(complete_r2(2, 0.5).r2, 2.0, 0.0);
  expect_all(complete_r2(10, 1e-12).r2, 1.0, 1e-11);
  expect_all(complete_r2(10, 0.4).r1, 0.1, 1e-15);
}

TEST(Complete, SizeInvariance) {
  for (std::size_t n = 2; n <= 60; ++n) EXPECT_EQ(complete_r2(n, 0.7).r2[0], complete_r2(2, 0.7).r2[0]);
}

TEST(CompleteWithOutLink, Examples) {
  const auto r = complete_with_outlink_r2(5, 0.85);
  EXPECT_NEAR(r.r2[0], 24.25 / 4.36, 1e-12);
  EXPECT_NEAR(r.r2[1], 23.4 / 4.36, 1e-12);
  EXPECT_GT(r.r2[0], r.r2[1]);
  EXPECT_EQ(r.r2.size(), 6u);
  expect_all(complete_with_outlink_r2(7, 1e-12).r2, 1.0, 1e-11);
}

TEST(CompleteWithOutLink, OutLinkingNodeRanksHighest) {
  for (std::size_t n = 2; n <= 100; ++n) {
    for (int k = 1; k <= 99; ++k) {
      const auto r = complete_with_outlink_r2(n, k / 100.0);
      for (std::size_t i = 1; i < n; ++i) ASSERT_GT(r.r2[0], r.r2[i]) << n << ' ' << k;
    }
  }
}

TEST(CompleteToLine, Examples) {
  const StructureSpec spec{StructureKind::CompleteToLine, 5, 5, 3};
  EXPECT_LE(linf(complete_to_line_r2(5, 5, 3, 0.85).r2, dense_r2(spec, 0.85)), 1e-9);
  const auto j1 = complete_to_line_r2(5, 4, 1, 0.6);
  const auto pure = line_r2(5, 0.6);
  EXPECT_GT(j1.r2[0], pure.r2[0]);
  for (std::size_t i = 1; i < 5; ++i) EXPECT_EQ(j1.r2[i], pure.r2[i]);
  expect_all(complete_to_line_r2(5, 5, 3, 1e-12).r2, 1.0, 1e-11);
}

TEST(LineToComplete, Examples) {
  const StructureSpec spec{StructureKind::LineToComplete, 5, 5, 3};
  const auto r = line_to_complete_r2(5, 5, 3, 0.85);
  EXPECT_LE(linf(r.r2, dense_r2(spec, 0.85)), 1e-9);
  const auto pure = line_r2(5, 0.85);
  for (std::size_t i = 3; i <= 5; ++i) EXPECT_EQ(r.r2[i - 1], pure.r2[i - 1]);
  EXPECT_LE(linf(line_to_complete_r2(1, 4, 1, 0.5).r2,
                 dense_r2({StructureKind::LineToComplete, 1, 4, 1}, 0.5)),
            1e-12);
}

TEST(LineToComplete, LowerLineNodesLose) {
  for (std::size_t nl = 2; nl <= 12; ++nl) {
    for (std::size_t j = 2; j <= nl; ++j) {
      for (double c : {0.1, 0.5, 0.9}) {
        const auto r = line_to_complete_r2(nl, 3, j, c);
        const auto pure = line_r2(nl, c);
        for (std::size_t i = 1; i < j; ++i) EXPECT_LT(r.r2[i - 1], pure.r2[i - 1]);
      }
    }
  }
}

TEST(SharedNode, Examples) {
  EXPECT_LE(linf(line_sharing_node_r2(10, 10, 6, 0.85).r2, dense_r2(StructureSpec::sharing(10, 10, 6), 0.85)),
            1e-9);
  EXPECT_LE(linf(line_sharing_node_r2(4, 2, 1, 0.85).r2, dense_r2(StructureSpec::sharing(4, 2, 1), 0.85)),
            1e-9);
  expect_all(line_sharing_node_r2(10, 10, 6, 1e-12).r2, 1.0, 1e-11);
}

TEST(SharedNode, AnalyticNormalizer) {
  for (std::size_t nl = 1; nl <= 15; ++nl) {
    for (std::size_t ng = 2; ng <= 8; ++ng) {
      for (std::size_t j = 1; j <= nl; ++j) {
        for (double c : {0.05, 0.5, 0.95}) {
          const auto r = line_sharing_node_r2(nl, ng, j, c);
          const double sum = std::accumulate(r.r2.begin(), r.r2.end(), 0.0);
          EXPECT_NEAR(r.normalizer, sum, 1e-9 * sum);
        }
      }
    }
  }
}

TEST(BacklinkInverse, Examples) {
  const auto a = line_with_backlink_inverse(5, 0.5);
  EXPECT_NEAR(a(0, 0), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(a(0, 1), 2.0 / 3.0, 1e-15);
  const double s = 1.0 / (1.0 - 0.85 * 0.85);
  const auto b = line_with_backlink_inverse(2, 0.85);
  EXPECT_NEAR(b(0, 0), s, 1e-12);
  EXPECT_NEAR(b(0, 1), s * 0.85, 1e-12);
  EXPECT_NEAR(b(1, 0), s * 0.85, 1e-12);
  EXPECT_NEAR(b(1, 1), s, 1e-12);
  EXPECT_LE(max_abs_diff(b, complete_graph_inverse(2, 0.85)), 1e-12);
}

TEST(BacklinkInverse, MatchesDenseInverse) {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (double c : {0.1, 0.5, 0.85, 0.95}) {
      const auto inv = invert(system_matrix(generate({StructureKind::LineWithBacklink, n, 0, 0}), c));
      EXPECT_LE(max_abs_diff(line_with_backlink_inverse(n, c), inv), 1e-9);
      if (n >= 3) {
        const auto line = invert(system_matrix(generate(StructureSpec::line(n)), c));
        for (std::size_t r = 2; r < n; ++r) {
          for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(inv(r, k), line(r, k), 1e-12);
        }
      }
    }
  }
}

TEST(ClosedForms, LineSplitIsTwoLines) {
  for (double c : {0.2, 0.85}) {
    const auto r = evaluate({StructureKind::LineSplit, 5, 0, 2}, c);
    EXPECT_LE(linf(r.r2, {1 + c, 1, 1 + c + c * c, 1 + c, 1}), 1e-15);
  }
}

TEST(ClosedForms, InvalidParams) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::SelfLoop;
  };
  EXPECT_EQ(code([] { line_r2(0, 0.5); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code([] { complete_r2(1, 0.5); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code([] { line_to_complete_r2(4, 3, 5, 0.5); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code([] { line_with_backlink_inverse(1, 0.5); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code([] { line_sharing_node_r2(4, 3, 2, 1.0); }), ErrorCode::COutOfRange);
}

// Every kind, every valid j, compared with a dense solve.
TEST(ClosedForms, OracleGrid) {
  for (int k = 0; k <= static_cast<int>(StructureKind::LineSharingNodeWithComplete); ++k) {
    for (std::size_t nl = 0; nl <= 20; ++nl) {
      for (std::size_t ng = 0; ng <= 20; ng += (ng < 6 ? 1 : 7)) {
        for (std::size_t j = 0; j <= nl; ++j) {
          const StructureSpec spec{static_cast<StructureKind>(k), nl, ng, j};
          try {
            validate(spec);
          } catch (const Error&) {
            continue;
          }
          for (double c : {0.05, 0.3, 0.5, 0.85, 0.95}) {
            const auto r = evaluate(spec, c);
            ASSERT_LE(linf(r.r2, dense_r2(spec, c)), 1e-9)
                << to_string(spec.kind) << ' ' << nl << ' ' << ng << ' ' << j << ' ' << c;
            const double sum = std::accumulate(r.r2.begin(), r.r2.end(), 0.0);
            ASSERT_NEAR(r.normalizer, sum, 1e-9 * sum);
            ASSERT_NEAR(std::accumulate(r.r1.begin(), r.r1.end(), 0.0), 1.0, 1e-12);
            for (double v : r.r2) ASSERT_GE(v, 1.0 - 1e-12);
          }
        }
      }
    }
  }
}
