#pragma once

#include <cstddef>
#include <vector>

#include "pagerank/graph.hpp"

namespace pagerank {

enum class RankVariant { R1, R2, R3 };

const char* to_string(RankVariant v) noexcept;
/// Accepts "r1", "r2", "r3". Throws InvalidVariant otherwise.
RankVariant parse_variant(std::string_view name);

struct RankVector {
  RankVariant variant;
  double c;
  std::vector<double> values;
  WeightVector weight;
  std::size_t iterations = 0;  // 0 for direct solves
};

enum class Engine { Power, DenseLU, Neumann };

/// Accepts "power", "lu", "neumann".
Engine parse_engine(std::string_view name);

struct SolveOptions {
  double tol = 1e-12;
  std::size_t max_iter = 100000;
  Engine engine = Engine::Power;
};

/// Normalized PageRank, the unit-L1 fixed point of
///   x -> c (A + g u^T)^T x + (1 - c) u e^T x
/// where g marks dangling nodes. Power iteration from u; the DenseLU and
/// Neumann engines normalize the corresponding R2 instead.
RankVector pagerank_r1(const DirectedGraph& g, double c, const WeightVector& w,
                       const SolveOptions& opts = {});

/// Non-normalized PageRank, (I - c A^T)^-1 n u. The Power engine rescales R1:
/// R2 = n R1 / (1 - c * sum of R1 over non-dangling nodes).
RankVector pagerank_r2(const DirectedGraph& g, double c, const WeightVector& w,
                       const SolveOptions& opts = {});

/// R1 ||v||_1 / d with d = 1 - (grand sum of c A^T R1).
RankVector pagerank_r3(const DirectedGraph& g, double c, const WeightVector& w,
                       const SolveOptions& opts = {});

RankVector solve(const DirectedGraph& g, double c, const WeightVector& w, RankVariant variant,
                 const SolveOptions& opts = {});

/// R2 or R3 divided by its L1 sum, tagged R1.
RankVector normalize(const RankVector& r);

}  // namespace pagerank
