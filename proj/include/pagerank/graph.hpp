#pragma once

// Directed link graphs, the structured families used throughout the library
// (lines, complete graphs and their compositions), weight vectors and the
// edge-list text format.
//
// Node ids in the public API are 1-based. Per-node value vectors are indexed
// 0-based, so the value of node i lives at position i - 1.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pagerank {

using NodeId = std::size_t;

struct Edge {
  NodeId from;
  NodeId to;
  bool operator==(const Edge&) const = default;
};

/// Per-node ordered target lists, 1-based, as read from input.
using Adjacency = std::vector<std::vector<NodeId>>;

/// Throws SelfLoop, DuplicateEdge or TargetOutOfRange for the first offending
/// edge (nodes scanned in order, targets in list order).
void validate(std::size_t n, const Adjacency& out_links);

/// Immutable directed graph without self-loops or multi-edges.
class DirectedGraph {
 public:
  /// Validates before taking ownership.
  DirectedGraph(std::size_t n, Adjacency out_links);

  static DirectedGraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return out_links_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const NodeId> out_links(NodeId node) const;
  std::size_t out_degree(NodeId node) const { return out_links(node).size(); }
  bool is_dangling(NodeId node) const { return out_links(node).empty(); }

  /// Dangling nodes in increasing order.
  const std::vector<NodeId>& dangling() const noexcept { return dangling_; }

  /// Edges in node order, then out-link order.
  std::vector<Edge> edges() const;

  bool operator==(const DirectedGraph& other) const { return out_links_ == other.out_links_; }

 private:
  Adjacency out_links_;
  std::vector<NodeId> dangling_;
  std::size_t edge_count_ = 0;
};

/// Places `second` after `first`, renumbering its nodes by first.size().
DirectedGraph disjoint_union(const DirectedGraph& first, const DirectedGraph& second);

/// Stable 64-bit fingerprint of the node count and ordered out-link lists.
std::uint64_t fingerprint(const DirectedGraph& g);

// ---------------------------------------------------------------------------
// Structured graphs

enum class StructureKind {
  Line,
  LineWithBacklink,
  LineWithAttachedNode,
  LineSplit,
  Complete,
  CompleteWithOutLink,
  CompleteToLine,
  LineToComplete,
  LineSharingNodeWithComplete,
};

/// Parametric description of a structured graph.
///
/// Numbering: the line occupies ids 1..n_line with node k+1 linking to node k.
/// Complete-graph members follow the line (ids n_line+1..), except for
/// LineSharingNodeWithComplete where line node `attach` is itself a member and
/// the remaining n_complete-1 members get ids n_line+1..n_line+n_complete-1.
///
/// Meaning of `attach` per kind:
///   LineWithAttachedNode         line node the extra node links to
///   LineSplit                    the edge (attach+1) -> attach is removed
///   CompleteToLine               line node receiving the link from graph node 1
///   LineToComplete               line node linking to graph node 1
///   LineSharingNodeWithComplete  line node that is also a graph member
struct StructureSpec {
  StructureKind kind = StructureKind::Line;
  std::size_t n_line = 0;
  std::size_t n_complete = 0;
  std::size_t attach = 0;

  static StructureSpec line(std::size_t n_line) { return {StructureKind::Line, n_line, 0, 0}; }
  static StructureSpec complete(std::size_t n_complete) {
    return {StructureKind::Complete, 0, n_complete, 0};
  }
  static StructureSpec sharing(std::size_t n_line, std::size_t n_complete, std::size_t attach) {
    return {StructureKind::LineSharingNodeWithComplete, n_line, n_complete, attach};
  }

  /// Node count of the generated graph.
  std::size_t node_count() const;

  bool operator==(const StructureSpec&) const = default;
};

/// Throws InvalidSpec with the reason when the spec is inconsistent.
void validate(const StructureSpec& spec);

DirectedGraph generate(const StructureSpec& spec);

const char* to_string(StructureKind kind) noexcept;

/// Short CLI names: line, backlink, attached, split, complete, complete-out,
/// complete-to-line, line-to-complete, share. Throws InvalidSpec when unknown.
StructureKind parse_structure_kind(std::string_view name);
std::string_view short_name(StructureKind kind) noexcept;

// ---------------------------------------------------------------------------
// Weights

/// Nonnegative raw weights v with at least one positive entry.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> raw);

  /// Raw weights 1/n, so that ||v||_1 = 1 and u = v.
  static WeightVector uniform(std::size_t n);
  /// Raw weights 1 per node.
  static WeightVector ones(std::size_t n);

  std::size_t size() const noexcept { return raw_.size(); }
  const std::vector<double>& raw() const noexcept { return raw_; }
  double l1() const noexcept { return l1_; }
  /// u = v / ||v||_1
  std::vector<double> normalized() const;

 private:
  std::vector<double> raw_;
  double l1_ = 0.0;
};

// ---------------------------------------------------------------------------
// Edge-list format
//
//   # comment
//   n <count>
//   <src> <dst>
//
// Ids are 1-based, '#' starts a comment anywhere on a line, blank lines are
// ignored.

DirectedGraph read_edge_list(std::istream& in);
DirectedGraph read_edge_list(std::string_view text);
std::string write_edge_list(const DirectedGraph& g);

/// Whitespace-separated raw weights, '#' comments allowed. The count must
/// equal `n`.
WeightVector read_weights(std::string_view text, std::size_t n);

}  // namespace pagerank
