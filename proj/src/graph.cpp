#include "pagerank/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "pagerank/error.hpp"

namespace pagerank {

void validate(std::size_t n, const Adjacency& out_links) {
  if (out_links.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "adjacency has " + std::to_string(out_links.size()) + " rows, expected " +
                    std::to_string(n));
  }
  std::vector<char> seen(n + 1, 0);
  for (NodeId i = 1; i <= n; ++i) {
    const auto& targets = out_links[i - 1];
    for (NodeId t : targets) {
      if (t < 1 || t > n) {
        throw Error(ErrorCode::TargetOutOfRange,
                    "edge " + std::to_string(i) + " -> " + std::to_string(t) + " outside [1, " +
                        std::to_string(n) + "]",
                    i);
      }
      if (t == i) {
        throw Error(ErrorCode::SelfLoop, "node " + std::to_string(i) + " links to itself", i);
      }
      if (seen[t]) {
        throw Error(ErrorCode::DuplicateEdge,
                    "edge " + std::to_string(i) + " -> " + std::to_string(t) + " listed twice", i);
      }
      seen[t] = 1;
    }
    for (NodeId t : targets) seen[t] = 0;
  }
}

DirectedGraph::DirectedGraph(std::size_t n, Adjacency out_links) {
  if (n == 0) throw Error(ErrorCode::InvalidN, "graph needs at least one node");
  validate(n, out_links);
  out_links_ = std::move(out_links);
  for (NodeId i = 1; i <= n; ++i) {
    const auto degree = out_links_[i - 1].size();
    edge_count_ += degree;
    if (degree == 0) dangling_.push_back(i);
  }
}

DirectedGraph DirectedGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Adjacency adj(n);
  for (const auto& e : edges) {
    if (e.from < 1 || e.from > n) {
      throw Error(ErrorCode::TargetOutOfRange,
                  "source " + std::to_string(e.from) + " outside [1, " + std::to_string(n) + "]",
                  e.from);
    }
    adj[e.from - 1].push_back(e.to);
  }
  return DirectedGraph(n, std::move(adj));
}

std::span<const NodeId> DirectedGraph::out_links(NodeId node) const {
  if (node < 1 || node > size()) {
    throw Error(ErrorCode::InvalidNode, "node " + std::to_string(node) + " not in graph", node);
  }
  return out_links_[node - 1];
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (NodeId i = 1; i <= size(); ++i) {
    for (NodeId t : out_links_[i - 1]) result.push_back({i, t});
  }
  return result;
}

DirectedGraph disjoint_union(const DirectedGraph& first, const DirectedGraph& second) {
  const std::size_t offset = first.size();
  Adjacency adj;
  adj.reserve(first.size() + second.size());
  for (NodeId i = 1; i <= first.size(); ++i) {
    auto links = first.out_links(i);
    adj.emplace_back(links.begin(), links.end());
  }
  for (NodeId i = 1; i <= second.size(); ++i) {
    std::vector<NodeId> shifted;
    for (NodeId t : second.out_links(i)) shifted.push_back(t + offset);
    adj.push_back(std::move(shifted));
  }
  return DirectedGraph(offset + second.size(), std::move(adj));
}

std::uint64_t fingerprint(const DirectedGraph& g) {
  // FNV-1a over (n, degree_1, targets_1..., degree_2, ...).
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (word >> (8 * byte)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(g.size());
  for (NodeId i = 1; i <= g.size(); ++i) {
    auto links = g.out_links(i);
    mix(links.size());
    for (NodeId t : links) mix(t);
  }
  return h;
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void invalid_spec(const std::string& reason) {
  throw Error(ErrorCode::InvalidSpec, reason);
}

bool uses_line(StructureKind kind) { return kind != StructureKind::Complete && kind != StructureKind::CompleteWithOutLink; }

bool uses_complete(StructureKind kind) {
  switch (kind) {
    case StructureKind::Complete:
    case StructureKind::CompleteWithOutLink:
    case StructureKind::CompleteToLine:
    case StructureKind::LineToComplete:
    case StructureKind::LineSharingNodeWithComplete:
      return true;
    default:
      return false;
  }
}

bool uses_attach(StructureKind kind) {
  switch (kind) {
    case StructureKind::LineWithAttachedNode:
    case StructureKind::LineSplit:
    case StructureKind::CompleteToLine:
    case StructureKind::LineToComplete:
    case StructureKind::LineSharingNodeWithComplete:
      return true;
    default:
      return false;
  }
}

void add_line(Adjacency& adj, std::size_t n_line) {
  for (NodeId k = 2; k <= n_line; ++k) adj[k - 1].push_back(k - 1);
}

void add_complete(Adjacency& adj, const std::vector<NodeId>& members) {
  for (NodeId a : members) {
    for (NodeId b : members) {
      if (a != b) adj[a - 1].push_back(b);
    }
  }
}

std::vector<NodeId> id_range(NodeId first, std::size_t count) {
  std::vector<NodeId> ids(count);
  std::iota(ids.begin(), ids.end(), first);
  return ids;
}

}  // namespace

void validate(const StructureSpec& spec) {
  const auto kind = spec.kind;
  const std::string name = to_string(kind);
  if (uses_line(kind)) {
    if (spec.n_line < 1) invalid_spec(name + " needs n_line >= 1");
  } else if (spec.n_line != 0) {
    invalid_spec(name + " has no line part, n_line must be 0");
  }
  if (uses_complete(kind)) {
    if (spec.n_complete < 2) invalid_spec(name + " needs n_complete >= 2");
  } else if (spec.n_complete != 0) {
    invalid_spec(name + " has no complete part, n_complete must be 0");
  }
  if (uses_attach(kind)) {
    if (spec.attach < 1 || spec.attach > spec.n_line) {
      invalid_spec(name + " needs 1 <= attach <= n_line");
    }
  } else if (spec.attach != 0) {
    invalid_spec(name + " takes no attachment index, attach must be 0");
  }
  if (kind == StructureKind::LineWithBacklink && spec.n_line < 2) {
    invalid_spec(name + " needs n_line >= 2");
  }
  if (kind == StructureKind::LineSplit && spec.attach >= spec.n_line) {
    invalid_spec(name + " needs attach < n_line, there is no edge above the last node");
  }
}

std::size_t StructureSpec::node_count() const {
  switch (kind) {
    case StructureKind::Line:
    case StructureKind::LineWithBacklink:
    case StructureKind::LineSplit:
      return n_line;
    case StructureKind::LineWithAttachedNode:
      return n_line + 1;
    case StructureKind::Complete:
      return n_complete;
    case StructureKind::CompleteWithOutLink:
      return n_complete + 1;
    case StructureKind::CompleteToLine:
    case StructureKind::LineToComplete:
      return n_line + n_complete;
    case StructureKind::LineSharingNodeWithComplete:
      return n_line + n_complete - 1;
  }
  return 0;
}

DirectedGraph generate(const StructureSpec& spec) {
  validate(spec);
  const std::size_t n = spec.node_count();
  const std::size_t nl = spec.n_line;
  const std::size_t ng = spec.n_complete;
  const NodeId j = spec.attach;
  Adjacency adj(n);

  switch (spec.kind) {
    case StructureKind::Line:
      add_line(adj, nl);
      break;
    case StructureKind::LineWithBacklink:
      add_line(adj, nl);
      adj[0].push_back(2);
      break;
    case StructureKind::LineWithAttachedNode:
      add_line(adj, nl);
      adj[nl].push_back(j);
      break;
    case StructureKind::LineSplit:
      add_line(adj, nl);
      adj[j].clear();  // node j+1 loses its only link, to j
      break;
    case StructureKind::Complete:
      add_complete(adj, id_range(1, ng));
      break;
    case StructureKind::CompleteWithOutLink:
      add_complete(adj, id_range(1, ng));
      adj[0].push_back(ng + 1);
      break;
    case StructureKind::CompleteToLine:
      add_line(adj, nl);
      add_complete(adj, id_range(nl + 1, ng));
      adj[nl].push_back(j);
      break;
    case StructureKind::LineToComplete:
      add_line(adj, nl);
      add_complete(adj, id_range(nl + 1, ng));
      adj[j - 1].push_back(nl + 1);
      break;
    case StructureKind::LineSharingNodeWithComplete: {
      add_line(adj, nl);
      std::vector<NodeId> members{j};
      for (NodeId id = nl + 1; id < nl + ng; ++id) members.push_back(id);
      add_complete(adj, members);
      break;
    }
  }
  return DirectedGraph(n, std::move(adj));
}

const char* to_string(StructureKind kind) noexcept {
  switch (kind) {
    case StructureKind::Line: return "Line";
    case StructureKind::LineWithBacklink: return "LineWithBacklink";
    case StructureKind::LineWithAttachedNode: return "LineWithAttachedNode";
    case StructureKind::LineSplit: return "LineSplit";
    case StructureKind::Complete: return "Complete";
    case StructureKind::CompleteWithOutLink: return "CompleteWithOutLink";
    case StructureKind::CompleteToLine: return "CompleteToLine";
    case StructureKind::LineToComplete: return "LineToComplete";
    case StructureKind::LineSharingNodeWithComplete: return "LineSharingNodeWithComplete";
  }
  return "Unknown";
}

namespace {

constexpr std::pair<std::string_view, StructureKind> kKindNames[] = {
    {"line", StructureKind::Line},
    {"backlink", StructureKind::LineWithBacklink},
    {"attached", StructureKind::LineWithAttachedNode},
    {"split", StructureKind::LineSplit},
    {"complete", StructureKind::Complete},
    {"complete-out", StructureKind::CompleteWithOutLink},
    {"complete-to-line", StructureKind::CompleteToLine},
    {"line-to-complete", StructureKind::LineToComplete},
    {"share", StructureKind::LineSharingNodeWithComplete},
};

}  // namespace

StructureKind parse_structure_kind(std::string_view name) {
  for (const auto& [key, kind] : kKindNames) {
    if (key == name) return kind;
  }
  invalid_spec("unknown structure kind '" + std::string(name) + "'");
}

std::string_view short_name(StructureKind kind) noexcept {
  for (const auto& [key, k] : kKindNames) {
    if (k == kind) return key;
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

WeightVector::WeightVector(std::vector<double> raw) : raw_(std::move(raw)) {
  if (raw_.empty()) throw Error(ErrorCode::InvalidWeights, "empty weight vector");
  for (std::size_t i = 0; i < raw_.size(); ++i) {
    if (!std::isfinite(raw_[i]) || raw_[i] < 0.0) {
      throw Error(ErrorCode::InvalidWeights,
                  "weight of node " + std::to_string(i + 1) + " is negative or not finite", i + 1);
    }
    l1_ += raw_[i];
  }
  if (!(l1_ > 0.0)) throw Error(ErrorCode::ZeroVector, "all weights are zero");
}

WeightVector WeightVector::uniform(std::size_t n) {
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

WeightVector WeightVector::ones(std::size_t n) { return WeightVector(std::vector<double>(n, 1.0)); }

std::vector<double> WeightVector::normalized() const {
  std::vector<double> u(raw_);
  for (double& x : u) x /= l1_;
  return u;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

bool parse_id(std::string_view token, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what, line_no);
}

}  // namespace

DirectedGraph read_edge_list(std::string_view text) {
  std::size_t n = 0;
  bool have_header = false;
  Adjacency adj;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_ws(strip_comment(line));
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_id(tokens[1], n)) {
        parse_error(line_no, "expected header 'n <count>'");
      }
      if (n == 0) parse_error(line_no, "node count must be positive");
      adj.assign(n, {});
      have_header = true;
      continue;
    }
    std::size_t src = 0;
    std::size_t dst = 0;
    if (tokens.size() != 2 || !parse_id(tokens[0], src) || !parse_id(tokens[1], dst)) {
      parse_error(line_no, "expected '<src> <dst>'");
    }
    if (src < 1 || src > n) {
      throw Error(ErrorCode::TargetOutOfRange,
                  "source " + std::to_string(src) + " outside [1, " + std::to_string(n) + "]", src);
    }
    adj[src - 1].push_back(dst);
  }
  if (!have_header) parse_error(line_no, "missing header 'n <count>'");
  return DirectedGraph(n, std::move(adj));
}

DirectedGraph read_edge_list(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_edge_list(std::string_view(text));
}

std::string write_edge_list(const DirectedGraph& g) {
  std::string out = "n " + std::to_string(g.size()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.from);
    out += ' ';
    out += std::to_string(e.to);
    out += '\n';
  }
  return out;
}

WeightVector read_weights(std::string_view text, std::size_t n) {
  std::vector<double> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    for (auto token : split_ws(strip_comment(line))) {
      double x = 0.0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        parse_error(line_no, "bad weight '" + std::string(token) + "'");
      }
      values.push_back(x);
    }
  }
  if (values.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(n) + " weights, got " + std::to_string(values.size()));
  }
  return WeightVector(std::move(values));
}

}  // namespace pagerank
