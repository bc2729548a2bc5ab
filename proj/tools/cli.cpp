#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "pagerank/closed_forms.hpp"
#include "pagerank/error.hpp"
#include "pagerank/graph.hpp"
#include "pagerank/perturbation.hpp"
#include "pagerank/random_walk.hpp"
#include "pagerank/sensitivity.hpp"
#include "pagerank/solver.hpp"
#include "report.hpp"

namespace pagerank::cli {

namespace {

using report::number;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_size(std::size_t n) {
  if (n > kMaxNodes) {
    throw Error(ErrorCode::InvalidParams,
                "graph has " + std::to_string(n) + " nodes, limit is " + std::to_string(kMaxNodes));
  }
}

DirectedGraph load_graph(const std::string& path) {
  auto g = read_edge_list(std::string_view(read_file(path)));
  check_size(g.size());
  return g;
}

struct StructureArgs {
  std::string kind;
  std::size_t nl = 0;
  std::size_t ng = 0;
  std::size_t j = 0;

  void add_to(CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--kind", kind,
                                "line|backlink|attached|split|complete|complete-out|"
                                "complete-to-line|line-to-complete|share");
    if (required) opt->required();
    cmd->add_option("--nl", nl, "nodes in the line part");
    cmd->add_option("--ng", ng, "nodes in the complete part");
    cmd->add_option("--j", j, "attachment index within the line");
  }

  StructureSpec spec() const {
    StructureSpec s{parse_structure_kind(kind), nl, ng, j};
    validate(s);
    check_size(s.node_count());
    return s;
  }
};

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string graph;
  double c = 0.85;
  std::string variant = "r1";
  std::string engine = "power";
  std::string weights;
  double tol = 1e-12;
  std::size_t max_iter = 100000;
};

void cmd_solve(const SolveArgs& a, std::ostream& out) {
  const auto g = load_graph(a.graph);
  const auto w = a.weights.empty() ? WeightVector::uniform(g.size())
                                   : read_weights(read_file(a.weights), g.size());
  SolveOptions opts;
  opts.engine = parse_engine(a.engine);
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  const auto r = solve(g, a.c, w, parse_variant(a.variant), opts);
  report::write_values(out, r.values, "value");
}

void cmd_generate(const StructureArgs& s, const std::string& path, std::ostream& out) {
  const auto text = write_edge_list(generate(s.spec()));
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidParams, "cannot write '" + path + "'");
  file << text;
}

void cmd_closed_form(const StructureArgs& s, double c, std::ostream& out) {
  const auto res = evaluate(s.spec(), c);
  out << "# normalizer=" << number(res.normalizer) << '\n' << "node,r2,r1\n";
  for (std::size_t k = 0; k < res.r2.size(); ++k) {
    out << k + 1 << ',' << number(res.r2[k]) << ',' << number(res.r1[k]) << '\n';
  }
}

struct SweepArgs {
  std::string graph;
  StructureArgs structure;
  std::string variant = "r1";
  std::vector<NodeId> nodes;
  double c_lo = 0.01;
  double c_hi = 0.99;
  std::size_t steps = 99;
  std::string svg;
};

void cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const auto variant = parse_variant(a.variant);
  std::string title;
  SweepRecord rec;
  if (!a.graph.empty()) {
    rec = sweep_c(load_graph(a.graph), variant, a.nodes, a.c_lo, a.c_hi, a.steps);
    title = a.graph;
  } else {
    if (a.structure.kind.empty()) {
      throw Error(ErrorCode::InvalidParams, "sweep needs --graph or --kind");
    }
    const auto spec = a.structure.spec();
    rec = sweep_c(spec, variant, a.nodes, a.c_lo, a.c_hi, a.steps);
    title = std::string(to_string(spec.kind));
  }
  title += std::string(" ") + to_string(variant) + " over c";
  report::write_sweep(out, rec);
  if (!a.svg.empty()) {
    std::ofstream file(a.svg, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidParams, "cannot write '" + a.svg + "'");
    report::write_svg(file, rec, title);
  }
}

struct CMaxArgs {
  StructureArgs structure;
  NodeId node = 0;
  double c_lo = 0.001;
  double c_hi = 0.999;
  std::size_t grid = 999;
};

void cmd_cmax(const CMaxArgs& a, std::ostream& out) {
  const auto r = find_c_max(a.structure.spec(), a.node, a.c_lo, a.c_hi, a.grid);
  out << "c_max=" << number(r.c_max) << ", max=" << number(r.value_at_max)
      << ", boundary_hit=" << (r.boundary_hit ? "true" : "false") << '\n';
}

void cmd_derivative(const StructureArgs& s, NodeId node, double c, std::ostream& out,
                    std::ostream& err) {
  const auto spec = s.spec();
  if (node < 1 || node > spec.node_count()) {
    throw Error(ErrorCode::InvalidNode, "node " + std::to_string(node) + " not in structure", node);
  }
  const auto numeric =
      dr_dc_numeric([&](double x) { return evaluate(spec, x).r2; }, c)[node - 1];
  std::optional<double> printed;
  if (spec.kind == StructureKind::Line) {
    printed = dr2_dc_line(spec.n_line, node, c);
  } else if (spec.kind == StructureKind::LineSharingNodeWithComplete &&
             (node == spec.attach || node > spec.n_line)) {
    const auto check = node == spec.attach
                           ? shared_node_derivative(spec.n_line, spec.n_complete, spec.attach, c)
                           : graph_only_derivative(spec.n_line, spec.n_complete, spec.attach, c);
    printed = check.printed;
    if (!check.agrees) err << "warning: " << check.diagnostic << '\n';
  }
  out << "node,numeric,printed\n"
      << node << ',' << number(numeric) << ',' << (printed ? number(*printed) : "") << '\n';
}

struct PerturbArgs {
  std::string mode;
  double c = 0.85;
  std::string graph;
  std::vector<NodeId> nodes;
  std::string weights;
};

void cmd_perturb(const PerturbArgs& a, std::ostream& out) {
  if (a.mode == "bound") {
    out << number(zeroing_bound(a.c)) << '\n';
    return;
  }
  if (a.graph.empty()) throw Error(ErrorCode::InvalidParams, "perturb " + a.mode + " needs --graph");
  const auto g = load_graph(a.graph);
  if (a.mode == "weights") {
    if (a.weights.empty()) throw Error(ErrorCode::InvalidParams, "perturb weights needs --weights");
    const auto cache = build_cache(g, a.c);
    const auto r = r2_from_cache(cache, g, read_weights(read_file(a.weights), g.size()));
    report::write_values(out, r.values, "r2");
    return;
  }
  if (a.nodes.empty()) throw Error(ErrorCode::InvalidParams, "perturb " + a.mode + " needs --node");
  if (a.mode == "zero") {
    report::write_values(out, zeroing_delta(g, a.c, a.nodes), "delta");
    return;
  }
  if (a.nodes.size() != 1) throw Error(ErrorCode::InvalidParams, "perturb double takes one --node");
  report::write_values(out, doubling_delta(g, a.c, a.nodes.front()), "delta");
}

void cmd_compare(double c, std::ostream& out, std::ostream& err) {
  require_damping(c);
  if (c >= 0.99) {
    err << "warning: c=" << number(c)
        << " is close to 1; I - cA^T is near-singular and R2 grows like 1/(1-c)\n";
  }
  const auto complete = generate(StructureSpec::complete(4));
  const DirectedGraph dangling(4, Adjacency(4));
  const auto w = WeightVector::uniform(4);
  SolveOptions lu;
  lu.engine = Engine::DenseLU;
  const auto r1_a = pagerank_r1(complete, c, w);
  const auto r1_b = pagerank_r1(dangling, c, w);
  const auto r2_a = pagerank_r2(complete, c, w, lu);
  const auto r2_b = pagerank_r2(dangling, c, w, lu);

  out << "# c=" << number(c) << "; complete = complete graph on 4 nodes, dangling = 4 isolated nodes\n"
      << "node,r1_complete,r1_dangling,r2_complete,r2_dangling\n";
  double r1_gap = 0.0;
  double r2_gap = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    out << k + 1 << ',' << number(r1_a.values[k]) << ',' << number(r1_b.values[k]) << ','
        << number(r2_a.values[k]) << ',' << number(r2_b.values[k]) << '\n';
    r1_gap = std::max(r1_gap, std::abs(r1_a.values[k] - r1_b.values[k]));
    r2_gap = std::max(r2_gap, std::abs(r2_a.values[k] - r2_b.values[k]));
  }
  out << "# max |r1 difference| = " << number(r1_gap) << '\n'
      << "# max |r2 difference| = " << number(r2_gap) << '\n';
}

struct WalkArgs {
  std::string graph;
  double c = 0.85;
  std::size_t walks = 100000;
  std::optional<std::uint64_t> seed;
  std::size_t max_steps = 10000;
  NodeId from = 0;
  NodeId to = 0;
};

void cmd_walk(const WalkArgs& a, std::ostream& out) {
  const auto g = load_graph(a.graph);
  const WalkConfig cfg{a.walks, *a.seed, a.max_steps};
  if (a.from != 0 || a.to != 0) {
    if (a.from == 0 || a.to == 0) {
      throw Error(ErrorCode::InvalidParams, "--from and --to must be given together");
    }
    const auto hit = hitting_probability(g, a.c, a.from, a.to, cfg);
    out << "from,to,probability,stderr\n"
        << a.from << ',' << a.to << ',' << number(hit.probability) << ','
        << number(hit.std_error) << '\n'
        << "# truncated=" << hit.truncated << '\n';
    return;
  }
  const auto est = estimate_r2(g, a.c, cfg);
  out << "node,mean,stderr\n";
  for (std::size_t k = 0; k < est.mean.size(); ++k) {
    out << k + 1 << ',' << number(est.mean[k]) << ',' << number(est.std_error[k]) << '\n';
  }
  out << "# truncated=" << est.truncated << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"PageRank variants, closed forms and sensitivity tools", "pagerank-tool"};
  app.require_subcommand(1, 1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "PageRank of an edge-list graph");
  solve_cmd->add_option("--graph", solve_args.graph, "edge-list file")->required();
  solve_cmd->add_option("--c", solve_args.c, "damping parameter");
  solve_cmd->add_option("--variant", solve_args.variant, "r1|r2|r3");
  solve_cmd->add_option("--engine", solve_args.engine, "power|lu|neumann");
  solve_cmd->add_option("--weights", solve_args.weights, "raw weight file");
  solve_cmd->add_option("--tol", solve_args.tol, "L1 change at which iteration stops");
  solve_cmd->add_option("--max-iter", solve_args.max_iter, "iteration cap");

  StructureArgs gen_args;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("generate", "write a structured graph as an edge list");
  gen_args.add_to(gen_cmd, true);
  gen_cmd->add_option("--out", gen_out, "output file (stdout when omitted)");

  StructureArgs cf_args;
  double cf_c = 0.85;
  auto* cf_cmd = app.add_subcommand("closed-form", "analytic R2 and R1 of a structured graph");
  cf_args.add_to(cf_cmd, true);
  cf_cmd->add_option("--c", cf_c, "damping parameter");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "rank as a function of c");
  sweep_cmd->add_option("--graph", sweep_args.graph, "edge-list file (solver path)");
  sweep_args.structure.add_to(sweep_cmd, false);
  sweep_cmd->add_option("--variant", sweep_args.variant, "r1|r2");
  sweep_cmd->add_option("--node", sweep_args.nodes, "node ids (all when omitted)");
  sweep_cmd->add_option("--c-lo", sweep_args.c_lo, "lowest c");
  sweep_cmd->add_option("--c-hi", sweep_args.c_hi, "highest c");
  sweep_cmd->add_option("--steps", sweep_args.steps, "grid points");
  sweep_cmd->add_option("--svg", sweep_args.svg, "also write an SVG chart");

  CMaxArgs cmax_args;
  auto* cmax_cmd = app.add_subcommand("cmax", "c maximizing a node's normalized rank");
  cmax_args.structure.add_to(cmax_cmd, true);
  cmax_cmd->add_option("--node", cmax_args.node, "node id")->required();
  cmax_cmd->add_option("--c-lo", cmax_args.c_lo, "search domain start");
  cmax_cmd->add_option("--c-hi", cmax_args.c_hi, "search domain end");
  cmax_cmd->add_option("--grid", cmax_args.grid, "grid points before refinement");

  StructureArgs der_args;
  NodeId der_node = 0;
  double der_c = 0.85;
  auto* der_cmd = app.add_subcommand("derivative", "dR2/dc of a node, printed and numeric");
  der_args.add_to(der_cmd, true);
  der_cmd->add_option("--node", der_node, "node id")->required();
  der_cmd->add_option("--c", der_c, "damping parameter");

  PerturbArgs pert_args;
  auto* pert_cmd = app.add_subcommand("perturb", "weight-vector perturbations");
  pert_cmd->add_option("mode", pert_args.mode, "bound|zero|double|weights")
      ->required()
      ->check(CLI::IsMember({"bound", "zero", "double", "weights"}));
  pert_cmd->add_option("--c", pert_args.c, "damping parameter");
  pert_cmd->add_option("--graph", pert_args.graph, "edge-list file");
  pert_cmd->add_option("--node", pert_args.nodes, "node ids");
  pert_cmd->add_option("--weights", pert_args.weights, "raw weight file");

  double cmp_c = 0.85;
  auto* cmp_cmd = app.add_subcommand("compare", "complete graph versus four dangling nodes");
  cmp_cmd->add_option("--c", cmp_c, "damping parameter");

  WalkArgs walk_args;
  auto* walk_cmd = app.add_subcommand("walk", "Monte-Carlo estimate of R2");
  walk_cmd->add_option("--graph", walk_args.graph, "edge-list file")->required();
  walk_cmd->add_option("--c", walk_args.c, "damping parameter");
  walk_cmd->add_option("--walks", walk_args.walks, "walks per start node");
  walk_cmd->add_option("--seed", walk_args.seed, "random seed")->required();
  walk_cmd->add_option("--max-steps", walk_args.max_steps, "step cap per walk");
  walk_cmd->add_option("--from", walk_args.from, "hitting probability start node");
  walk_cmd->add_option("--to", walk_args.to, "hitting probability target node");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) cmd_solve(solve_args, out);
    if (*gen_cmd) cmd_generate(gen_args, gen_out, out);
    if (*cf_cmd) cmd_closed_form(cf_args, cf_c, out);
    if (*sweep_cmd) cmd_sweep(sweep_args, out);
    if (*cmax_cmd) cmd_cmax(cmax_args, out);
    if (*der_cmd) cmd_derivative(der_args, der_node, der_c, out, err);
    if (*pert_cmd) cmd_perturb(pert_args, out);
    if (*cmp_cmd) cmd_compare(cmp_c, out, err);
    if (*walk_cmd) cmd_walk(walk_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_numerical() ? kExitNumerical : kExitUsage;
  }
  return kExitOk;
}

}  // namespace pagerank::cli
