#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "render.hpp"
#include "upse/checker.hpp"
#include "upse/constructions.hpp"
#include "upse/embedder.hpp"
#include "upse/error.hpp"
#include "upse/io.hpp"

namespace upse::cli {
namespace {

void report(std::ostream& err, std::string_view kind, const std::string& message) {
  err << nlohmann::ordered_json{{"error", kind}, {"message", message}}.dump() << '\n';
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    io::write_file(path, content);
  }
}

std::optional<std::uint64_t> env_budget() {
  const char* raw = std::getenv("UPSE_NODE_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19) {
    throw Error(ErrorKind::InvalidArgument, "UPSE_NODE_BUDGET must be a non-negative integer");
  }
  return std::stoull(text);
}

struct Inputs {
  Digraph graph;
  PointSet points;
};

Inputs load(const std::string& graph_file, const std::string& points_file) {
  return {io::parse_graph(io::read_file(graph_file)), io::parse_points(io::read_file(points_file))};
}

int cmd_embed(const std::string& graph_file, const std::string& points_file, const std::string& out_file,
              std::ostream& out) {
  const auto in = load(graph_file, points_file);
  const Mapping m = embed_switch_tree(in.graph, in.points);
  if (!verify_upse(in.graph, in.points, m).empty()) {
    throw Error(ErrorKind::NotAValidUPSE, "embedder output failed verification");
  }
  emit(out_file, io::mapping_to_json(in.graph, m), out);
  return kOk;
}

int cmd_decide(const std::string& graph_file, const std::string& points_file, bool prune,
               std::optional<std::uint64_t> budget, const std::string& out_file, std::ostream& out) {
  const auto in = load(graph_file, points_file);
  SolverOptions opts;
  opts.use_consecutive_pruning = prune;
  opts.node_budget = budget ? budget : env_budget();
  const SolverResult r = decide_upse(in.graph, in.points, opts);
  const std::string doc = io::solver_result_to_json(in.graph, r);
  out << doc;
  if (!out_file.empty()) io::write_file(out_file, doc);
  switch (r.outcome) {
    case SolverOutcome::Embeddable: return kOk;
    case SolverOutcome::NotEmbeddable: return kNegative;
    case SolverOutcome::BudgetExhausted: return kBudget;
  }
  return kNegative;
}

int cmd_verify(const std::string& graph_file, const std::string& points_file,
               const std::string& mapping_file, std::ostream& out) {
  const auto in = load(graph_file, points_file);
  const Mapping m = io::parse_mapping(io::read_file(mapping_file), in.graph);
  const auto violations = verify_upse(in.graph, in.points, m);
  if (violations.empty()) {
    out << "{\"valid\": true}\n";
    return kOk;
  }
  out << "{\"valid\": false, \"violations\": " << io::violations_to_json(in.graph, violations) << "}\n";
  return kNegative;
}

int cmd_render(const std::string& graph_file, const std::string& points_file,
               const std::string& mapping_file, const std::string& out_file, const RenderSpec& spec,
               std::ostream& out) {
  const auto in = load(graph_file, points_file);
  std::optional<Mapping> m;
  if (!mapping_file.empty()) {
    m = io::parse_mapping(io::read_file(mapping_file), in.graph);
    if (in.graph.vertex_count() != in.points.size()) {
      throw Error(ErrorKind::SizeMismatch, "graph and point set differ in size");
    }
  }
  emit(out_file, render_svg(in.graph, in.points, m, spec), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upward planar straight-line embeddings into point sets", "upse"};
  app.require_subcommand(1);
  int status = kOk;

  std::string graph_file, points_file, mapping_file, out_file;

  auto* embed = app.add_subcommand("embed", "Embed a switch tree into a convex point set");
  embed->add_option("graph", graph_file, "Graph JSON")->required();
  embed->add_option("points", points_file, "Point set JSON")->required();
  embed->add_option("out", out_file, "Mapping JSON to write ('-' for stdout)")->required();
  embed->callback([&] { status = cmd_embed(graph_file, points_file, out_file, out); });

  bool prune = false;
  std::optional<std::uint64_t> budget;
  auto* decide = app.add_subcommand("decide", "Decide by exhaustive search whether an embedding exists");
  decide->add_option("graph", graph_file, "Graph JSON")->required();
  decide->add_option("points", points_file, "Point set JSON")->required();
  decide->add_flag("--prune", prune, "Consecutive-subtree pruning (trees on convex sets)");
  decide->add_option("--budget", budget, "Maximum number of search nodes (default: $UPSE_NODE_BUDGET)");
  decide->add_option("--out", out_file, "Also write the result JSON here");
  decide->callback([&] { status = cmd_decide(graph_file, points_file, prune, budget, out_file, out); });

  auto* verify = app.add_subcommand("verify", "Check a mapping against the embedding conditions");
  verify->add_option("graph", graph_file, "Graph JSON")->required();
  verify->add_option("points", points_file, "Point set JSON")->required();
  verify->add_option("mapping", mapping_file, "Mapping JSON")->required();
  verify->callback([&] { status = cmd_verify(graph_file, points_file, mapping_file, out); });

  auto* generate = app.add_subcommand("generate", "Write a named instance");
  generate->require_subcommand(1);
  std::size_t n = 0, k = 0;
  std::int64_t bound = 0;
  std::vector<std::int64_t> items;
  std::string bundle_graph, bundle_points;

  auto* gen_tree = generate->add_subcommand("binucci-tree", "Three-path counterexample tree");
  gen_tree->add_option("--n", n, "Path length (odd, >= 5)")->required();
  gen_tree->add_option("-o,--out", out_file, "Output file (default: stdout)");
  gen_tree->callback([&] { emit(out_file, io::graph_to_json(gen_binucci_tree(n)), out); });

  auto* gen_points = generate->add_subcommand("binucci-points", "Interleaved convex point set");
  gen_points->add_option("--n", n, "Path length (odd, >= 5)")->required();
  gen_points->add_option("-o,--out", out_file, "Output file (default: stdout)");
  gen_points->callback([&] { emit(out_file, io::points_to_json(gen_binucci_pointset(n)), out); });

  auto* gen_kswitch = generate->add_subcommand("kswitch", "Tree whose longest directed path is k");
  gen_kswitch->add_option("--n", n, "Path length (>= 5)")->required();
  gen_kswitch->add_option("--k", k, "Longest directed path, 2 <= k <= n-1")->required();
  gen_kswitch->add_option("-o,--out", out_file, "Output file (default: stdout)");
  gen_kswitch->callback([&] { emit(out_file, io::graph_to_json(gen_kswitch_tree(n, k)), out); });

  auto* gen_gadget_cmd = generate->add_subcommand("gadget", "3-Partition reduction bundle");
  gen_gadget_cmd->add_option("--bound", bound, "Bound B")->required();
  gen_gadget_cmd->add_option("--items", items, "Comma-separated items a_1..a_3m")->required()->delimiter(',');
  gen_gadget_cmd->add_option("-o,--out", out_file, "Bundle output file (default: stdout)");
  gen_gadget_cmd->add_option("--graph", bundle_graph, "Also write the graph JSON here");
  gen_gadget_cmd->add_option("--points", bundle_points, "Also write the point set JSON here");
  gen_gadget_cmd->callback([&] {
    const GadgetInstance g = gen_gadget(PartitionInstance{bound, items});
    if (!bundle_graph.empty()) io::write_file(bundle_graph, io::graph_to_json(g.graph));
    if (!bundle_points.empty()) io::write_file(bundle_points, io::points_to_json(g.points));
    emit(out_file, io::bundle_to_json(g), out);
  });

  RenderSpec spec;
  auto* render = app.add_subcommand("render", "Draw a point set or an embedding as SVG");
  render->add_option("graph", graph_file, "Graph JSON")->required();
  render->add_option("points", points_file, "Point set JSON")->required();
  render->add_option("--mapping", mapping_file, "Mapping JSON (omit for a points-only plot)");
  render->add_option("-o,--out", out_file, "SVG output file (default: stdout)");
  render->add_option("--width", spec.width, "Canvas width")->capture_default_str();
  render->add_option("--height", spec.height, "Canvas height")->capture_default_str();
  render->add_option("--margin", spec.margin, "Canvas margin")->capture_default_str();
  render->add_option("--radius", spec.radius, "Point radius")->capture_default_str();
  render->add_option("--arrow", spec.arrow, "Arrowhead length")->capture_default_str();
  render->add_flag("--labels", spec.labels, "Print vertex labels (point indices without a mapping)");
  render->callback([&] { status = cmd_render(graph_file, points_file, mapping_file, out_file, spec, out); });

  std::vector<const char*> argv{"upse"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report(err, "UsageError", e.what());
    return kInputError;
  } catch (const Error& e) {
    report(err, to_string(e.kind()), e.what());
    return kInputError;
  } catch (const std::exception& e) {
    report(err, "Internal", e.what());
    return kInputError;
  }
  return status;
}

}  // namespace upse::cli
