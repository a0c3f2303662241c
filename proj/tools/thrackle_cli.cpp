#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thrackle/construct.hpp"
#include "thrackle/errors.hpp"
#include "thrackle/graph.hpp"
#include "thrackle/io.hpp"
#include "thrackle/search.hpp"
#include "thrackle/svg.hpp"
#include "thrackle/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace thrackle;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Empty path means standard output (with a trailing newline for terminals).
void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

const char* status_name(ThrackleStatus s) {
  switch (s) {
    case ThrackleStatus::Thrackle: return "thrackle";
    case ThrackleStatus::NotThrackle: return "not_thrackle";
    case ThrackleStatus::DegenerateGeometry: return "degenerate_geometry";
  }
  return "unknown";
}

int run_classify(const std::string& path) {
  const Graph g = parse_graph_text(read_file(path));
  const bool tree = is_tree(g);
  ordered_json j;
  j["vertices"] = g.n;
  j["edges"] = g.edges.size();
  j["is_tree"] = tree;
  j["is_caterpillar"] = tree && is_caterpillar(g);
  j["spider"] = nullptr;
  if (tree) {
    if (const auto spider = classify_spider(g))
      j["spider"] = ordered_json{{"center", spider->center}, {"leg_lengths", spider->leg_lengths}};
  }
  j["is_augmented_caterpillar"] = tree && is_augmented_caterpillar(g);
  j["contains_spider_3_3"] = tree && contains_spider_3_3(g);
  j["straight_line_thrackleable"] = is_straight_line_thrackleable(g);
  j["edge_bound_holds"] = edge_bound_holds(g);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& path, double eps_side) {
  Tolerances tol;
  tol.side = eps_side;
  const DrawingDocument doc = deserialize(read_file(path));
  const VerificationReport rep = verify_thrackle(doc, tol);
  const Graph& g = doc.kind == DrawingKind::Spherical ? doc.spherical.graph : doc.planar.graph;
  ordered_json j;
  j["kind"] = doc.kind == DrawingKind::Spherical ? "spherical" : "planar";
  j["vertices"] = g.n;
  j["edges"] = g.edges.size();
  j["status"] = status_name(rep.status);
  j["is_thrackle"] = rep.is_thrackle;
  j["is_general_position"] = rep.is_general_position;
  j["pairs_checked"] = rep.pairs.size();
  j["violations"] = rep.violations;
  std::cout << j.dump(2) << "\n";
  return rep.is_thrackle ? 0 : 1;
}

int run_audit(const std::string& path, double eps_side, bool force) {
  Tolerances tol;
  tol.side = eps_side;
  const DrawingDocument doc = deserialize(read_file(path));
  if (doc.kind != DrawingKind::Spherical)
    throw Error("audit needs a spherical drawing; lift or construct one first");
  LemmaAuditReport rep;
  try {
    rep = lemma_audit(doc.spherical, force, tol);
  } catch (const NotAThrackleError& e) {
    std::cerr << "audit: " << e.what() << " (rerun with --force to audit anyway)\n";
    return 1;
  }
  ordered_json j;
  j["all_pass"] = rep.all_pass();
  j["adjacent_long_violations"] = rep.adjacent_long_violations;
  j["separation_count_violations"] = rep.separation_count_violations;
  j["long_terminal_violations"] = rep.long_terminal_violations;
  j["short_path_violations"] = rep.short_path_violations;
  j["separating_edge_count"] = rep.separating_edge_count;
  j["pointed"] = rep.pointed;
  std::cout << j.dump(2) << "\n";
  return rep.all_pass() ? 0 : 1;
}

int run_construct(const std::string& kind, const std::string& graph_path, int n,
                  const std::string& out_path) {
  DrawingDocument doc;
  if (kind == "star-cycle") {
    doc = document_of(construct_star_polygon_cycle(n), {{"generator", "star-cycle"}});
  } else if (kind == "caterpillar") {
    if (graph_path.empty()) throw Error("construct caterpillar needs a graph file");
    const Graph t = parse_graph_text(read_file(graph_path));
    doc = document_of(construct_caterpillar_straight_line(t), {{"generator", "caterpillar"}});
  } else if (kind == "spider32") {
    doc = document_of(construct_spider_3_2_gc(), {{"generator", "spider32"}});
  } else {
    throw Error("unknown construction `" + kind +
                "`; expected star-cycle, caterpillar, or spider32");
  }
  write_output(out_path, serialize(doc));
  return 0;
}

int run_search(const std::string& graph_path, const SearchConfig& cfg,
               const std::string& out_path) {
  const Graph g = parse_graph_text(read_file(graph_path));
  const std::string report = nonexistence_report(g, cfg);
  write_output(out_path, report);
  return nlohmann::json::parse(report).at("success").get<bool>() ? 0 : 1;
}

int run_render(const std::string& path, std::string projection, const std::string& out_path) {
  const DrawingDocument doc = deserialize(read_file(path));
  if (projection.empty())
    projection = doc.kind == DrawingKind::Planar ? "planar" : "orthographic:z";
  write_output(out_path, render_svg(doc, parse_projection(projection)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"great-circle thrackle toolkit"};
  app.require_subcommand(1);
  app.footer("exit status: 0 affirmative verdict, 1 negative verdict, 2 bad input");

  std::string classify_path;
  auto* classify = app.add_subcommand("classify", "report tree-class membership of a graph");
  classify->add_option("graph", classify_path, "graph file: `n` line, then one `u v` per edge")
      ->required();

  std::string verify_path, audit_path, render_path, search_path;
  std::string construct_kind, construct_graph;
  std::string out_path, projection;
  double eps_side = 1e-9;
  bool force_audit = false;
  int star_n = 5;
  SearchConfig cfg;

  auto* verify = app.add_subcommand("verify", "check that a drawing is a thrackle");
  verify->add_option("drawing", verify_path, "drawing document (JSON)")->required();
  verify->add_option("--eps-side", eps_side, "side-of-circle tolerance in radians");

  auto* audit = app.add_subcommand("audit", "check the structural lemmas on a spherical thrackle");
  audit->add_option("drawing", audit_path, "drawing document (JSON)")->required();
  audit->add_option("--eps-side", eps_side, "side-of-circle tolerance in radians");
  audit->add_flag("--force", force_audit, "audit even when the drawing fails verification");

  auto* construct = app.add_subcommand("construct", "emit a drawing from a known construction");
  construct->add_option("kind", construct_kind, "star-cycle | caterpillar | spider32")->required();
  construct->add_option("graph", construct_graph, "caterpillar graph file (kind caterpillar)");
  construct->add_option("--n", star_n, "cycle length for star-cycle (odd, >= 3)");
  construct->add_option("--out", out_path, "output file (default: standard output)");

  auto* search = app.add_subcommand("search", "hunt for a great-circle thrackle of a tree");
  search->add_option("graph", search_path, "tree graph file")->required();
  search->add_option("--restarts", cfg.restarts, "independent annealing restarts");
  search->add_option("--iters", cfg.iterations, "iterations per restart");
  search->add_option("--seed", cfg.seed, "random seed");
  search->add_option("--margin", cfg.margin, "penalty margin in radians");
  search->add_option("--eps-side", cfg.tolerances.side, "side-of-circle tolerance in radians");
  search->add_option("--out", out_path, "report file (default: standard output)");

  auto* render = app.add_subcommand("render", "render a drawing document to SVG");
  render->add_option("drawing", render_path, "drawing document (JSON)")->required();
  render->add_option("--projection", projection,
                     "planar | orthographic:A with A in x, y, z, -x, -y, -z");
  render->add_option("--out", out_path, "output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(classify_path);
    if (app.got_subcommand(verify)) return run_verify(verify_path, eps_side);
    if (app.got_subcommand(audit)) return run_audit(audit_path, eps_side, force_audit);
    if (app.got_subcommand(construct))
      return run_construct(construct_kind, construct_graph, star_n, out_path);
    if (app.got_subcommand(search)) return run_search(search_path, cfg, out_path);
    if (app.got_subcommand(render)) return run_render(render_path, projection, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
