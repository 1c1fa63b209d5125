// cdc: command-line front end for the reduced line graph search.
//
// Exit codes: 0 success, 1 precondition or verification failure, 2 usage.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cdc/dynamics.hpp"
#include "cdc/halfedge.hpp"
#include "cdc/projection.hpp"
#include "cdc/serialize.hpp"

namespace {

using namespace cdc;

struct Failure {
  int code;
  std::string kind;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{1, "io", "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_graph6(const std::string& path, const std::string& text) {
  if (path.ends_with(".g6")) return true;
  if (path.ends_with(".txt") || path.ends_with(".edges")) return false;
  const std::string first = text.substr(0, text.find('\n'));
  return !first.empty() && first.find_first_of(" \t=#") == std::string::npos &&
         first.find_first_not_of("0123456789") != std::string::npos;
}

Graph load_graph(const std::string& spec) {
  if (spec.starts_with("named:")) return generate_named(spec);
  if (std::filesystem::exists(spec)) {
    const std::string text = read_file(spec);
    return looks_like_graph6(spec, text) ? parse_graph6(text) : parse_edge_list(text);
  }
  const auto& names = named_graphs();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return generate_named(spec);
  throw Failure{1, "input", "no file or named graph called '" + spec + "'"};
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Failure{1, "io", "cannot write " + out_path};
  out << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

struct Options {
  std::string graph;
  std::uint64_t seed = 0;
  int max_restarts = 64;
  long long max_flips = 1'000'000;
  int depth = 8;
  int enumerate_threshold = 24;
  int threads = 1;
  std::string out;
  std::string format = "json";
  std::string cover;
  std::string trace;
  std::string layer = "l2";
  std::string labeling;
  bool only_free = false;
  bool full = false;
};

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.seed = o.seed;
  cfg.max_restarts = o.max_restarts;
  cfg.max_flips_per_attempt = o.max_flips;
  cfg.resolution_depth = o.depth;
  cfg.enumerate_threshold = o.enumerate_threshold;
  cfg.threads = o.threads;
  cfg.validate();
  return cfg;
}

int cmd_info(const Options& o) {
  const Graph g = load_graph(o.graph);
  Json j;
  j["graph6"] = to_graph6(g);
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["report"] = to_json(structural_report(g));
  emit(o.out, json_text(j));
  return 0;
}

int cmd_build(const Options& o) {
  const Graph g = load_graph(o.graph);
  const ReducedStructure rs = build_reduced(g, {.check_invariants = false});
  const AuditReport audit = audit_reduced(rs);
  if (o.format == "dot") {
    static const char* kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
    DotDecorations deco;
    deco.name = "L2";
    for (const ReducedClique& c : rs.cliques)
      for (int id : c.cycle_edges) deco.edge_color[rs.l2.edge(id)] = kPalette[c.id % 8];
    emit(o.out, to_dot(rs.l2, deco));
  } else {
    Json j;
    j["l2_vertices"] = rs.l2.vertex_count();
    j["l2_edges"] = rs.l2.edge_count();
    j["cliques"] = rs.clique_count();
    j["removed_triangles"] = rs.removed_triangles.size();
    j["double_line_edges"] = rs.double_line_edge_count;
    j["audit"] = to_json(audit);
    if (o.full) j["structure"] = to_json(rs);
    emit(o.out, json_text(j));
  }
  return audit.ok() ? 0 : 1;
}

int cmd_search(const Options& o) {
  const Graph g = load_graph(o.graph);
  const CdcCertificate cert = pipeline(g, search_config(o));
  if (!o.trace.empty()) {
    auto rs = std::make_shared<const ReducedStructure>(build_reduced(g));
    emit(o.trace, trace_to_jsonl(search_cdc_labeling(rs, search_config(o)).trace));
  }
  emit(o.out, json_text(to_json(cert)));
  return cert.valid_cdc ? 0 : 1;
}

int cmd_enumerate(const Options& o) {
  const Graph g = load_graph(o.graph);
  const ReducedStructure rs = build_reduced(g);
  const int m = rs.clique_count();
  std::string text = enumeration_csv_header() + "\n";
  const EnumerationSummary sum = enumerate_labelings(
      rs, {o.enumerate_threshold, o.only_free, o.threads},
      [&](const EnumRecord& r) { text += enumeration_csv_row(r, m) + "\n"; });
  text += "# summary " + to_json(sum, m).dump() + "\n";
  emit(o.out, text);
  return 0;
}

int cmd_anneal(const Options& o) {
  const Graph g = load_graph(o.graph);
  auto rs = std::make_shared<const ReducedStructure>(build_reduced(g));
  const SearchOutcome outcome = anneal(rs, AnnealingConfig::defaults(), o.seed);
  const Labeling lab = reduce_type_b(outcome.labeling);
  CdcCertificate cert = certify_labeling(lab);
  cert.seed = o.seed;
  cert.stats = CertificateStats{std::string(to_string(outcome.status)), 0, 0, outcome.flips_applied, 1};
  Json j;
  Json trace = Json::array();
  for (const TraceEntry& t : outcome.trace) trace.push_back(to_json(t));
  j["trace"] = trace;
  j["certificate"] = to_json(cert);
  emit(o.out, json_text(j));
  return cert.valid_cdc ? 0 : 1;
}

int cmd_verify(const Options& o) {
  const Graph g = load_graph(o.graph);
  const WalkCover wc = parse_cover_json(read_file(o.cover));
  const CdcCertificate cert = verify_cdc(g, wc);
  emit(o.out, json_text(to_json(cert)));
  return cert.valid_cdc ? 0 : 1;
}

int cmd_halfedge(const Options& o) {
  const Graph g = load_graph(o.graph);
  const HalfEdgeStructure hes = build_half_edge(g);
  const ContractedStructure contracted = contract_pairs(hes);
  const EquivalenceReport rep = equivalence_check(hes, contracted, build_reduced(g));
  Json j;
  j["pairs"] = hes.pairs.size();
  j["half_edges"] = hes.half_edge_count();
  j["connections"] = 4 * hes.crossings.size();
  j["report"] = to_json(rep);
  emit(o.out, json_text(j));
  return rep.ok ? 0 : 1;
}

int cmd_export_dot(const Options& o) {
  const Graph g = load_graph(o.graph);
  if (o.layer == "g") {
    emit(o.out, to_dot(g));
    return 0;
  }
  auto rs = std::make_shared<const ReducedStructure>(build_reduced(g));
  std::optional<CycleSet> cs;
  if (!o.labeling.empty()) cs = extract_cycles(labeling_from_hex(rs, o.labeling));
  static const char* kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  DotDecorations deco;
  if (o.layer == "lg") {
    deco.name = "LG";
    // An lg edge is an l2 vertex; color it by its cycle when a labeling is given.
    if (cs)
      for (int e = 0; e < rs->line.lg.edge_count(); ++e)
        deco.edge_color[rs->line.lg.edge(e)] = kPalette[cs->vertex_cycle[static_cast<std::size_t>(e)] % 8];
    emit(o.out, to_dot(rs->line.lg, deco));
    return 0;
  }
  if (o.layer != "l2") throw Failure{2, "usage", "--layer must be g, lg or l2"};
  deco.name = "L2";
  std::optional<Labeling> lab;
  if (!o.labeling.empty()) lab = labeling_from_hex(rs, o.labeling);
  for (const ReducedClique& c : rs->cliques)
    for (int k = 0; k < 4; ++k) {
      const Edge e = rs->l2.edge(c.cycle_edges[static_cast<std::size_t>(k)]);
      deco.edge_color[e] = kPalette[c.id % 8];
      if (lab) deco.edge_label[e] = k % 2 == lab->bit(c.id) ? "open" : "closed";
    }
  emit(o.out, to_dot(rs->l2, deco));
  return 0;
}

void report_error(const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle double covers through label flips on the reduced order-two line graph"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "graph file (graph6 or edge list) or named graph")->required(); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output path (default stdout)"); };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "base seed");
    sub->add_option("--max-restarts", o.max_restarts)->check(CLI::PositiveNumber);
    sub->add_option("--max-flips", o.max_flips)->check(CLI::PositiveNumber);
    sub->add_option("--depth", o.depth, "resolution depth")->check(CLI::PositiveNumber);
    sub->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  };

  auto* info = app.add_subcommand("info", "structural report");
  add_graph(info);
  add_out(info);

  auto* build = app.add_subcommand("build", "reduced structure statistics and audit");
  add_graph(build);
  add_out(build);
  build->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
  build->add_flag("--full", o.full, "include the whole structure");

  auto* search = app.add_subcommand("search", "search a labeling and emit a certificate");
  add_graph(search);
  add_out(search);
  add_search(search);
  search->add_option("--trace", o.trace, "write the search trace as JSON lines");
  search->add_option("--format", o.format)->check(CLI::IsMember({"json"}));

  auto* enumerate = app.add_subcommand("enumerate", "classify every labeling");
  add_graph(enumerate);
  add_out(enumerate);
  enumerate->add_option("--enumerate-threshold", o.enumerate_threshold)->check(CLI::Range(1, 63));
  enumerate->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  enumerate->add_flag("--only-free", o.only_free, "keep intersection-free labelings only");
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"csv"}));

  auto* anneal_cmd = app.add_subcommand("anneal", "Metropolis annealing with the default schedule");
  add_graph(anneal_cmd);
  add_out(anneal_cmd);
  anneal_cmd->add_option("--seed", o.seed);

  auto* verify = app.add_subcommand("verify", "verify an externally supplied cover");
  add_graph(verify);
  add_out(verify);
  verify->add_option("--cover", o.cover, "cover JSON")->required();

  auto* halfedge = app.add_subcommand("halfedge-check", "compare the half-edge construction with the reduced structure");
  add_graph(halfedge);
  add_out(halfedge);

  auto* dot = app.add_subcommand("export-dot", "DOT export");
  add_graph(dot);
  add_out(dot);
  dot->add_option("--layer", o.layer, "g, lg or l2")->check(CLI::IsMember({"g", "lg", "l2"}));
  dot->add_option("--labeling", o.labeling, "labeling as <count>:<hex>");
  dot->add_option("--format", o.format)->check(CLI::IsMember({"dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", e.what());
    return 2;
  }

  try {
    if (*info) return cmd_info(o);
    if (*build) return cmd_build(o);
    if (*search) return cmd_search(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*anneal_cmd) return cmd_anneal(o);
    if (*verify) return cmd_verify(o);
    if (*halfedge) return cmd_halfedge(o);
    if (*dot) return cmd_export_dot(o);
  } catch (const Failure& f) {
    report_error(f.kind, f.message);
    return f.code;
  } catch (const ParseError& e) {
    report_error("parse", e.what());
    return 1;
  } catch (const PreconditionError& e) {
    report_error("precondition", e.what());
    return 1;
  } catch (const InternalError& e) {
    report_error("internal", e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error("error", e.what());
    return 1;
  }
  return 2;
}
