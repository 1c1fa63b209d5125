#include "cdc/serialize.hpp"

#include <sstream>

namespace cdc {

namespace {

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

}  // namespace

Json to_json(const StructuralReport& r) {
  Json j;
  j["connected"] = r.connected;
  j["regular_degree"] = r.regular_degree ? Json(*r.regular_degree) : Json(nullptr);
  j["is_cubic"] = r.is_cubic;
  j["triangle_free"] = r.triangle_free;
  j["bridges"] = edges_json(r.bridges);
  j["girth"] = r.girth ? Json(*r.girth) : Json(nullptr);
  return j;
}

Json to_json(const AuditReport& r) {
  Json j;
  j["ok"] = r.ok();
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

Json to_json(const ReducedStructure& rs) {
  Json j;
  j["source"] = {{"vertices", rs.source.vertex_count()}, {"edges", edges_json(rs.source.edges())}};
  j["l2"] = {{"vertices", rs.l2.vertex_count()}, {"edges", edges_json(rs.l2.edges())}};
  Json cliques = Json::array();
  for (const ReducedClique& c : rs.cliques) {
    Json cj;
    cj["id"] = c.id;
    cj["source_edge"] = edge_json(c.source_edge);
    cj["cycle4"] = c.cycle4;
    cj["side_u"] = c.side_u;
    cj["side_v"] = c.side_v;
    cj["removed_pair"] = Json::array({edge_json(c.removed_pair[0]), edge_json(c.removed_pair[1])});
    cj["cycle_edges"] = c.cycle_edges;
    cliques.push_back(cj);
  }
  j["cliques"] = cliques;
  Json prov = Json::array();
  for (std::size_t x = 0; x < rs.provenance.size(); ++x) {
    const L2Origin& o = rs.provenance[x];
    prov.push_back({{"vertex", x}, {"lg_edge", o.lg_edge}, {"source_edges", o.source_edges}, {"via", o.via}});
  }
  j["provenance"] = prov;
  Json tri = Json::array();
  for (const auto& t : rs.removed_triangles) tri.push_back(t);
  j["removed_triangles"] = tri;
  j["double_line_edge_count"] = rs.double_line_edge_count;
  return j;
}

Json to_json(const CycleSet& cs) {
  Json j;
  j["count"] = cs.count();
  Json cycles = Json::array();
  for (const auto& c : cs.cycles) cycles.push_back(c);
  j["cycles"] = cycles;
  return j;
}

Json to_json(const CdcCertificate& cert) {
  Json j;
  j["graph"] = to_graph6(cert.graph);
  Json cycles = Json::array();
  for (const auto& c : cert.cycles) cycles.push_back(c);
  j["cycles"] = cycles;
  j["verdict"] = cert.valid_cdc ? "valid_cdc" : "invalid";
  Json violations = Json::array();
  for (const CdcViolation& v : cert.violations) {
    Json vj;
    vj["kind"] = v.kind;
    vj["walk"] = v.walk >= 0 ? Json(v.walk) : Json(nullptr);
    vj["edge"] = v.edge ? edge_json(*v.edge) : Json(nullptr);
    vj["message"] = v.message;
    violations.push_back(vj);
  }
  j["violations"] = violations;
  j["labeling_bits_hex"] = cert.labeling_bits_hex.empty() ? Json(nullptr) : Json(cert.labeling_bits_hex);
  j["seed"] = cert.seed ? Json(*cert.seed) : Json(nullptr);
  Json stats;
  stats["walks"] = cert.cycles.size();
  int simple = 0;
  for (bool b : cert.vertex_simple) simple += b ? 1 : 0;
  stats["vertex_simple_walks"] = simple;
  if (cert.stats) {
    stats["search_status"] = cert.stats->search_status;
    stats["type_a"] = cert.stats->type_a;
    stats["type_b"] = cert.stats->type_b;
    stats["flips"] = cert.stats->flips;
    stats["attempts"] = cert.stats->attempts;
  }
  j["stats"] = stats;
  return j;
}

Json to_json(const TraceEntry& t) {
  Json j;
  j["attempt"] = t.attempt;
  j["seed"] = t.seed;
  j["round"] = t.round;
  j["event"] = t.event;
  j["type_a"] = t.type_a;
  j["type_b"] = t.type_b;
  j["cycle_count"] = t.cycle_count;
  j["flips"] = t.flips;
  return j;
}

Json to_json(const EnumerationSummary& s, int clique_count) {
  Json j;
  j["cliques"] = clique_count;
  j["total"] = s.total;
  j["intersection_free"] = s.intersection_free;
  j["with_type_a"] = s.with_type_a;
  j["min_type_a"] = s.min_type_a;
  j["first_intersection_free"] =
      s.first_intersection_free ? Json(packed_to_hex(*s.first_intersection_free, clique_count)) : Json(nullptr);
  return j;
}

Json to_json(const EquivalenceReport& r) {
  Json j;
  j["equivalent"] = r.ok;
  j["mismatches"] = r.mismatches;
  j["bijection"] = r.bijection;
  return j;
}

std::string trace_to_jsonl(const std::vector<TraceEntry>& trace) {
  std::string out;
  for (const TraceEntry& t : trace) {
    out += to_json(t).dump();
    out += '\n';
  }
  return out;
}

std::string enumeration_csv_header() { return "bits_hex,type_a,type_b"; }

std::string enumeration_csv_row(const EnumRecord& r, int clique_count) {
  return packed_to_hex(r.bits, clique_count) + "," + std::to_string(r.type_a) + "," + std::to_string(r.type_b);
}

WalkCover parse_cover_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("cover is not valid JSON: ") + e.what(), e.byte);
  }
  const Json* walks = &j;
  if (j.is_object()) {
    if (!j.contains("cycles")) throw ParseError("cover object has no \"cycles\" field", 0);
    walks = &j["cycles"];
  }
  if (!walks->is_array()) throw ParseError("cover walks must be an array", 0);
  WalkCover wc;
  for (const Json& w : *walks) {
    if (!w.is_array()) throw ParseError("each walk must be an array of vertex ids", 0);
    std::vector<Vertex> seq;
    for (const Json& x : w) {
      if (!x.is_number_integer()) throw ParseError("walk entries must be integers", 0);
      seq.push_back(x.get<int>());
    }
    wc.walks.push_back(std::move(seq));
  }
  return wc;
}

}  // namespace cdc
