#include "cdc/projection.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cdc/cycle_scan.hpp"

namespace cdc {

EdgeColoring project_chi(const CycleSet& cs, const ReducedStructure& rs) {
  if (static_cast<int>(cs.vertex_cycle.size()) != rs.l2.vertex_count())
    throw PreconditionError("project_chi: cycle set does not match the structure");
  return {rs.line.lg, cs.vertex_cycle, cs.cycles};
}

ColoringReport check_valid_edge_labeling(const EdgeColoring& ec, const TriangleClassification& tc) {
  const Graph& lg = ec.lg;
  ColoringReport report;
  auto color = [&](int e) { return ec.color[static_cast<std::size_t>(e)]; };
  if (static_cast<int>(ec.color.size()) != lg.edge_count()) {
    report.violations.push_back({"totality", -1, "coloring does not cover every edge"});
    return report;
  }

  for (Vertex a = 0; a < lg.vertex_count(); ++a) {
    std::map<int, int> counts;
    for (int e : lg.incident_edges(a)) ++counts[color(e)];
    const bool fine = counts.size() == 1 || (counts.size() == 2 && counts.begin()->second == 2);
    if (!fine && lg.degree(a) == 4)
      report.violations.push_back({"color_pattern", a, "vertex " + std::to_string(a) + " shows neither 2+2 nor 4 colors"});
  }

  std::vector<int> triangle_of(static_cast<std::size_t>(lg.edge_count()), -1);
  for (std::size_t t = 0; t < tc.vertex_induced.size(); ++t) {
    const auto& v = tc.vertex_induced[t].lg_vertices;
    const std::array<int, 3> ids{*lg.edge_id(v[0], v[1]), *lg.edge_id(v[1], v[2]), *lg.edge_id(v[0], v[2])};
    for (int id : ids) triangle_of[static_cast<std::size_t>(id)] = static_cast<int>(t);
    if (color(ids[0]) == color(ids[1]) && color(ids[1]) == color(ids[2])) report.monochromatic_triangles.push_back(v);

    for (int corner = 0; corner < 3; ++corner) {
      const Vertex d1 = v[static_cast<std::size_t>(corner)];
      const Vertex d2 = v[static_cast<std::size_t>((corner + 1) % 3)];
      const Vertex d3 = v[static_cast<std::size_t>((corner + 2) % 3)];
      const int e12 = *lg.edge_id(d1, d2);
      const int e13 = *lg.edge_id(d1, d3);
      if (color(e12) != color(e13)) continue;
      for (int e : lg.incident_edges(d1)) {
        if (e == e12 || e == e13) continue;
        if (color(e) != color(e12))
          report.violations.push_back({"pairing", d1,
                                       "vertex " + std::to_string(d1) + ": triangle edges share color " +
                                           std::to_string(color(e12)) + " but edge " + std::to_string(e) +
                                           " has color " + std::to_string(color(e))});
      }
    }
  }

  for (const auto& trail : ec.trails)
    for (std::size_t i = 0; i < trail.size(); ++i) {
      const int e = trail[i];
      const int f = trail[(i + 1) % trail.size()];
      const int te = triangle_of[static_cast<std::size_t>(e)];
      if (trail.size() > 1 && te >= 0 && te == triangle_of[static_cast<std::size_t>(f)]) {
        const Edge ee = lg.edge(e);
        const Edge fe = lg.edge(f);
        const Vertex shared = (ee.u == fe.u || ee.u == fe.v) ? ee.u : ee.v;
        report.violations.push_back({"triangle_turn", shared,
                                     "trail turns inside a triangle via edges " + std::to_string(e) + " and " +
                                         std::to_string(f)});
      }
    }
  return report;
}

WalkCover project_pi(const CycleSet& cs, const ReducedStructure& rs) {
  WalkCover wc;
  wc.walks.reserve(cs.cycles.size());
  for (const auto& cycle : cs.cycles) {
    std::vector<Vertex> walk;
    walk.reserve(cycle.size());
    for (Vertex x : cycle) walk.push_back(rs.provenance[static_cast<std::size_t>(x)].via);
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (!rs.source.has_edge(walk[i], walk[(i + 1) % walk.size()]))
        throw InternalError("project_pi: consecutive transitions do not share a source edge");
    wc.walks.push_back(std::move(walk));
  }
  return wc;
}

std::vector<int> edge_traversals(const Graph& g, const WalkCover& wc) {
  std::vector<int> count(static_cast<std::size_t>(g.edge_count()), 0);
  for (const auto& walk : wc.walks)
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Vertex a = walk[i];
      const Vertex b = walk[(i + 1) % walk.size()];
      if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count() || a == b) continue;
      if (const auto id = g.edge_id(a, b)) ++count[static_cast<std::size_t>(*id)];
    }
  return count;
}

CdcCertificate verify_cdc(const Graph& g, const WalkCover& wc) {
  CdcCertificate cert{g, {}, false, {}, {}, {}, std::nullopt, std::nullopt};
  const int n = g.vertex_count();
  std::vector<int> coverage(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<std::set<int>> walks_on(static_cast<std::size_t>(g.edge_count()));

  for (int w = 0; w < static_cast<int>(wc.walks.size()); ++w) {
    std::vector<Vertex> seq = wc.walks[static_cast<std::size_t>(w)];
    if (seq.size() >= 2 && seq.front() == seq.back()) seq.pop_back();
    cert.cycles.push_back(seq);
    std::set<Vertex> distinct(seq.begin(), seq.end());
    cert.vertex_simple.push_back(distinct.size() == seq.size());
    const std::string name = "walk " + std::to_string(w);

    if (std::any_of(seq.begin(), seq.end(), [n](Vertex x) { return x < 0 || x >= n; })) {
      cert.violations.push_back({"invalid_vertex", w, std::nullopt, name + " names a vertex outside the graph"});
      continue;
    }
    if (seq.size() < 3) {
      cert.violations.push_back({"walk_too_short", w, std::nullopt, name + " has fewer than 3 vertices"});
      continue;
    }
    std::map<int, int> used;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const Vertex a = seq[i];
      const Vertex b = seq[(i + 1) % seq.size()];
      const bool closing = i + 1 == seq.size();
      const auto id = a == b ? std::nullopt : g.edge_id(a, b);
      if (!id) {
        cert.violations.push_back({closing ? "not_closed" : "not_an_edge", w, std::nullopt,
                                   closing ? name + " does not close: " + std::to_string(a) + " and " +
                                                 std::to_string(b) + " are not adjacent"
                                           : name + " steps along non-edge (" + std::to_string(a) + "," +
                                                 std::to_string(b) + ")"});
        continue;
      }
      ++used[*id];
    }
    for (const auto& [id, k] : used) {
      coverage[static_cast<std::size_t>(id)] += k;
      walks_on[static_cast<std::size_t>(id)].insert(w);
      if (k > 1)
        cert.violations.push_back({"repeated_edge", w, g.edge(id),
                                   name + " uses edge " + to_string(g.edge(id)) + " " + std::to_string(k) + " times"});
    }
  }

  for (int id = 0; id < g.edge_count(); ++id) {
    const int k = coverage[static_cast<std::size_t>(id)];
    const std::string e = to_string(g.edge(id));
    if (k != 2) {
      const std::string times = k == 0 ? "never" : k == 1 ? "once" : std::to_string(k) + " times";
      cert.violations.push_back({"coverage", -1, g.edge(id), "edge " + e + " covered " + times});
    } else if (walks_on[static_cast<std::size_t>(id)].size() < 2) {
      cert.violations.push_back({"same_walk", *walks_on[static_cast<std::size_t>(id)].begin(), g.edge(id),
                                 "edge " + e + " covered twice by the same walk"});
    }
  }
  cert.valid_cdc = cert.violations.empty();
  return cert;
}

CdcCertificate certify_labeling(const Labeling& lab) {
  const CycleSet cs = extract_cycles(lab);
  CdcCertificate cert = verify_cdc(lab.structure().source, project_pi(cs, lab.structure()));
  cert.labeling_bits_hex = to_hex(lab);
  return cert;
}

CdcCertificate pipeline(const Graph& g, const SearchConfig& cfg) {
  const StructuralReport report = structural_report(g);
  if (!report.connected) throw PreconditionError("input graph is not connected");
  if (!report.is_cubic) throw PreconditionError("input graph is not cubic");
  if (!report.triangle_free) throw PreconditionError("input graph is not triangle-free");

  auto rs = std::make_shared<const ReducedStructure>(build_reduced(g));
  const SearchOutcome outcome = search_cdc_labeling(rs, cfg);
  long long flips = outcome.flips_applied;
  // Whatever TypeB is left is reducible; TypeA left after the search is not.
  const Labeling lab = reduce_type_b(outcome.labeling, &flips);
  const auto counts = CycleScanner(*rs).counts(lab.bits());

  CdcCertificate cert = certify_labeling(lab);
  cert.seed = outcome.seed;
  cert.stats = CertificateStats{std::string(to_string(outcome.status)), counts.type_a, counts.type_b, flips,
                                outcome.attempts};
  if (outcome.status != SearchStatus::Solved) {
    cert.violations.push_back({"search", -1, std::nullopt,
                               "search exhausted its budget after " + std::to_string(outcome.attempts) +
                                   " attempts with " + std::to_string(counts.type_a) + " TypeA intersections left"});
    for (const Edge& b : report.bridges)
      cert.violations.push_back({"bridge", -1, b, "edge " + to_string(b) + " is a bridge; no cycle double cover exists"});
  }
  cert.valid_cdc = cert.violations.empty();
  return cert;
}

}  // namespace cdc
