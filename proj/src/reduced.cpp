#include "cdc/reduced.hpp"

#include <algorithm>
#include <map>

namespace cdc {

namespace {

void require(bool ok, const std::string& predicate) {
  if (!ok) throw PreconditionError("build_reduced: input graph is not " + predicate);
}

}  // namespace

ReducedStructure build_reduced(const Graph& g, BuildOptions options) {
  const StructuralReport report = structural_report(g);
  require(report.connected, "connected");
  require(report.is_cubic, "cubic");
  require(report.triangle_free, "triangle-free");

  ReducedStructure rs;
  rs.source = g;
  rs.line = line_graph(g);
  const Graph& lg = rs.line.lg;
  const TriangleClassification tc = classify_triangles(rs.line, g);
  const LineGraphResult double_line = line_graph(lg);
  rs.double_line_edge_count = double_line.lg.edge_count();

  // Each vertex star {a,b,c} of L(G) turns into the triangle {ab, ac, bc}
  // of L(L(G)); those edges are removed.
  std::vector<int> removed_ids;
  for (const VertexTriangle& t : tc.vertex_induced) {
    const auto [a, b, c] = t.lg_vertices;
    const Vertex ab = *lg.edge_id(a, b);
    const Vertex ac = *lg.edge_id(a, c);
    const Vertex bc = *lg.edge_id(b, c);
    std::array<Vertex, 3> tri{ab, ac, bc};
    std::sort(tri.begin(), tri.end());
    rs.removed_triangles.push_back(tri);
    for (auto [x, y] : {std::pair{tri[0], tri[1]}, std::pair{tri[0], tri[2]}, std::pair{tri[1], tri[2]}}) {
      auto id = double_line.lg.edge_id(x, y);
      if (!id) throw InternalError("star triangle edge missing from L(L(G))");
      removed_ids.push_back(*id);
    }
  }
  std::sort(rs.removed_triangles.begin(), rs.removed_triangles.end());
  rs.l2 = double_line.lg.without_edges(removed_ids);

  rs.provenance.resize(static_cast<std::size_t>(lg.edge_count()));
  for (int x = 0; x < lg.edge_count(); ++x) {
    const Edge& e = lg.edge(x);
    rs.provenance[static_cast<std::size_t>(x)] = {x, {e.u, e.v}, rs.line.edge_origin[static_cast<std::size_t>(x)]};
  }

  rs.cliques.resize(static_cast<std::size_t>(g.edge_count()));
  for (int q = 0; q < g.edge_count(); ++q) {
    ReducedClique& c = rs.cliques[static_cast<std::size_t>(q)];
    c.id = q;
    c.source_edge = g.edge(q);
    std::vector<Vertex> su, sv;
    for (int x : lg.incident_edges(q)) {
      const Vertex via = rs.provenance[static_cast<std::size_t>(x)].via;
      (via == c.source_edge.u ? su : sv).push_back(x);
    }
    if (su.size() != 2 || sv.size() != 2) throw InternalError("reduced clique without a 2+2 side split");
    std::sort(su.begin(), su.end());
    std::sort(sv.begin(), sv.end());
    c.side_u = {su[0], su[1]};
    c.side_v = {sv[0], sv[1]};
    c.cycle4 = {su[0], sv[0], su[1], sv[1]};
    c.removed_pair = {Edge(su[0], su[1]), Edge(sv[0], sv[1])};
    for (int k = 0; k < 4; ++k) {
      auto id = rs.l2.edge_id(c.cycle4[static_cast<std::size_t>(k)], c.cycle4[static_cast<std::size_t>((k + 1) % 4)]);
      if (!id) throw InternalError("reduced clique " + std::to_string(q) + " is missing a cycle edge");
      c.cycle_edges[static_cast<std::size_t>(k)] = *id;
    }
  }

  rs.vertex_cliques.resize(static_cast<std::size_t>(rs.l2.vertex_count()));
  for (int x = 0; x < rs.l2.vertex_count(); ++x) {
    const auto& [q0, q1] = rs.provenance[static_cast<std::size_t>(x)].source_edges;
    auto slot = [&](int q) {
      const auto& cyc = rs.cliques[static_cast<std::size_t>(q)].cycle4;
      const auto pos = static_cast<int>(std::find(cyc.begin(), cyc.end(), x) - cyc.begin());
      return CliqueSlot{q, pos};
    };
    rs.vertex_cliques[static_cast<std::size_t>(x)] = {slot(q0), slot(q1)};
  }

  if (options.check_invariants) {
    const AuditReport audit = audit_reduced(rs);
    if (const CheckResult* bad = audit.first_failure())
      throw InternalError("build_reduced: invariant '" + bad->name + "' violated: " + bad->detail);
  }
  return rs;
}

// --- audit --------------------------------------------------------------------

bool AuditReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* AuditReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const CheckResult* AuditReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

AuditReport audit_reduced(const ReducedStructure& rs) {
  AuditReport report;
  auto check = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, passed ? std::string() : std::move(detail)});
  };
  const Graph& g = rs.source;
  const Graph& l2 = rs.l2;
  const Graph& lg = rs.line.lg;
  const int m = g.edge_count();

  check("vertex_count", l2.vertex_count() == 2 * m,
        std::to_string(l2.vertex_count()) + " vertices, expected " + std::to_string(2 * m));
  check("edge_count", l2.edge_count() == 4 * m,
        std::to_string(l2.edge_count()) + " edges, expected " + std::to_string(4 * m));
  {
    std::string detail;
    for (Vertex x = 0; x < l2.vertex_count() && detail.empty(); ++x)
      if (l2.degree(x) != 4) detail = "vertex " + std::to_string(x) + " has degree " + std::to_string(l2.degree(x));
    check("four_regular", detail.empty(), detail);
  }
  check("connected", is_connected(l2), "l2 is disconnected");
  {
    const auto tris = enumerate_triangles(l2);
    check("triangle_free", tris.empty(),
          tris.empty() ? "" : "triangle {" + std::to_string(tris[0][0]) + "," + std::to_string(tris[0][1]) + "," +
                                  std::to_string(tris[0][2]) + "}");
  }
  check("clique_count", rs.clique_count() == m,
        std::to_string(rs.clique_count()) + " cliques, expected " + std::to_string(m));

  // Shape of each clique, with sides recomputed from the line graph.
  {
    std::string shape, sides, removed;
    for (const ReducedClique& c : rs.cliques) {
      const auto& v = c.cycle4;
      const std::string tag = "clique " + std::to_string(c.id);
      std::array<Vertex, 4> sorted = v;
      std::sort(sorted.begin(), sorted.end());
      bool ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && sorted[0] >= 0 &&
                sorted[3] < l2.vertex_count();
      if (ok) {
        for (int k = 0; k < 4; ++k)
          ok = ok && l2.has_edge(v[static_cast<std::size_t>(k)], v[static_cast<std::size_t>((k + 1) % 4)]);
        ok = ok && !l2.has_edge(v[0], v[2]) && !l2.has_edge(v[1], v[3]);
      }
      if (!ok && shape.empty()) shape = tag + " does not induce a 4-cycle";
      if (!ok) continue;

      const Edge src = g.edge(c.id);
      auto shared_endpoint = [&](Vertex x) -> std::optional<Vertex> {
        const Edge le = lg.edge(x);
        if (le.u != c.id && le.v != c.id) return std::nullopt;
        const Edge other = g.edge(le.other(c.id));
        if (other.contains(src.u)) return src.u;
        if (other.contains(src.v)) return src.v;
        return std::nullopt;
      };
      const bool alt = shared_endpoint(v[0]) == src.u && shared_endpoint(v[2]) == src.u &&
                       shared_endpoint(v[1]) == src.v && shared_endpoint(v[3]) == src.v;
      if (!alt && sides.empty()) sides = tag + " does not alternate u/v sides";
      for (const Edge& r : c.removed_pair) {
        const bool internal_u = r == Edge(v[0], v[2]);
        const bool internal_v = r == Edge(v[1], v[3]);
        if ((!internal_u && !internal_v) || l2.has_edge(r.u, r.v))
          if (removed.empty()) removed = tag + " removed pair " + to_string(r) + " is not a deleted side edge";
      }
    }
    check("cliques_are_c4", shape.empty(), shape);
    check("sides_alternate", sides.empty(), sides);
    check("removed_pairs_internal", removed.empty(), removed);
  }

  // Edge-disjoint cover of E(l2).
  {
    std::vector<int> cover(static_cast<std::size_t>(l2.edge_count()), 0);
    std::string detail;
    for (const ReducedClique& c : rs.cliques)
      for (int k = 0; k < 4; ++k) {
        auto id = l2.edge_id(c.cycle4[static_cast<std::size_t>(k)], c.cycle4[static_cast<std::size_t>((k + 1) % 4)]);
        if (id) ++cover[static_cast<std::size_t>(*id)];
      }
    for (int id = 0; id < l2.edge_count() && detail.empty(); ++id)
      if (cover[static_cast<std::size_t>(id)] != 1)
        detail = "edge " + to_string(l2.edge(id)) + " covered by " + std::to_string(cover[static_cast<std::size_t>(id)]) +
                 " cliques";
    check("edge_disjoint_cover", detail.empty(), detail);
  }

  // Vertex membership: exactly two cliques, neighbors split 2+2, overlaps <= 1.
  {
    std::vector<std::vector<int>> member(static_cast<std::size_t>(l2.vertex_count()));
    for (const ReducedClique& c : rs.cliques)
      for (Vertex x : c.cycle4)
        if (x >= 0 && x < l2.vertex_count()) member[static_cast<std::size_t>(x)].push_back(c.id);
    std::string two, split, overlap;
    std::map<std::pair<int, int>, int> shared;
    for (Vertex x = 0; x < l2.vertex_count(); ++x) {
      const auto& ms = member[static_cast<std::size_t>(x)];
      if (ms.size() != 2) {
        if (two.empty()) two = "vertex " + std::to_string(x) + " lies in " + std::to_string(ms.size()) + " cliques";
        continue;
      }
      ++shared[{std::min(ms[0], ms[1]), std::max(ms[0], ms[1])}];
      std::array<int, 2> count{0, 0};
      for (Vertex y : l2.neighbors(x))
        for (int s = 0; s < 2; ++s) {
          const auto& cyc = rs.cliques[static_cast<std::size_t>(ms[static_cast<std::size_t>(s)])].cycle4;
          if (std::find(cyc.begin(), cyc.end(), y) != cyc.end()) ++count[static_cast<std::size_t>(s)];
        }
      if ((count[0] != 2 || count[1] != 2) && split.empty())
        split = "vertex " + std::to_string(x) + " neighbors split " + std::to_string(count[0]) + "+" +
                std::to_string(count[1]);
    }
    for (const auto& [pair, n] : shared)
      if (n > 1 && overlap.empty())
        overlap = "cliques " + std::to_string(pair.first) + " and " + std::to_string(pair.second) + " share " +
                  std::to_string(n) + " vertices";
    check("two_cliques_per_vertex", two.empty(), two);
    check("neighbors_split_2_2", split.empty(), split);
    check("clique_overlap_at_most_one", overlap.empty(), overlap);
  }

  // |E(L(L(G)))| - |E(l2)| = 3 * (number of vertex stars of L(G)).
  {
    long long double_line_edges = 0;
    for (Vertex a = 0; a < lg.vertex_count(); ++a) {
      const long long d = lg.degree(a);
      double_line_edges += d * (d - 1) / 2;
    }
    long long stars = 0;
    for (Vertex w = 0; w < g.vertex_count(); ++w) stars += g.degree(w) == 3 ? 1 : 0;
    const long long removed = double_line_edges - l2.edge_count();
    check("removed_edge_accounting",
          removed == 3 * stars && double_line_edges == rs.double_line_edge_count &&
              static_cast<long long>(rs.removed_triangles.size()) == stars,
          "removed " + std::to_string(removed) + " edges, expected " + std::to_string(3 * stars));
  }
  return report;
}

}  // namespace cdc
