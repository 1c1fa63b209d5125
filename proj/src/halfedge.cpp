#include "cdc/halfedge.hpp"

#include <algorithm>
#include <set>

namespace cdc {

std::array<int, 2> HalfEdgeStructure::pairs_serving(Vertex v, int edge) const {
  std::array<int, 2> out{-1, -1};
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    const HalfEdgePair& p = pairs[static_cast<std::size_t>(3 * v + i)];
    if (p.served_edges[0] == edge || p.served_edges[1] == edge) {
      if (k == 2) throw InternalError("edge served by more than two pairs");
      out[static_cast<std::size_t>(k++)] = p.id;
    }
  }
  if (k != 2) throw InternalError("edge not served by two pairs");
  return out;
}

HalfEdgeStructure build_half_edge(const Graph& g) {
  const StructuralReport report = structural_report(g);
  if (!report.connected) throw PreconditionError("input graph is not connected");
  if (!report.is_cubic) throw PreconditionError("input graph is not cubic");
  if (!report.triangle_free) throw PreconditionError("input graph is not triangle-free");

  HalfEdgeStructure hes;
  hes.source = g;
  hes.vertex_orientation.assign(static_cast<std::size_t>(g.vertex_count()), std::nullopt);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> inc(g.incident_edges(v).begin(), g.incident_edges(v).end());
    std::sort(inc.begin(), inc.end());
    for (int i = 0; i < 3; ++i) {
      std::array<int, 2> served{inc[static_cast<std::size_t>(i)], inc[static_cast<std::size_t>((i + 2) % 3)]};
      std::sort(served.begin(), served.end());
      hes.pairs.push_back({3 * v + i, v, i, served});
    }
  }
  auto half_for = [&](int pair, int edge) {
    const HalfEdgePair& p = hes.pairs[static_cast<std::size_t>(pair)];
    return 2 * pair + (p.served_edges[0] == edge ? 0 : 1);
  };
  for (int q = 0; q < g.edge_count(); ++q) {
    const Edge e = g.edge(q);
    Crossing c;
    c.edge = q;
    c.pairs_u = hes.pairs_serving(e.u, q);
    c.pairs_v = hes.pairs_serving(e.v, q);
    const int u0 = half_for(c.pairs_u[0], q), u1 = half_for(c.pairs_u[1], q);
    const int v0 = half_for(c.pairs_v[0], q), v1 = half_for(c.pairs_v[1], q);
    c.connections = {Connection{u0, v0}, Connection{u1, v0}, Connection{u1, v1}, Connection{u0, v1}};
    hes.crossings.push_back(c);
  }
  return hes;
}

ContractedStructure contract_pairs(const HalfEdgeStructure& hes) {
  ContractedStructure out{Graph(0), {}};
  std::vector<Edge> edges;
  for (const Crossing& c : hes.crossings) {
    std::array<int, 4> cyc{};
    const auto& k = c.connections;
    // (u0,v0), (u1,v0), (u1,v1), (u0,v1) contract to the cycle u0 v0 u1 v1.
    cyc = {hes.pair_of_half_edge(k[0].half_a), hes.pair_of_half_edge(k[0].half_b), hes.pair_of_half_edge(k[2].half_a),
           hes.pair_of_half_edge(k[2].half_b)};
    out.cliques.push_back(cyc);
    for (const Connection& conn : k) {
      const int a = hes.pair_of_half_edge(conn.half_a);
      const int b = hes.pair_of_half_edge(conn.half_b);
      if (a == b) throw InternalError("connection joins a pair to itself");
      edges.emplace_back(a, b);
    }
  }
  out.graph = Graph(static_cast<int>(hes.pairs.size()), std::move(edges));
  return out;
}

EquivalenceReport equivalence_check(const HalfEdgeStructure& hes, const ContractedStructure& contracted,
                                    const ReducedStructure& rs) {
  EquivalenceReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.mismatches.push_back(std::move(msg));
  };
  const int pairs = static_cast<int>(hes.pairs.size());
  if (pairs != rs.l2.vertex_count())
    fail("pair count " + std::to_string(pairs) + " differs from l2 vertex count " + std::to_string(rs.l2.vertex_count()));
  if (contracted.graph.edge_count() != rs.l2.edge_count())
    fail("contracted edge count " + std::to_string(contracted.graph.edge_count()) + " differs from l2 edge count " +
         std::to_string(rs.l2.edge_count()));

  rep.bijection.assign(static_cast<std::size_t>(pairs), -1);
  std::vector<int> hit(static_cast<std::size_t>(rs.l2.vertex_count()), -1);
  for (const HalfEdgePair& p : hes.pairs) {
    const auto id = rs.line.lg.edge_id(p.served_edges[0], p.served_edges[1]);
    if (!id) {
      fail("pair " + std::to_string(p.id) + " serves edges that do not meet in L(G)");
      continue;
    }
    if (rs.provenance[static_cast<std::size_t>(*id)].via != p.vertex)
      fail("pair " + std::to_string(p.id) + " maps to a transition at another vertex");
    if (hit[static_cast<std::size_t>(*id)] != -1)
      fail("pairs " + std::to_string(hit[static_cast<std::size_t>(*id)]) + " and " + std::to_string(p.id) +
           " map to the same l2 vertex " + std::to_string(*id));
    hit[static_cast<std::size_t>(*id)] = p.id;
    rep.bijection[static_cast<std::size_t>(p.id)] = *id;
  }
  if (!rep.ok) return rep;

  auto image = [&](int pair) { return rep.bijection[static_cast<std::size_t>(pair)]; };
  for (const Crossing& c : hes.crossings) {
    const ReducedClique& clique = rs.cliques[static_cast<std::size_t>(c.edge)];
    std::set<Edge> expected;
    for (int id : clique.cycle_edges) expected.insert(rs.l2.edge(id));
    std::set<Edge> got;
    for (const Connection& conn : c.connections)
      got.emplace(image(hes.pair_of_half_edge(conn.half_a)), image(hes.pair_of_half_edge(conn.half_b)));
    if (got != expected) {
      fail("crossing " + std::to_string(c.edge) + " does not map onto clique " + std::to_string(clique.id));
      continue;
    }
    const auto& cyc = contracted.cliques[static_cast<std::size_t>(c.edge)];
    std::array<int, 4> mapped{};
    for (int i = 0; i < 4; ++i) mapped[static_cast<std::size_t>(i)] = image(cyc[static_cast<std::size_t>(i)]);
    std::array<int, 4> want = clique.cycle4;
    std::sort(mapped.begin(), mapped.end());
    std::sort(want.begin(), want.end());
    if (mapped != want) fail("crossing " + std::to_string(c.edge) + " clique table entry differs");
  }
  for (const Edge& e : contracted.graph.edges())
    if (!rs.l2.has_edge(image(e.u), image(e.v)))
      fail("contracted edge " + to_string(e) + " has no l2 image");
  return rep;
}

}  // namespace cdc
