#include <doctest.h>

#include "cdc/halfedge.hpp"
#include "support.hpp"

using namespace cdc;

TEST_CASE("half-edge construction counts") {
  const HalfEdgeStructure k = build_half_edge(generate_named("k33"));
  CHECK(k.pairs.size() == 18);
  CHECK(k.crossings.size() == 9);
  CHECK(4 * k.crossings.size() == 36);
  const HalfEdgeStructure p = build_half_edge(generate_named("petersen"));
  CHECK(p.pairs.size() == 30);
  CHECK(4 * p.crossings.size() == 60);
  CHECK(p.half_edge_count() == 60);
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(build_half_edge(k4), PreconditionError);
}

TEST_CASE("pair assignment: three pairs per vertex, each edge served twice") {
  for (const auto& name : named_graphs()) {
    CAPTURE(name);
    const Graph g = generate_named(name);
    const HalfEdgeStructure hes = build_half_edge(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::vector<int> inc(g.incident_edges(v).begin(), g.incident_edges(v).end());
      std::sort(inc.begin(), inc.end());
      std::map<int, int> served;
      for (int i = 0; i < 3; ++i) {
        const HalfEdgePair& p = hes.pairs[static_cast<std::size_t>(3 * v + i)];
        CHECK(p.vertex == v);
        CHECK(p.served_edges[0] != p.served_edges[1]);
        for (int e : p.served_edges) ++served[e];
      }
      CHECK(served.size() == 3);
      for (const auto& [e, n] : served) CHECK(n == 2);
      // Sorted position j is served by pairs j and j + 1 (mod 3).
      for (int j = 0; j < 3; ++j) {
        const auto pairs = hes.pairs_serving(v, inc[static_cast<std::size_t>(j)]);
        std::array<int, 2> want{3 * v + j, 3 * v + (j + 1) % 3};
        std::sort(want.begin(), want.end());
        CHECK(pairs == want);
      }
    }
  }
}

TEST_CASE("contraction gives a 4-regular graph whose crossings are C4s") {
  const ContractedStructure c = contract_pairs(build_half_edge(generate_named("k33")));
  CHECK(c.graph.vertex_count() == 18);
  CHECK(c.graph.edge_count() == 36);
  for (Vertex x = 0; x < 18; ++x) CHECK(c.graph.degree(x) == 4);
  CHECK(c.cliques.size() == 9);
  for (const auto& cyc : c.cliques) {
    for (int i = 0; i < 4; ++i) CHECK(c.graph.has_edge(cyc[static_cast<std::size_t>(i)], cyc[static_cast<std::size_t>((i + 1) % 4)]));
    CHECK_FALSE(c.graph.has_edge(cyc[0], cyc[2]));
    CHECK_FALSE(c.graph.has_edge(cyc[1], cyc[3]));
  }
}

TEST_CASE("equivalence with the reduced structure") {
  for (const auto& name : named_graphs()) {
    CAPTURE(name);
    const Graph g = generate_named(name);
    const HalfEdgeStructure hes = build_half_edge(g);
    const EquivalenceReport r = equivalence_check(hes, contract_pairs(hes), build_reduced(g));
    CHECK(r.ok);
    CHECK(r.mismatches.empty());
    std::set<int> image(r.bijection.begin(), r.bijection.end());
    CHECK(image.size() == hes.pairs.size());
    CHECK(*image.begin() == 0);
  }
  std::mt19937_64 rng(59);
  for (int t = 0; t < 10; ++t) {
    const Graph g = oracle::random_cubic(10 + 2 * static_cast<int>(rng() % 8), rng, false);
    const HalfEdgeStructure hes = build_half_edge(g);
    CHECK(equivalence_check(hes, contract_pairs(hes), build_reduced(g)).ok);
  }
}

TEST_CASE("a mis-wired crossing is reported at that crossing") {
  const Graph g = generate_named("petersen");
  HalfEdgeStructure hes = build_half_edge(g);
  const int target = 4;
  Crossing& c = hes.crossings[static_cast<std::size_t>(target)];
  // Point one connection at a pair of a different crossing's vertex.
  const int foreign = hes.crossings[static_cast<std::size_t>((target + 7) % 15)].connections[0].half_b;
  c.connections[1].half_b = foreign;
  const EquivalenceReport r = equivalence_check(hes, contract_pairs(hes), build_reduced(g));
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_mismatch() != nullptr);
  bool names_crossing = false;
  for (const auto& m : r.mismatches) names_crossing |= m.find("crossing " + std::to_string(target)) != std::string::npos;
  CHECK(names_crossing);
}
