#pragma once

#include <array>
#include <string>
#include <vector>

#include "cdc/graph.hpp"
#include "cdc/line_graph.hpp"

namespace cdc {

/// The 4-cycle left of the K4 that L(L(G)) builds around one edge of G.
///
/// Vertex ids are l2 ids. cycle4 is (u-side smaller, v-side smaller,
/// u-side larger, v-side larger) where (u, v) = source_edge with u < v.
/// Edge class 0 is {c0c1, c2c3}, class 1 is {c1c2, c3c0}.
struct ReducedClique {
  int id = 0;
  Edge source_edge;
  std::array<Vertex, 4> cycle4{};
  std::array<Vertex, 2> side_u{};
  std::array<Vertex, 2> side_v{};
  std::array<Edge, 2> removed_pair{};
  /// l2 edge ids of c0c1, c1c2, c2c3, c3c0; index k belongs to class k % 2.
  std::array<int, 4> cycle_edges{};
};

/// Where an l2 vertex comes from: an edge of L(G), i.e. two edges of G
/// meeting at `via`.
struct L2Origin {
  int lg_edge = 0;
  std::array<int, 2> source_edges{};
  Vertex via = 0;
};

struct CliqueSlot {
  int clique = 0;
  int position = 0;  // index into cycle4
};

struct ReducedStructure {
  Graph source;
  LineGraphResult line;  // L(source)
  Graph l2;
  std::vector<ReducedClique> cliques;  // id == source edge id == L(G) vertex
  std::vector<std::array<CliqueSlot, 2>> vertex_cliques;  // ordered by clique id
  std::vector<std::array<Vertex, 3>> removed_triangles;    // deleted triangles, in l2 ids
  std::vector<L2Origin> provenance;
  int double_line_edge_count = 0;  // |E(L(L(G)))|

  int clique_count() const { return static_cast<int>(cliques.size()); }
};

struct BuildOptions {
  bool check_invariants = true;
};

/// Requires g connected, cubic and triangle-free; bridges are allowed.
/// Throws PreconditionError naming the failing predicate, InternalError when
/// the eager audit fails.
ReducedStructure build_reduced(const Graph& g, BuildOptions options = {});

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct AuditReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(const std::string& name) const;
  const CheckResult* first_failure() const;
};

/// Re-derives every structural invariant from the graphs and the clique
/// table, without trusting the construction bookkeeping.
AuditReport audit_reduced(const ReducedStructure& rs);

}  // namespace cdc
