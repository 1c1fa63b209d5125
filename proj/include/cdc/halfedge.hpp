#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cdc/reduced.hpp"

namespace cdc {

/// One of the three half-edge pairs at a vertex. Pair `index` at vertex v
/// serves the incident edges at sorted positions index and index - 1 (mod 3);
/// half-edge 2 * id + j serves served_edges[j].
struct HalfEdgePair {
  int id = 0;  // 3 * vertex + index
  Vertex vertex = 0;
  int index = 0;
  std::array<int, 2> served_edges{};  // G edge ids, ascending
};

struct Connection {
  int half_a = 0;  // half-edge at the lower endpoint of the crossing edge
  int half_b = 0;  // half-edge at the upper endpoint
};

/// The four connections between the two pairs serving an edge at each end.
struct Crossing {
  int edge = 0;
  std::array<int, 2> pairs_u{};  // ascending pair ids at the lower endpoint
  std::array<int, 2> pairs_v{};
  std::array<Connection, 4> connections{};  // (u0,v0), (v0,u1), (u1,v1), (v1,u0) in cyclic order
};

struct HalfEdgeStructure {
  Graph source;
  std::vector<HalfEdgePair> pairs;
  std::vector<Crossing> crossings;  // indexed by G edge id
  /// Placeholder for per-vertex orientations; carries no semantics.
  std::vector<std::optional<int>> vertex_orientation;

  int half_edge_count() const { return 2 * static_cast<int>(pairs.size()); }
  /// The two pairs at `v` that serve incident edge `edge`, ascending.
  std::array<int, 2> pairs_serving(Vertex v, int edge) const;
  int pair_of_half_edge(int half) const { return half / 2; }
};

/// Throws PreconditionError unless g is connected, cubic and triangle-free.
HalfEdgeStructure build_half_edge(const Graph& g);

struct ContractedStructure {
  Graph graph;                               // vertex = pair id
  std::vector<std::array<int, 4>> cliques;  // per crossing, vertices in cyclic order
};

ContractedStructure contract_pairs(const HalfEdgeStructure& hes);

struct EquivalenceReport {
  bool ok = true;
  std::vector<std::string> mismatches;
  /// pair id -> l2 vertex; -1 where no l2 vertex matches
  std::vector<int> bijection;

  const std::string* first_mismatch() const { return mismatches.empty() ? nullptr : &mismatches.front(); }
};

/// Maps the pair at v serving {e, f} to the l2 vertex whose L(G) edge is
/// {e, f}, then checks that this is an edge-preserving bijection and that
/// crossing q lands on clique q.
EquivalenceReport equivalence_check(const HalfEdgeStructure& hes, const ContractedStructure& contracted,
                                    const ReducedStructure& rs);

}  // namespace cdc
