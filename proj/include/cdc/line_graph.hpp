#pragma once

#include <array>
#include <string>
#include <vector>

#include "cdc/graph.hpp"

namespace cdc {

/// L(source) with provenance. Vertex a of lg is source edge id a, so
/// vertex_origin[a] == source.edge(a).
struct LineGraphResult {
  Graph lg;
  std::vector<Edge> vertex_origin;
  /// Indexed by lg edge id: the source vertex shared by the two source edges.
  std::vector<Vertex> edge_origin;
};

LineGraphResult line_graph(const Graph& g);

struct VertexTriangle {
  Vertex source_vertex = 0;
  std::array<Vertex, 3> lg_vertices{};  // sorted
};

struct EdgeTriangle {
  std::array<Vertex, 3> source_triangle{};  // sorted
  std::array<Vertex, 3> lg_vertices{};      // sorted
};

struct TriangleClassification {
  std::vector<VertexTriangle> vertex_induced;
  std::vector<EdgeTriangle> edge_induced;
};

/// Every triangle of lgr.lg, listed once. A star spans four source vertices
/// and a source triangle three, so the two kinds never coincide. Throws
/// InternalError for a triangle matching neither pattern.
TriangleClassification classify_triangles(const LineGraphResult& lgr, const Graph& source);

/// All triangles of g as sorted triples, in lexicographic order.
std::vector<std::array<Vertex, 3>> enumerate_triangles(const Graph& g);

struct IteratedBudget {
  long long max_vertices = 2'000'000;
  long long max_edges = 20'000'000;
};

/// [L(g), L(L(g)), ...] with k entries; each entry's provenance refers to
/// the previous level. Throws PreconditionError when the next level would
/// exceed the budget.
std::vector<LineGraphResult> iterated_line_graph(const Graph& g, int k, IteratedBudget budget = {});

}  // namespace cdc
