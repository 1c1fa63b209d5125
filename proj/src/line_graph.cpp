#include "cdc/line_graph.hpp"

#include <algorithm>

namespace cdc {

LineGraphResult line_graph(const Graph& g) {
  LineGraphResult r;
  r.vertex_origin = g.edges();
  std::vector<std::pair<Edge, Vertex>> lg_edges;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    auto inc = g.incident_edges(w);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) lg_edges.emplace_back(Edge(inc[i], inc[j]), w);
  }
  std::vector<Edge> plain;
  plain.reserve(lg_edges.size());
  for (const auto& [e, w] : lg_edges) plain.push_back(e);
  r.lg = Graph(g.edge_count(), std::move(plain));
  if (r.lg.edge_count() != static_cast<int>(lg_edges.size()))
    throw InternalError("line graph: two source edges share more than one vertex");
  r.edge_origin.assign(static_cast<std::size_t>(r.lg.edge_count()), -1);
  for (const auto& [e, w] : lg_edges) r.edge_origin[static_cast<std::size_t>(*r.lg.edge_id(e.u, e.v))] = w;
  return r;
}

std::vector<std::array<Vertex, 3>> enumerate_triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (const Edge& e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    std::vector<Vertex> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    for (Vertex w : common)
      if (w > e.v) out.push_back({e.u, e.v, w});
  }
  std::sort(out.begin(), out.end());
  return out;
}

TriangleClassification classify_triangles(const LineGraphResult& lgr, const Graph& source) {
  TriangleClassification tc;
  for (const auto& tri : enumerate_triangles(lgr.lg)) {
    const Edge& e0 = lgr.vertex_origin[static_cast<std::size_t>(tri[0])];
    const Edge& e1 = lgr.vertex_origin[static_cast<std::size_t>(tri[1])];
    const Edge& e2 = lgr.vertex_origin[static_cast<std::size_t>(tri[2])];
    std::optional<Vertex> star;
    for (Vertex w : {e0.u, e0.v})
      if (e1.contains(w) && e2.contains(w)) star = w;
    std::array<Vertex, 3> ends{};
    bool is_source_triangle = false;
    if (!star) {
      std::vector<Vertex> vs = {e0.u, e0.v, e1.u, e1.v, e2.u, e2.v};
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      if (vs.size() == 3 && source.has_edge(vs[0], vs[1]) && source.has_edge(vs[1], vs[2]) &&
          source.has_edge(vs[0], vs[2])) {
        is_source_triangle = true;
        ends = {vs[0], vs[1], vs[2]};
      }
    }
    if (star) {
      tc.vertex_induced.push_back({*star, tri});
    } else if (is_source_triangle) {
      tc.edge_induced.push_back({ends, tri});
    } else {
      throw InternalError("lg triangle matches neither a vertex star nor a source triangle");
    }
  }
  return tc;
}

std::vector<LineGraphResult> iterated_line_graph(const Graph& g, int k, IteratedBudget budget) {
  if (k < 1) throw PreconditionError("iterated_line_graph: k must be at least 1");
  std::vector<LineGraphResult> chain;
  chain.reserve(static_cast<std::size_t>(k));
  const Graph* current = &g;
  for (int level = 0; level < k; ++level) {
    long long next_edges = 0;
    for (Vertex v = 0; v < current->vertex_count(); ++v) {
      const long long d = current->degree(v);
      next_edges += d * (d - 1) / 2;
    }
    if (current->edge_count() > budget.max_vertices || next_edges > budget.max_edges)
      throw PreconditionError("iterated_line_graph: size budget exceeded at level " + std::to_string(level + 1));
    chain.push_back(line_graph(*current));
    current = &chain.back().lg;
  }
  return chain;
}

}  // namespace cdc
