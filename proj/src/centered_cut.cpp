#include <algorithm>

#include "cdc/dynamics.hpp"

namespace cdc {

namespace {

std::vector<char> removal_mask(const Graph& g, const std::vector<Vertex>& cut) {
  std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex x : cut) removed[static_cast<std::size_t>(x)] = 1;
  return removed;
}

bool contains_triangle(const Graph& g, const std::vector<Vertex>& cut) {
  for (std::size_t i = 0; i < cut.size(); ++i)
    for (std::size_t j = i + 1; j < cut.size(); ++j)
      for (std::size_t k = j + 1; k < cut.size(); ++k)
        if (g.has_edge(cut[i], cut[j]) && g.has_edge(cut[j], cut[k]) && g.has_edge(cut[i], cut[k])) return true;
  return false;
}

// No proper subset still containing the center separates the graph.
bool is_minimal(const Graph& g, const std::vector<Vertex>& cut, Vertex center) {
  const int k = static_cast<int>(cut.size());
  for (int mask = 1; mask < (1 << k) - 1; ++mask) {
    std::vector<Vertex> sub;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) sub.push_back(cut[static_cast<std::size_t>(i)]);
    if (std::find(sub.begin(), sub.end(), center) == sub.end()) continue;
    if (is_vertex_cut(g, sub)) return false;
  }
  return true;
}

}  // namespace

bool is_vertex_cut(const Graph& g, const std::vector<Vertex>& cut) {
  int count = 0;
  component_labels(g, removal_mask(g, cut), &count);
  return count >= 2;
}

CenteredVertexCut centered_vertex_cut(const Graph& lg, Vertex v) {
  const int n = lg.vertex_count();
  if (v < 0 || v >= n) throw PreconditionError("centered_vertex_cut: unknown vertex " + std::to_string(v));
  if (n < 6) throw PreconditionError("centered_vertex_cut: graph has fewer than 6 vertices, no cut to center");
  if (is_vertex_cut(lg, {v})) throw CutVertexDetected(v);

  auto accept = [&](std::vector<Vertex> cut) -> std::optional<CenteredVertexCut> {
    std::sort(cut.begin(), cut.end());
    if (!is_vertex_cut(lg, cut) || contains_triangle(lg, cut) || !is_minimal(lg, cut, v)) return std::nullopt;
    CenteredVertexCut out{v, cut, {}};
    int count = 0;
    const auto labels = component_labels(lg, removal_mask(lg, cut), &count);
    out.components.resize(static_cast<std::size_t>(count));
    for (Vertex x = 0; x < n; ++x)
      if (labels[static_cast<std::size_t>(x)] >= 0) out.components[static_cast<std::size_t>(labels[static_cast<std::size_t>(x)])].push_back(x);
    return out;
  };

  for (Vertex w = 0; w < n; ++w) {
    if (w == v) continue;
    if (auto c = accept({v, w})) return *c;
  }
  for (Vertex w1 = 0; w1 < n; ++w1)
    for (Vertex w2 = w1 + 1; w2 < n; ++w2) {
      if (w1 == v || w2 == v) continue;
      if (auto c = accept({v, w1, w2})) return *c;
    }
  const auto nb = lg.neighbors(v);
  if (nb.empty()) throw PreconditionError("centered_vertex_cut: vertex " + std::to_string(v) + " is isolated");
  const Vertex w = nb.front();
  std::vector<Vertex> fallback(lg.neighbors(w).begin(), lg.neighbors(w).end());
  if (auto c = accept(fallback)) return *c;
  throw PreconditionError("centered_vertex_cut: no minimal triangle-free cut of size <= 4 contains vertex " +
                          std::to_string(v));
}

}  // namespace cdc
