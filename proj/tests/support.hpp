#pragma once

// Independent oracles and hand-rolled generators for the tests. Nothing
// here calls the library's own algorithms beyond data accessors.

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cdc/dynamics.hpp"
#include "cdc/labeling.hpp"
#include "cdc/reduced.hpp"

namespace oracle {

using cdc::Edge;
using cdc::Graph;
using cdc::Vertex;

inline const std::vector<std::string>& bridgeless_corpus() {
  static const std::vector<std::string> names{"k33", "cube", "petersen", "heawood", "pappus", "desargues",
                                              "moebius_kantor"};
  return names;
}

// Adjacency lists rebuilt from the edge list only.
inline std::vector<std::vector<int>> adjacency(const Graph& g, int skip_edge = -1) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == skip_edge) continue;
    const Edge e = g.edges()[static_cast<std::size_t>(i)];
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

inline int reach_count(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<char> seen(adj.size(), 0);
  std::deque<int> q{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int count = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop_front();
    for (int y : adj[static_cast<std::size_t>(x)])
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++count;
        q.push_back(y);
      }
  }
  return count;
}

// Connected iff a BFS from every vertex reaches everything.
inline bool connected_all_starts(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  const auto adj = adjacency(g);
  for (int s = 0; s < g.vertex_count(); ++s)
    if (reach_count(adj, s) != g.vertex_count()) return false;
  return true;
}

inline std::vector<Edge> bridges_by_removal(const Graph& g) {
  std::vector<Edge> out;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge e = g.edges()[static_cast<std::size_t>(i)];
    const auto adj = adjacency(g, i);
    std::vector<char> seen(adj.size(), 0);
    std::deque<int> q{e.u};
    seen[static_cast<std::size_t>(e.u)] = 1;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int y : adj[static_cast<std::size_t>(x)])
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          q.push_back(y);
        }
    }
    if (!seen[static_cast<std::size_t>(e.v)]) out.push_back(e);
  }
  return out;
}

// Shortest cycle by iterative deepening over simple paths.
inline int girth_by_paths(const Graph& g) {
  const auto adj = adjacency(g);
  const int n = g.vertex_count();
  for (int len = 3; len <= n; ++len) {
    for (int s = 0; s < n; ++s) {
      std::vector<int> path{s};
      std::vector<char> on(static_cast<std::size_t>(n), 0);
      on[static_cast<std::size_t>(s)] = 1;
      bool found = false;
      auto dfs = [&](auto&& self, int x) -> void {
        if (found) return;
        if (static_cast<int>(path.size()) == len) {
          for (int y : adj[static_cast<std::size_t>(x)])
            if (y == s) found = true;
          return;
        }
        for (int y : adj[static_cast<std::size_t>(x)]) {
          if (on[static_cast<std::size_t>(y)] || y < s) continue;
          on[static_cast<std::size_t>(y)] = 1;
          path.push_back(y);
          self(self, y);
          path.pop_back();
          on[static_cast<std::size_t>(y)] = 0;
        }
      };
      dfs(dfs, s);
      if (found) return len;
    }
  }
  return 0;
}

inline std::vector<std::array<int, 3>> triangles_cubic_time(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) out.push_back({a, b, c});
  return out;
}

// graph6 written row by row from an explicit bit string.
inline std::string graph6_by_bits(const Graph& g) {
  const int n = g.vertex_count();
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits += g.has_edge(i, j) ? '1' : '0';
  while (bits.size() % 6 != 0) bits += '0';
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t k = 0; k < bits.size(); k += 6) out += static_cast<char>(std::stoi(bits.substr(k, 6), nullptr, 2) + 63);
  return out;
}

// Line graph by testing every pair of edges for a shared endpoint.
inline Graph line_graph_pairs(const Graph& g) {
  std::vector<Edge> edges;
  const auto& e = g.edges();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const int shared = (e[i].u == e[j].u) + (e[i].u == e[j].v) + (e[i].v == e[j].u) + (e[i].v == e[j].v);
      if (shared == 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Graph(g.edge_count(), edges);
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

// Open subgraph read edge by edge through Labeling::is_open.
struct OpenGraph {
  std::vector<int> degree;
  std::vector<int> component;
  int components = 0;
};

inline OpenGraph open_graph(const cdc::Labeling& lab) {
  const Graph& l2 = lab.structure().l2;
  OpenGraph og;
  og.degree.assign(static_cast<std::size_t>(l2.vertex_count()), 0);
  UnionFind uf(l2.vertex_count());
  for (int id = 0; id < l2.edge_count(); ++id) {
    if (!lab.is_open(id)) continue;
    const Edge e = l2.edge(id);
    ++og.degree[static_cast<std::size_t>(e.u)];
    ++og.degree[static_cast<std::size_t>(e.v)];
    uf.unite(e.u, e.v);
  }
  std::vector<int> label(static_cast<std::size_t>(l2.vertex_count()), -1);
  og.component.resize(label.size());
  for (int x = 0; x < l2.vertex_count(); ++x) {
    int& l = label[static_cast<std::size_t>(uf.find(x))];
    if (l == -1) l = og.components++;
    og.component[static_cast<std::size_t>(x)] = l;
  }
  return og;
}

// Role by counting open components before and after flipping the clique.
inline cdc::Role role_by_components(const cdc::Labeling& lab, int clique) {
  const OpenGraph before = open_graph(lab);
  const auto& c = lab.structure().cliques[static_cast<std::size_t>(clique)];
  if (before.component[static_cast<std::size_t>(c.cycle4[0])] != before.component[static_cast<std::size_t>(c.cycle4[2])])
    return cdc::Role::Joining;
  cdc::Labeling flipped = lab;
  flipped.flip(clique);
  return open_graph(flipped).components > before.components ? cdc::Role::TypeB : cdc::Role::TypeA;
}

inline std::pair<int, int> counts_by_components(const cdc::Labeling& lab) {
  int a = 0, b = 0;
  for (int q = 0; q < lab.size(); ++q) {
    const auto r = role_by_components(lab, q);
    a += r == cdc::Role::TypeA;
    b += r == cdc::Role::TypeB;
  }
  return {a, b};
}

inline cdc::Labeling random_labeling(const std::shared_ptr<const cdc::ReducedStructure>& rs, std::mt19937_64& rng) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(rs->clique_count()));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
  return cdc::Labeling(rs, std::move(bits));
}

inline cdc::Labeling from_packed(const std::shared_ptr<const cdc::ReducedStructure>& rs, std::uint64_t packed) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(rs->clique_count()));
  for (std::size_t q = 0; q < bits.size(); ++q) bits[q] = static_cast<std::uint8_t>((packed >> q) & 1U);
  return cdc::Labeling(rs, std::move(bits));
}

// Random connected simple triangle-free cubic graph from the pairing model.
inline Graph random_cubic(int n, std::mt19937_64& rng, bool require_bridgeless) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);
    std::set<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      if (points[i] == points[i + 1]) ok = false;
      else ok = edges.insert(Edge(points[i], points[i + 1])).second;
    }
    if (!ok) continue;
    Graph g(n, std::vector<Edge>(edges.begin(), edges.end()));
    if (!connected_all_starts(g) || !triangles_cubic_time(g).empty()) continue;
    if (require_bridgeless && !bridges_by_removal(g).empty()) continue;
    return g;
  }
  throw std::runtime_error("random_cubic: no graph found");
}

inline std::shared_ptr<const cdc::ReducedStructure> reduced(const Graph& g) {
  return std::make_shared<const cdc::ReducedStructure>(cdc::build_reduced(g));
}

inline std::shared_ptr<const cdc::ReducedStructure> reduced(const std::string& name) {
  return reduced(cdc::generate_named(name));
}

}  // namespace oracle
