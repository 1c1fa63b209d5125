#include <array>

#include "cdc/graph.hpp"

namespace cdc {

Graph lcf_graph(std::span<const int> jumps, int repeat) {
  const int n = static_cast<int>(jumps.size()) * repeat;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    edges.emplace_back(v, (v + 1) % n);
    const int jump = jumps[static_cast<std::size_t>(v) % jumps.size()];
    edges.emplace_back(v, ((v + jump) % n + n) % n);
  }
  return Graph(n, std::move(edges));
}

namespace {

Graph complete_bipartite_33() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.emplace_back(a, b);
  return Graph(6, std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(edges));
}

// Two copies of K3,3 with edge (0,3) subdivided by a new vertex 6; the two
// subdivision vertices are joined by the bridge.
Graph bridged_gadget() {
  std::vector<Edge> edges;
  for (int copy = 0; copy < 2; ++copy) {
    const int o = 7 * copy;
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b)
        if (!(a == 0 && b == 3)) edges.emplace_back(o + a, o + b);
    edges.emplace_back(o + 0, o + 6);
    edges.emplace_back(o + 6, o + 3);
  }
  edges.emplace_back(6, 13);
  return Graph(14, std::move(edges));
}

}  // namespace

const std::vector<std::string>& named_graphs() {
  static const std::vector<std::string> names = {"k33",       "cube",           "petersen",      "heawood", "pappus",
                                                 "desargues", "moebius_kantor", "bridged_gadget"};
  return names;
}

Graph generate_named(std::string_view name) {
  if (name.starts_with("named:")) name.remove_prefix(6);
  if (name == "k33") return complete_bipartite_33();
  if (name == "cube") {
    constexpr std::array jumps{3, -3};
    return lcf_graph(jumps, 4);
  }
  if (name == "petersen") return petersen();
  if (name == "heawood") {
    constexpr std::array jumps{5, -5};
    return lcf_graph(jumps, 7);
  }
  if (name == "pappus") {
    constexpr std::array jumps{5, 7, -7, 7, -7, -5};
    return lcf_graph(jumps, 3);
  }
  if (name == "desargues") {
    constexpr std::array jumps{5, -5, 9, -9};
    return lcf_graph(jumps, 5);
  }
  if (name == "moebius_kantor") {
    constexpr std::array jumps{5, -5};
    return lcf_graph(jumps, 8);
  }
  if (name == "bridged_gadget") return bridged_gadget();
  throw PreconditionError("unknown graph name '" + std::string(name) + "'");
}

}  // namespace cdc
