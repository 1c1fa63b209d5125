#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdc {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Thrown for inputs that violate a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal invariant is found broken.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text-format error carrying the byte offset where decoding failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Edges are kept sorted and deduplicated; an edge's id is its index in
/// edges(). Two graphs compare equal iff they have the same vertex count and
/// the same edge set.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Duplicate edges are merged. Throws PreconditionError on loops or ids out of range.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  /// Neighbors in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  /// Ids of incident edges, ordered like neighbors().
  std::span<const int> incident_edges(Vertex v) const { return inc_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }
  std::optional<int> edge_id(Vertex a, Vertex b) const;

  /// Copy without the given edge ids.
  Graph without_edges(std::span<const int> ids) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void index();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<int>> inc_;
};

struct StructuralReport {
  bool connected = false;
  std::optional<int> regular_degree;
  bool is_cubic = false;
  bool triangle_free = true;
  std::vector<Edge> bridges;
  std::optional<int> girth;
};

/// Connectivity, regularity, bridges (single low-link DFS), girth.
/// The empty graph reports connected = false.
StructuralReport structural_report(const Graph& g);

bool is_connected(const Graph& g);
std::vector<Edge> find_bridges(const Graph& g);
std::optional<int> girth(const Graph& g);
/// Component id per vertex; vertices with removed[v] set get -1.
std::vector<int> component_labels(const Graph& g, const std::vector<char>& removed, int* count = nullptr);

// --- text formats -----------------------------------------------------------

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Lines of "u v"; an optional first line "n = <count>"; '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

struct DotDecorations {
  std::string name = "G";
  std::map<Edge, std::string> edge_color;
  std::map<Edge, std::string> edge_label;
  std::map<Vertex, std::string> vertex_label;
};

std::string to_dot(const Graph& g, const DotDecorations& deco = {});

// --- generators -------------------------------------------------------------

/// k33, cube, petersen, heawood, pappus, desargues, moebius_kantor, bridged_gadget.
/// A leading "named:" is ignored.
Graph generate_named(std::string_view name);
const std::vector<std::string>& named_graphs();
/// Graph from LCF notation [jumps]^repeat on a Hamiltonian cycle.
Graph lcf_graph(std::span<const int> jumps, int repeat);

}  // namespace cdc
