#include "cdc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

namespace cdc {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  index();
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw PreconditionError("loop edge at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n_) throw PreconditionError("edge " + to_string(e) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  index();
}

void Graph::index() {
  adj_.assign(static_cast<std::size_t>(n_), {});
  inc_.assign(static_cast<std::size_t>(n_), {});
  for (int id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[static_cast<std::size_t>(id)];
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    inc_[static_cast<std::size_t>(e.u)].push_back(id);
    inc_[static_cast<std::size_t>(e.v)].push_back(id);
  }
  // Neighbor lists sorted, incident edge ids kept in matching order.
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    std::vector<std::pair<Vertex, int>> tmp;
    tmp.reserve(adj_[v].size());
    for (std::size_t i = 0; i < adj_[v].size(); ++i) tmp.emplace_back(adj_[v][i], inc_[v][i]);
    std::sort(tmp.begin(), tmp.end());
    for (std::size_t i = 0; i < tmp.size(); ++i) {
      adj_[v][i] = tmp[i].first;
      inc_[v][i] = tmp[i].second;
    }
  }
}

std::optional<int> Graph::edge_id(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
  const auto& nb = adj_[static_cast<std::size_t>(a)];
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return inc_[static_cast<std::size_t>(a)][static_cast<std::size_t>(it - nb.begin())];
}

Graph Graph::without_edges(std::span<const int> ids) const {
  std::vector<char> drop(edges_.size(), 0);
  for (int id : ids) drop[static_cast<std::size_t>(id)] = 1;
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (!drop[i]) kept.push_back(edges_[i]);
  return Graph(n_, std::move(kept));
}

// --- structure ----------------------------------------------------------------

std::vector<int> component_labels(const Graph& g, const std::vector<char>& removed, int* count) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    if (!removed.empty() && removed[static_cast<std::size_t>(s)]) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (comp[static_cast<std::size_t>(y)] != -1) continue;
        if (!removed.empty() && removed[static_cast<std::size_t>(y)]) continue;
        comp[static_cast<std::size_t>(y)] = next;
        stack.push_back(y);
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  int count = 0;
  component_labels(g, {}, &count);
  return count == 1;
}

std::vector<Edge> find_bridges(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> bridges;
  int time = 0;

  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = time++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      auto ie = g.incident_edges(f.v);
      if (f.next < nb.size()) {
        const std::size_t i = f.next++;
        const Vertex w = nb[i];
        if (ie[i] == f.parent_edge) continue;
        auto& dw = disc[static_cast<std::size_t>(w)];
        if (dw == -1) {
          dw = low[static_cast<std::size_t>(w)] = time++;
          stack.push_back({w, ie[i], 0});
        } else {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], dw);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          const Vertex p = stack.back().v;
          low[static_cast<std::size_t>(p)] =
              std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(done.v)]);
          if (low[static_cast<std::size_t>(done.v)] > disc[static_cast<std::size_t>(p)])
            bridges.push_back(g.edge(done.parent_edge));
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::optional<int> girth(const Graph& g) {
  // Shortest cycle through edge (u,v) is dist_{G-e}(u,v) + 1.
  const auto n = static_cast<std::size_t>(g.vertex_count());
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::deque<Vertex> queue;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge e = g.edge(id);
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(e.u)] = 0;
    queue.assign(1, e.u);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      if (dist[static_cast<std::size_t>(x)] + 2 >= best) break;
      auto nb = g.neighbors(x);
      auto ie = g.incident_edges(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (ie[i] == id || dist[static_cast<std::size_t>(nb[i])] != -1) continue;
        dist[static_cast<std::size_t>(nb[i])] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(nb[i]);
      }
    }
    if (dist[static_cast<std::size_t>(e.v)] != -1) best = std::min(best, dist[static_cast<std::size_t>(e.v)] + 1);
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

StructuralReport structural_report(const Graph& g) {
  StructuralReport r;
  r.connected = is_connected(g);
  if (g.vertex_count() > 0) {
    const int d0 = g.degree(0);
    bool regular = true;
    for (Vertex v = 1; v < g.vertex_count(); ++v) regular = regular && g.degree(v) == d0;
    if (regular) r.regular_degree = d0;
  }
  r.is_cubic = r.regular_degree == 3;
  r.bridges = find_bridges(g);
  r.girth = girth(g);
  r.triangle_free = !r.girth || *r.girth >= 4;
  return r;
}

// --- edge list ------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

long long parse_int_token(std::string_view tok, std::size_t offset) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("non-integer token '" + std::string(tok) + "'", offset);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<long long> declared;
  std::vector<Edge> edges;
  long long max_id = -1;
  std::size_t line_start = 0;
  bool first_content = true;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      const auto off = static_cast<std::size_t>(line.data() - text.data());
      if (first_content && line.front() == 'n') {
        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'n = <count>'", off);
        auto tok = trim(line.substr(eq + 1));
        long long n = parse_int_token(tok, off + eq + 1);
        if (n < 0) throw ParseError("negative vertex count", off);
        declared = n;
      } else {
        std::vector<std::pair<std::string_view, std::size_t>> toks;
        std::size_t i = 0;
        while (i < line.size()) {
          while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
          std::size_t j = i;
          while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
          if (j > i) toks.emplace_back(line.substr(i, j - i), off + i);
          i = j;
        }
        if (toks.size() != 2) throw ParseError("expected two vertex ids per line", off);
        long long a = parse_int_token(toks[0].first, toks[0].second);
        long long b = parse_int_token(toks[1].first, toks[1].second);
        if (a < 0 || b < 0) throw ParseError("negative vertex id", a < 0 ? toks[0].second : toks[1].second);
        if (a == b) throw ParseError("loop edge " + std::to_string(a) + " " + std::to_string(b), off);
        if (a > std::numeric_limits<int>::max() / 2 || b > std::numeric_limits<int>::max() / 2)
          throw ParseError("vertex id too large", off);
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        max_id = std::max({max_id, a, b});
      }
      first_content = false;
    }
    line_start = line_end + 1;
  }
  long long n = declared.value_or(max_id + 1);
  if (max_id >= n) throw ParseError("vertex id " + std::to_string(max_id) + " exceeds declared n", 0);
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n = " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

// --- DOT --------------------------------------------------------------------------

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g, const DotDecorations& deco) {
  std::ostringstream out;
  out << "graph " << quote(deco.name) << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (auto it = deco.vertex_label.find(v); it != deco.vertex_label.end())
      out << " [label=" << quote(it->second) << "]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    std::vector<std::string> attrs;
    if (auto it = deco.edge_color.find(e); it != deco.edge_color.end()) attrs.push_back("color=" + quote(it->second));
    if (auto it = deco.edge_label.find(e); it != deco.edge_label.end()) attrs.push_back("label=" + quote(it->second));
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cdc
