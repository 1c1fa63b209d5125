#include "cdc/labeling.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

#include "cdc/cycle_scan.hpp"

namespace cdc {

Labeling::Labeling(std::shared_ptr<const ReducedStructure> rs, std::vector<std::uint8_t> bits)
    : rs_(std::move(rs)), bits_(std::move(bits)) {
  if (!rs_) throw PreconditionError("labeling without a reduced structure");
  if (static_cast<int>(bits_.size()) != rs_->clique_count())
    throw PreconditionError("labeling has " + std::to_string(bits_.size()) + " bits for " +
                            std::to_string(rs_->clique_count()) + " cliques");
  for (auto b : bits_)
    if (b > 1) throw PreconditionError("labeling bit outside {0,1}");
}

void Labeling::flip(int clique) {
  if (clique < 0 || clique >= size()) throw std::out_of_range("unknown clique id " + std::to_string(clique));
  bits_[static_cast<std::size_t>(clique)] ^= 1U;
}

std::uint64_t Labeling::packed() const {
  std::uint64_t out = 0;
  for (int q = 0; q < size() && q < 64; ++q) out |= static_cast<std::uint64_t>(bits_[static_cast<std::size_t>(q)]) << q;
  return out;
}

bool Labeling::is_open(int l2_edge) const {
  const Edge e = rs_->l2.edge(l2_edge);
  // The clique holding an l2 edge is the one both endpoints share.
  for (const CliqueSlot& a : rs_->vertex_cliques[static_cast<std::size_t>(e.u)])
    for (const CliqueSlot& b : rs_->vertex_cliques[static_cast<std::size_t>(e.v)])
      if (a.clique == b.clique) {
        const auto& ce = rs_->cliques[static_cast<std::size_t>(a.clique)].cycle_edges;
        const auto k = std::find(ce.begin(), ce.end(), l2_edge) - ce.begin();
        return (k % 2) == bit(a.clique);
      }
  throw InternalError("l2 edge outside every clique");
}

Labeling initial_labeling(std::shared_ptr<const ReducedStructure> rs, InitialPolicy policy) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(rs->clique_count()), 0);
  if (policy.kind == InitialPolicy::Kind::SeededRandom) {
    std::mt19937_64 rng(policy.seed);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
  }
  return Labeling(std::move(rs), std::move(bits));
}

std::vector<int> open_degrees(const Labeling& lab) {
  const Graph& l2 = lab.structure().l2;
  std::vector<int> deg(static_cast<std::size_t>(l2.vertex_count()), 0);
  for (const ReducedClique& c : lab.structure().cliques)
    for (int k = 0; k < 4; ++k)
      if (k % 2 == lab.bit(c.id)) {
        const Edge e = l2.edge(c.cycle_edges[static_cast<std::size_t>(k)]);
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
      }
  return deg;
}

// --- hex ----------------------------------------------------------------------

std::string bits_to_hex(std::span<const std::uint8_t> bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = std::max<std::size_t>(1, (bits.size() + 3) / 4);
  std::string hex(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = 4 * d + b;
      if (i < bits.size() && bits[i]) nibble |= 1 << b;
    }
    hex[digits - 1 - d] = kDigits[nibble];
  }
  return std::to_string(bits.size()) + ":" + hex;
}

std::string to_hex(const Labeling& lab) { return bits_to_hex(lab.bits()); }

std::string packed_to_hex(std::uint64_t bits, int count) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(count));
  for (int q = 0; q < count; ++q) v[static_cast<std::size_t>(q)] = static_cast<std::uint8_t>((bits >> q) & 1U);
  return bits_to_hex(v);
}

Labeling labeling_from_hex(std::shared_ptr<const ReducedStructure> rs, std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("labeling hex needs '<count>:<hex>'", 0);
  int count = 0;
  for (std::size_t i = 0; i < colon; ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("bad clique count", i);
    count = count * 10 + (text[i] - '0');
  }
  if (count != rs->clique_count())
    throw PreconditionError("labeling hex is for " + std::to_string(count) + " cliques, structure has " +
                            std::to_string(rs->clique_count()));
  const std::string_view hex = text.substr(colon + 1);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(count), 0);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const char ch = hex[hex.size() - 1 - d];
    int nibble = 0;
    if (ch >= '0' && ch <= '9') nibble = ch - '0';
    else if (ch >= 'a' && ch <= 'f') nibble = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') nibble = ch - 'A' + 10;
    else throw ParseError("invalid hex digit", colon + 1 + hex.size() - 1 - d);
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = 4 * d + b;
      if (!(nibble >> b & 1)) continue;
      if (i >= bits.size()) throw ParseError("hex value has bits beyond the clique count", colon + 1);
      bits[i] = 1;
    }
  }
  return Labeling(std::move(rs), std::move(bits));
}

// --- cycles -------------------------------------------------------------------

CycleSet extract_cycles(const Labeling& lab) {
  const CycleScanner scanner(lab.structure());
  CycleSet cs;
  std::vector<int> order, offsets;
  const int count = scanner.walk([&](int q) { return lab.bit(q); }, cs.vertex_cycle, cs.vertex_position, &order, &offsets);
  if (count < 0) throw InternalError("extract_cycles: open degree is not 2 everywhere");
  cs.cycles.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c)
    cs.cycles.emplace_back(order.begin() + offsets[static_cast<std::size_t>(c)],
                           order.begin() + offsets[static_cast<std::size_t>(c) + 1]);
  return cs;
}

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Joining: return "joining";
    case Role::TypeA: return "type_a";
    case Role::TypeB: return "type_b";
  }
  return "?";
}

namespace {

// Length of the open cycle through `start` when `flipped` has its bit toggled.
int cycle_length_with_flip(const Labeling& lab, int flipped, Vertex start) {
  const ReducedStructure& rs = lab.structure();
  auto bit = [&](int q) { return lab.bit(q) ^ (q == flipped ? 1 : 0); };
  int via = 0;
  Vertex x = start;
  int length = 0;
  do {
    const CliqueSlot& leave = rs.vertex_cliques[static_cast<std::size_t>(x)][static_cast<std::size_t>(via)];
    const Vertex y = rs.cliques[static_cast<std::size_t>(leave.clique)]
                         .cycle4[static_cast<std::size_t>(open_partner_position(leave.position, bit(leave.clique)))];
    via = rs.vertex_cliques[static_cast<std::size_t>(y)][0].clique == leave.clique ? 1 : 0;
    x = y;
    ++length;
  } while (x != start);
  return length;
}

}  // namespace

std::vector<CliqueRole> classify_cliques(const Labeling& lab, const CycleSet& cs, ClassifyMethod method) {
  const ReducedStructure& rs = lab.structure();
  std::vector<CliqueRole> roles(static_cast<std::size_t>(rs.clique_count()));
  std::vector<int> lengths(static_cast<std::size_t>(cs.count()));
  for (int c = 0; c < cs.count(); ++c) lengths[static_cast<std::size_t>(c)] = cs.length(c);
  const CycleScanner scanner(rs);
  auto bit = [&](int q) { return lab.bit(q); };

  for (const ReducedClique& c : rs.cliques) {
    CliqueRole& r = roles[static_cast<std::size_t>(c.id)];
    // Each open edge holds exactly one u-side vertex (even position).
    const int a = cs.vertex_cycle[static_cast<std::size_t>(c.cycle4[0])];
    const int b = cs.vertex_cycle[static_cast<std::size_t>(c.cycle4[2])];
    r.cycle_a = std::min(a, b);
    r.cycle_b = std::max(a, b);
    if (a != b) {
      r.role = Role::Joining;
      continue;
    }
    if (method == ClassifyMethod::FlipSimulation) {
      const int after = cycle_length_with_flip(lab, c.id, c.cycle4[0]);
      r.role = after == lengths[static_cast<std::size_t>(a)] ? Role::TypeA : Role::TypeB;
    } else {
      const int d0 = scanner.crossing_direction(bit, c.id, 0, cs.vertex_position, lengths, cs.vertex_cycle);
      const int d2 = scanner.crossing_direction(bit, c.id, 2, cs.vertex_position, lengths, cs.vertex_cycle);
      r.role = d0 == d2 ? Role::TypeB : Role::TypeA;
    }
  }
  return roles;
}

Labeling invert(const Labeling& lab, int clique) {
  Labeling out = lab;
  out.flip(clique);
  return out;
}

IntersectionCounts count_intersections(std::span<const CliqueRole> roles) {
  IntersectionCounts c;
  for (const CliqueRole& r : roles) {
    if (r.role == Role::TypeA) ++c.type_a;
    if (r.role == Role::TypeB) ++c.type_b;
  }
  return c;
}

// --- cycle adjacency ----------------------------------------------------------

bool CycleAdjacencyGraph::connected() const {
  if (node_count == 0) return false;
  const auto adj = adjacency();
  std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int b : adj[static_cast<std::size_t>(a)])
      if (!seen[static_cast<std::size_t>(b)]) {
        seen[static_cast<std::size_t>(b)] = 1;
        ++reached;
        queue.push_back(b);
      }
  }
  return reached == node_count;
}

std::vector<std::vector<int>> CycleAdjacencyGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

CycleAdjacencyGraph cycle_adjacency(const Labeling& lab, const CycleSet& cs, std::span<const CliqueRole> roles) {
  if (static_cast<int>(roles.size()) != lab.size()) throw PreconditionError("cycle_adjacency: role table size mismatch");
  CycleAdjacencyGraph g;
  g.node_count = cs.count();
  for (int q = 0; q < static_cast<int>(roles.size()); ++q) {
    const CliqueRole& r = roles[static_cast<std::size_t>(q)];
    g.witnesses[{r.cycle_a, r.cycle_b}].push_back(q);
  }
  for (const auto& [key, list] : g.witnesses) {
    if (key.first == key.second) g.loops.push_back(key.first);
    else g.edges.push_back(key);
  }
  return g;
}

}  // namespace cdc
