#include "cdc/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <unordered_set>

#include "cdc/cycle_scan.hpp"

namespace cdc {

namespace {

// Cycle membership and roles of one labeling, computed with the direction rule.
struct Snapshot {
  int cycles = 0;
  int type_a = 0;
  int type_b = 0;
  std::vector<int> vc, vp, len;
  std::vector<Role> roles;
  std::vector<std::array<int, 2>> sides;  // cycles at u-side positions 0 and 2
};

Snapshot snapshot(const CycleScanner& scanner, std::span<const std::uint8_t> bits) {
  auto bit = [&](int q) { return static_cast<int>(bits[static_cast<std::size_t>(q)]); };
  Snapshot s;
  s.cycles = scanner.walk(bit, s.vc, s.vp);
  if (s.cycles < 0) throw InternalError("labeling walk hit a vertex twice");
  s.len.assign(static_cast<std::size_t>(s.cycles), 0);
  for (int c : s.vc) ++s.len[static_cast<std::size_t>(c)];
  const int m = scanner.clique_count();
  s.roles.assign(static_cast<std::size_t>(m), Role::Joining);
  s.sides.resize(static_cast<std::size_t>(m));
  for (int q = 0; q < m; ++q) {
    const auto& cyc = scanner.cycle4(q);
    const int a = s.vc[static_cast<std::size_t>(cyc[0])];
    const int b = s.vc[static_cast<std::size_t>(cyc[2])];
    s.sides[static_cast<std::size_t>(q)] = {a, b};
    if (a != b) continue;
    const int d0 = scanner.crossing_direction(bit, q, 0, s.vp, s.len, s.vc);
    const int d2 = scanner.crossing_direction(bit, q, 2, s.vp, s.len, s.vc);
    if (d0 == d2) {
      s.roles[static_cast<std::size_t>(q)] = Role::TypeB;
      ++s.type_b;
    } else {
      s.roles[static_cast<std::size_t>(q)] = Role::TypeA;
      ++s.type_a;
    }
  }
  return s;
}

std::vector<std::uint8_t> copy_bits(const Labeling& lab) { return {lab.bits().begin(), lab.bits().end()}; }

}  // namespace

// --- type B reduction ------------------------------------------------------------

Labeling reduce_type_b(const Labeling& lab, long long* flips) {
  const CycleScanner scanner(lab.structure());
  std::vector<std::uint8_t> bits = copy_bits(lab);
  Snapshot s = snapshot(scanner, bits);
  while (s.type_b > 0) {
    const auto it = std::find(s.roles.begin(), s.roles.end(), Role::TypeB);
    bits[static_cast<std::size_t>(it - s.roles.begin())] ^= 1U;
    if (flips) ++*flips;
    const int before = s.cycles;
    const int a_before = s.type_a;
    s = snapshot(scanner, bits);
    if (s.cycles != before + 1) throw InternalError("TypeB flip did not split a cycle");
    if (s.type_a > a_before) throw InternalError("TypeB flip increased the TypeA count");
  }
  return Labeling(lab.structure_ptr(), std::move(bits));
}

// --- joins ---------------------------------------------------------------------------

JoinResult join_cycles(const Labeling& lab, int cycle_a, int cycle_b) {
  const CycleScanner scanner(lab.structure());
  std::vector<std::uint8_t> bits = copy_bits(lab);
  const Snapshot s = snapshot(scanner, bits);
  if (cycle_a < 0 || cycle_a >= s.cycles || cycle_b < 0 || cycle_b >= s.cycles)
    throw PreconditionError("join_cycles: unknown cycle id");
  JoinResult result{Labeling(lab), {}};
  if (cycle_a == cycle_b) return result;

  // Lowest-id joining witness for each adjacent pair of cycles.
  std::map<std::pair<int, int>, int> witness;
  for (int q = 0; q < scanner.clique_count(); ++q) {
    if (s.roles[static_cast<std::size_t>(q)] != Role::Joining) continue;
    const auto [x, y] = s.sides[static_cast<std::size_t>(q)];
    witness.try_emplace({std::min(x, y), std::max(x, y)}, q);
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(s.cycles));
  for (const auto& [key, q] : witness) {
    adj[static_cast<std::size_t>(key.first)].push_back(key.second);
    adj[static_cast<std::size_t>(key.second)].push_back(key.first);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::vector<int> parent(static_cast<std::size_t>(s.cycles), -1);
  parent[static_cast<std::size_t>(cycle_a)] = cycle_a;
  std::deque<int> queue{cycle_a};
  while (!queue.empty() && parent[static_cast<std::size_t>(cycle_b)] == -1) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : adj[static_cast<std::size_t>(x)])
      if (parent[static_cast<std::size_t>(y)] == -1) {
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
  }
  if (parent[static_cast<std::size_t>(cycle_b)] == -1)
    throw InternalError("join_cycles: cycle adjacency graph is disconnected");

  std::vector<int> path{cycle_b};
  while (path.back() != cycle_a) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  if (path.size() == 2) return result;  // already adjacent

  // Each witness joins the cycle grown so far with the next one on the path.
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int q = witness.at({std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])});
    bits[static_cast<std::size_t>(q)] ^= 1U;
    result.flipped.push_back(q);
  }
  const Snapshot after = snapshot(scanner, bits);
  if (after.cycles != s.cycles - static_cast<int>(result.flipped.size()))
    throw InternalError("join_cycles: a witness flip did not merge two cycles");
  for (int q : result.flipped)
    if (after.roles[static_cast<std::size_t>(q)] != Role::TypeB)
      throw InternalError("join_cycles: flipped clique " + std::to_string(q) + " is not TypeB");
  result.labeling = Labeling(lab.structure_ptr(), std::move(bits));
  return result;
}

// --- type A resolution --------------------------------------------------------------

std::optional<ResolveResult> resolve_type_a(const Labeling& lab, int clique, int depth, ResolveOptions options) {
  const ReducedStructure& rs = lab.structure();
  if (clique < 0 || clique >= rs.clique_count()) throw PreconditionError("resolve_type_a: unknown clique id");
  if (depth < 1) throw PreconditionError("resolve_type_a: depth must be positive");
  const CycleScanner scanner(rs);
  const std::vector<std::uint8_t> root_bits = copy_bits(lab);
  const Snapshot root = snapshot(scanner, root_bits);
  if (root.roles[static_cast<std::size_t>(clique)] != Role::TypeA)
    throw PreconditionError("resolve_type_a: clique " + std::to_string(clique) + " is not TypeA");

  // Cliques whose source edge lies in, or next to, the lifted cut around the target.
  std::vector<char> near_cut(static_cast<std::size_t>(rs.clique_count()), 0);
  try {
    const CenteredVertexCut cut = centered_vertex_cut(rs.line.lg, clique);
    for (Vertex x : cut.cut) {
      near_cut[static_cast<std::size_t>(x)] = 1;
      for (Vertex y : rs.line.lg.neighbors(x)) near_cut[static_cast<std::size_t>(y)] = 1;
    }
  } catch (const PreconditionError&) {
    // A bridge: no centered cut exists, every clique stays in the last tier.
  }

  struct Node {
    std::vector<std::uint8_t> bits;
    std::vector<int> flips;
  };
  std::vector<Node> nodes;
  using Key = std::tuple<int, int, int, int>;  // (type_a, target still A, depth, node index)
  std::priority_queue<Key, std::vector<Key>, std::greater<>> open;
  std::unordered_set<std::string> seen;
  auto key_of = [](const std::vector<std::uint8_t>& b) { return std::string(b.begin(), b.end()); };

  nodes.push_back({root_bits, {}});
  open.emplace(root.type_a, 1, 0, 0);
  seen.insert(key_of(root_bits));
  int evaluated = 0;

  while (!open.empty()) {
    const auto [a_count, target_a, d, index] = open.top();
    open.pop();
    (void)a_count;
    (void)target_a;
    if (d >= depth) continue;
    const Node node = nodes[static_cast<std::size_t>(index)];
    const Snapshot s = snapshot(scanner, node.bits);
    const int target_cycle = s.sides[static_cast<std::size_t>(clique)][0];

    std::vector<std::pair<int, int>> moves;  // (tier, clique)
    for (int q = 0; q < rs.clique_count(); ++q) {
      const auto [x, y] = s.sides[static_cast<std::size_t>(q)];
      int tier = 3;
      if (x == y && x == target_cycle) tier = 0;
      else if (x == target_cycle || y == target_cycle) tier = 1;
      else if (near_cut[static_cast<std::size_t>(q)]) tier = 2;
      moves.emplace_back(tier, q);
    }
    std::sort(moves.begin(), moves.end());

    for (const auto& [tier, q] : moves) {
      (void)tier;
      std::vector<std::uint8_t> child = node.bits;
      child[static_cast<std::size_t>(q)] ^= 1U;
      if (!seen.insert(key_of(child)).second) continue;
      if (++evaluated > options.node_budget) return std::nullopt;
      const Snapshot cs = snapshot(scanner, child);
      std::vector<int> flips = node.flips;
      flips.push_back(q);
      const bool still_a = cs.roles[static_cast<std::size_t>(clique)] == Role::TypeA;
      if (cs.type_a < root.type_a && !still_a)
        return ResolveResult{Labeling(lab.structure_ptr(), std::move(child)), std::move(flips), root.type_a,
                             cs.type_a};
      nodes.push_back({std::move(child), std::move(flips)});
      open.emplace(cs.type_a, still_a ? 1 : 0, d + 1, static_cast<int>(nodes.size()) - 1);
    }
  }
  return std::nullopt;
}

// --- search ---------------------------------------------------------------------------

std::string_view to_string(SearchStatus s) {
  return s == SearchStatus::Solved ? "solved" : "budget_exhausted";
}

void SearchConfig::validate() const {
  if (max_restarts <= 0) throw PreconditionError("max_restarts must be positive");
  if (max_flips_per_attempt <= 0) throw PreconditionError("max_flips_per_attempt must be positive");
  if (resolution_depth <= 0) throw PreconditionError("resolution_depth must be positive");
  if (enumerate_threshold <= 0 || enumerate_threshold > 63)
    throw PreconditionError("enumerate_threshold must lie in [1, 63]");
  if (resolve_node_budget <= 0) throw PreconditionError("resolve_node_budget must be positive");
  if (threads <= 0) throw PreconditionError("threads must be positive");
  if (anneal) anneal->validate();
}

namespace {

struct Attempt {
  bool solved = false;
  std::vector<std::uint8_t> bits;
  std::vector<TraceEntry> trace;
  long long flips = 0;
  int type_a = 0;
  int type_b = 0;
};

Attempt run_attempt(const std::shared_ptr<const ReducedStructure>& rs, const SearchConfig& cfg, int attempt_index) {
  const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(attempt_index);
  Attempt out;
  int round = 0;
  auto record = [&](const char* event, const Labeling& lab) {
    const auto c = CycleScanner(*rs).counts(lab.bits());
    out.trace.push_back({attempt_index, seed, round, event, c.type_a, c.type_b, c.cycles, out.flips});
    out.type_a = c.type_a;
    out.type_b = c.type_b;
  };

  Labeling lab = cfg.anneal ? anneal(rs, *cfg.anneal, seed).labeling
                            : initial_labeling(rs, InitialPolicy::seeded_random(seed));
  record("initial", lab);
  lab = reduce_type_b(lab, &out.flips);
  record("reduce_type_b", lab);

  while (out.type_a > 0) {
    if (out.flips >= cfg.max_flips_per_attempt) {
      record("flip_budget", lab);
      break;
    }
    ++round;
    const CycleSet cs = extract_cycles(lab);
    const auto roles = classify_cliques(lab, cs, ClassifyMethod::Interleaving);
    std::optional<ResolveResult> resolved;
    for (int q = 0; q < lab.size() && !resolved; ++q)
      if (roles[static_cast<std::size_t>(q)].role == Role::TypeA)
        resolved = resolve_type_a(lab, q, cfg.resolution_depth, {cfg.resolve_node_budget});
    if (!resolved) {
      record("stuck", lab);
      break;
    }
    if (resolved->type_a_after >= resolved->type_a_before)
      throw InternalError("resolution did not decrease the TypeA count");
    out.flips += static_cast<long long>(resolved->flips.size());
    lab = resolved->labeling;
    record("resolve_type_a", lab);
    lab = reduce_type_b(lab, &out.flips);
    record("reduce_type_b", lab);
  }
  out.solved = out.type_a == 0 && out.type_b == 0;
  out.bits.assign(lab.bits().begin(), lab.bits().end());
  return out;
}

}  // namespace

SearchOutcome search_cdc_labeling(std::shared_ptr<const ReducedStructure> rs, const SearchConfig& cfg) {
  if (!rs) throw PreconditionError("search without a reduced structure");
  cfg.validate();

  std::vector<Attempt> done;
  int winner = -1;
  for (int base = 0; base < cfg.max_restarts && winner < 0; base += cfg.threads) {
    const int batch = std::min(cfg.threads, cfg.max_restarts - base);
    std::vector<Attempt> results(static_cast<std::size_t>(batch));
    if (batch == 1) {
      results[0] = run_attempt(rs, cfg, base);
    } else {
      std::vector<std::future<Attempt>> futures;
      for (int i = 0; i < batch; ++i)
        futures.push_back(std::async(std::launch::async, run_attempt, std::cref(rs), std::cref(cfg), base + i));
      for (int i = 0; i < batch; ++i) results[static_cast<std::size_t>(i)] = futures[static_cast<std::size_t>(i)].get();
    }
    // Lowest seed wins, so results beyond the first solved attempt are dropped.
    for (Attempt& a : results) {
      done.push_back(std::move(a));
      if (done.back().solved) {
        winner = static_cast<int>(done.size()) - 1;
        break;
      }
    }
  }

  int chosen = winner;
  if (chosen < 0) {
    chosen = 0;
    for (int i = 1; i < static_cast<int>(done.size()); ++i) {
      const Attempt& a = done[static_cast<std::size_t>(i)];
      const Attempt& b = done[static_cast<std::size_t>(chosen)];
      if (std::tie(a.type_a, a.type_b) < std::tie(b.type_a, b.type_b)) chosen = i;
    }
  }
  SearchOutcome out{winner >= 0 ? SearchStatus::Solved : SearchStatus::BudgetExhausted,
                    Labeling(rs, done[static_cast<std::size_t>(chosen)].bits),
                    {},
                    0,
                    cfg.seed + static_cast<std::uint64_t>(chosen),
                    static_cast<int>(done.size())};
  for (const Attempt& a : done) {
    out.trace.insert(out.trace.end(), a.trace.begin(), a.trace.end());
    out.flips_applied += a.flips;
  }
  return out;
}

}  // namespace cdc
