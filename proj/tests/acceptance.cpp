// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <thread>

#include "cdc/anneal.hpp"
#include "cdc/halfedge.hpp"
#include "cdc/projection.hpp"
#include "support.hpp"

using namespace cdc;

namespace {

// Tolerances and budgets, pinned.
constexpr double kConstructionSecondsPerGraph = 1.0;
constexpr int kLabelingsPerGraph = 1000;
constexpr double kK33Seconds = 5.0;
constexpr double kPetersenSeconds = 60.0;
constexpr double kSearchSecondsPerGraph = 10.0;
constexpr double kBridgeSlowSeconds = 600.0;
constexpr double kBridgeSampledSeconds = 10.0;
constexpr int kBridgeSamples = 10'000;
constexpr double kHalfEdgeSecondsPerGraph = 1.0;
constexpr int kToyProposals = 100'000;
constexpr double kSigmas = 3.0;
constexpr int kAnnealSeeds = 10;
constexpr int kAnnealRequired = 8;
constexpr std::uint64_t kSearchSeed = 7;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// Cycles of the open subgraph, unified across each clique.
bool cycle_graph_connected(const Labeling& lab, const oracle::OpenGraph& og) {
  oracle::UnionFind uf(og.components);
  for (const auto& c : lab.structure().cliques)
    for (Vertex x : c.cycle4) uf.unite(og.component[static_cast<std::size_t>(c.cycle4[0])], og.component[static_cast<std::size_t>(x)]);
  for (int k = 0; k < og.components; ++k)
    if (uf.find(k) != uf.find(0)) return false;
  return true;
}

Check construction_counts() {
  Check ck;
  for (const auto& name : oracle::bridgeless_corpus()) {
    const auto t0 = Clock::now();
    const Graph g = generate_named(name);
    const ReducedStructure rs = build_reduced(g);
    const int m = g.edge_count();
    const Graph& l2 = rs.l2;
    ck.require(l2.vertex_count() == 2 * m, name + ": vertex count");
    ck.require(l2.edge_count() == 4 * m, name + ": edge count");
    for (Vertex x = 0; x < l2.vertex_count(); ++x) ck.require(l2.degree(x) == 4, name + ": not 4-regular");
    ck.require(oracle::connected_all_starts(l2), name + ": not connected");
    ck.require(oracle::triangles_cubic_time(l2).empty(), name + ": has a triangle");
    ck.require(rs.clique_count() == m, name + ": clique count");
    std::vector<int> cover(static_cast<std::size_t>(l2.edge_count()), 0);
    for (const auto& c : rs.cliques)
      for (int i = 0; i < 4; ++i) {
        const auto a = c.cycle4[static_cast<std::size_t>(i)], b = c.cycle4[static_cast<std::size_t>((i + 1) % 4)];
        const auto id = l2.edge_id(a, b);
        ck.require(id.has_value(), name + ": clique side missing");
        if (id) ++cover[static_cast<std::size_t>(*id)];
      }
    for (int n : cover) ck.require(n == 1, name + ": cliques do not partition the edges");
    ck.require(seconds_since(t0) < kConstructionSecondsPerGraph, name + ": too slow");
  }
  return ck;
}

Check labeling_laws() {
  Check ck;
  for (const auto& name : oracle::bridgeless_corpus()) {
    auto rs = oracle::reduced(name);
    std::mt19937_64 rng(1000 + std::hash<std::string>{}(name) % 1000);
    for (int t = 0; t < kLabelingsPerGraph && ck.ok; ++t) {
      const Labeling lab = oracle::random_labeling(rs, rng);
      const auto og = oracle::open_graph(lab);
      for (int d : og.degree) ck.require(d == 2, name + ": open subgraph not 2-regular");
      const CycleSet cs = extract_cycles(lab);
      ck.require(cs.count() == og.components, name + ": cycle count differs from open components");
      std::vector<int> seen(static_cast<std::size_t>(rs->l2.vertex_count()), 0);
      for (const auto& cyc : cs.cycles)
        for (Vertex x : cyc) ++seen[static_cast<std::size_t>(x)];
      for (int n : seen) ck.require(n == 1, name + ": cycles not a disjoint cover");
      const auto roles = classify_cliques(lab, cs, ClassifyMethod::FlipSimulation);
      ck.require(static_cast<int>(roles.size()) == lab.size(), name + ": roles not total");
      for (int q = 0; q < lab.size(); ++q) {
        ck.require(roles[static_cast<std::size_t>(q)].role == oracle::role_by_components(lab, q),
                   name + ": role differs from component oracle");
        ck.require(invert(invert(lab, q), q) == lab, name + ": flip not an involution");
      }
      ck.require(cycle_graph_connected(lab, og), name + ": cycle graph disconnected");
      ck.require(cycle_adjacency(lab, cs, roles).connected(), name + ": library cycle graph disconnected");
    }
  }
  return ck;
}

// Shared by criteria 3 and 4: exhaustive enumeration checked against projections.
Check exhaustive(const std::string& name, double budget, bool all_walks) {
  Check ck;
  const auto t0 = Clock::now();
  auto rs = oracle::reduced(name);
  const int m = rs->clique_count();
  long long free = 0;
  std::uint64_t total = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    ++total;
    const Labeling lab = oracle::from_packed(rs, bits);
    const CycleSet cs = extract_cycles(lab);
    const auto counts = count_intersections(classify_cliques(lab, cs, ClassifyMethod::Interleaving));
    const WalkCover wc = project_pi(cs, *rs);
    if (all_walks) {
      std::map<Edge, int> trav;
      for (const auto& w : wc.walks)
        for (std::size_t i = 0; i < w.size(); ++i) ++trav[Edge(w[i], w[(i + 1) % w.size()])];
      ck.require(static_cast<int>(trav.size()) == rs->source.edge_count(), name + ": walk cover misses an edge");
      for (const auto& [e, n] : trav) ck.require(n == 2 && rs->source.has_edge(e.u, e.v), name + ": edge not traversed twice");
    }
    if (counts.type_a != 0 || counts.type_b != 0) continue;
    ++free;
    const CdcCertificate cert = verify_cdc(rs->source, wc);
    ck.require(cert.valid_cdc, name + ": intersection-free labeling gives an invalid cover");
    std::map<Edge, std::set<std::size_t>> on;
    for (std::size_t w = 0; w < wc.walks.size(); ++w) {
      const auto& s = wc.walks[w];
      std::set<Vertex> distinct(s.begin(), s.end());
      ck.require(distinct.size() == s.size(), name + ": cycle not simple");
      for (std::size_t i = 0; i < s.size(); ++i) on[Edge(s[i], s[(i + 1) % s.size()])].insert(w);
    }
    for (const auto& [e, walks] : on) ck.require(walks.size() == 2, name + ": edge not on two distinct cycles");
  }
  ck.require(total == (std::uint64_t{1} << m), name + ": enumeration incomplete");
  ck.require(free >= 1, name + ": no intersection-free labeling");
  const double s = seconds_since(t0);
  ck.require(s < budget, name + ": too slow");
  if (ck.ok) ck.detail = std::to_string(free) + " intersection-free of " + std::to_string(total);
  return ck;
}

Check search_pipeline() {
  Check ck;
  for (const auto& name : oracle::bridgeless_corpus()) {
    const auto t0 = Clock::now();
    auto rs = oracle::reduced(name);
    SearchConfig cfg;
    cfg.seed = kSearchSeed;
    const SearchOutcome out = search_cdc_labeling(rs, cfg);
    ck.require(out.status == SearchStatus::Solved, name + ": not solved");
    const CdcCertificate cert = pipeline(rs->source, cfg);
    ck.require(cert.valid_cdc, name + ": certificate invalid");
    const SearchOutcome again = search_cdc_labeling(rs, cfg);
    ck.require(again.trace == out.trace && again.labeling == out.labeling, name + ": not deterministic");
    ck.require(pipeline(rs->source, cfg).cycles == cert.cycles, name + ": certificate not deterministic");
    for (std::size_t i = 1; i < out.trace.size(); ++i) {
      const TraceEntry& prev = out.trace[i - 1];
      const TraceEntry& cur = out.trace[i];
      if (cur.attempt != prev.attempt) continue;
      ck.require(cur.type_a <= prev.type_a, name + ": type_a increased");
      if (cur.event == "resolve_type_a") ck.require(cur.type_a < prev.type_a, name + ": resolution not strict");
    }
    ck.require(seconds_since(t0) < kSearchSecondsPerGraph, name + ": too slow");
  }
  return ck;
}

Check bridge_negative() {
  Check ck;
  auto rs = oracle::reduced("bridged_gadget");
  const int m = rs->clique_count();

  auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  for (int t = 0; t < kBridgeSamples; ++t) {
    const Labeling lab = oracle::random_labeling(rs, rng);
    const auto counts = count_intersections(classify_cliques(lab, extract_cycles(lab)));
    ck.require(counts.type_a >= 1, "sampled labeling without TypeA");
  }
  const double sampled = seconds_since(t0);
  ck.require(sampled < kBridgeSampledSeconds, "sampled test too slow");

  t0 = Clock::now();
  EnumerateOptions opt;
  opt.threads = threads();
  const EnumerationSummary sum = enumerate_labelings(*rs, opt, [](const EnumRecord&) {});
  const double slow = seconds_since(t0);
  ck.require(sum.total == (std::uint64_t{1} << m), "exhaustive run incomplete");
  ck.require(sum.intersection_free == 0, "intersection-free labeling on a bridged graph");
  ck.require(sum.min_type_a >= 1, "labeling without TypeA on a bridged graph");
  ck.require(slow < kBridgeSlowSeconds, "exhaustive run too slow");

  SearchConfig cfg;
  cfg.seed = kSearchSeed;
  const CdcCertificate cert = pipeline(rs->source, cfg);
  ck.require(!cert.valid_cdc, "pipeline certified a bridged graph");
  ck.require(cert.stats && cert.stats->search_status == "budget_exhausted", "pipeline status not budget_exhausted");
  const auto bridges = oracle::bridges_by_removal(rs->source);
  bool cites = false;
  for (const auto& v : cert.violations) cites |= v.kind == "bridge" && v.edge && !bridges.empty() && *v.edge == bridges[0];
  ck.require(cites, "pipeline does not cite the bridge");
  if (ck.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "2^%d exhaustive in %.1fs, %d samples in %.2fs, min type_a %d", m, slow, kBridgeSamples,
                  sampled, sum.min_type_a);
    ck.detail = buf;
  }
  return ck;
}

Check halfedge_equivalence() {
  Check ck;
  for (const auto& name : oracle::bridgeless_corpus()) {
    const auto t0 = Clock::now();
    const Graph g = generate_named(name);
    const HalfEdgeStructure hes = build_half_edge(g);
    const EquivalenceReport r = equivalence_check(hes, contract_pairs(hes), build_reduced(g));
    ck.require(r.ok, name + ": " + (r.first_mismatch() ? *r.first_mismatch() : std::string("not equivalent")));
    ck.require(seconds_since(t0) < kHalfEdgeSecondsPerGraph, name + ": too slow");
  }
  return ck;
}

Check verifier_independence() {
  Check ck;
  const Graph cube = generate_named("cube");
  const std::vector<std::vector<Vertex>> faces{{0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 6, 7},
                                               {6, 7, 0, 1}, {0, 3, 4, 7}, {1, 2, 5, 6}};
  ck.require(verify_cdc(cube, {faces}).valid_cdc, "face cover rejected");
  auto kinds = [&](const std::vector<std::vector<Vertex>>& walks) {
    std::set<std::string> out;
    for (const auto& v : verify_cdc(cube, {walks}).violations) out.insert(v.kind);
    return out;
  };
  auto dropped = faces;
  dropped.pop_back();
  const CdcCertificate d = verify_cdc(cube, {dropped});
  ck.require(!d.valid_cdc && d.violations.size() == 4, "dropped walk: expected four coverage violations");
  for (const auto& v : d.violations)
    ck.require(v.kind == "coverage" && v.message.find("covered once") != std::string::npos, "dropped walk: wrong item");
  auto dup = faces;
  dup[0] = {0, 1, 2, 3, 2, 1};
  ck.require(kinds(dup).count("repeated_edge") == 1, "duplicated edge not itemized");
  auto open = faces;
  open[0] = {0, 1, 2};
  ck.require(kinds(open).count("not_closed") == 1, "non-closed walk not itemized");
  return ck;
}

Check annealer_sanity() {
  Check ck;
  // Three states with energies 0, 1, 2; uniform proposals to another state.
  const std::array<double, 3> energy{0.0, 1.0, 2.0};
  const double beta = 0.7;
  std::mt19937_64 rng(99);
  std::map<double, std::pair<long long, long long>> tally;  // delta -> (proposed, accepted)
  int state = 0;
  for (int t = 0; t < kToyProposals; ++t) {
    const int next = (state + 1 + static_cast<int>(uniform_below(rng, 2))) % 3;
    const double delta = energy[static_cast<std::size_t>(next)] - energy[static_cast<std::size_t>(state)];
    auto& [proposed, accepted] = tally[delta];
    ++proposed;
    if (metropolis_accept(delta, beta, rng)) {
      ++accepted;
      state = next;
    }
  }
  for (const auto& [delta, pa] : tally) {
    const double p = metropolis_probability(delta, beta);
    const double n = static_cast<double>(pa.first);
    const double sigma = std::sqrt(n * p * (1 - p));
    const double dev = std::abs(static_cast<double>(pa.second) - n * p);
    ck.require(p == std::min(1.0, std::exp(-beta * delta)), "acceptance probability is not the Metropolis rule");
    ck.require(sigma == 0 ? dev == 0 : dev <= kSigmas * sigma, "acceptance frequency outside 3 sigma");
  }
  auto rs = oracle::reduced("petersen");
  int solved = 0;
  for (int s = 1; s <= kAnnealSeeds; ++s) {
    const SearchOutcome out = anneal(rs, AnnealingConfig::defaults(), static_cast<std::uint64_t>(s));
    const auto counts = count_intersections(classify_cliques(out.labeling, extract_cycles(out.labeling)));
    solved += out.status == SearchStatus::Solved && counts.type_a == 0 ? 1 : 0;
  }
  ck.require(solved >= kAnnealRequired, "annealing solved Petersen from " + std::to_string(solved) + " of 10 seeds");
  if (ck.ok) ck.detail = "Petersen solved from " + std::to_string(solved) + "/" + std::to_string(kAnnealSeeds) + " seeds";
  return ck;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"construction counts", construction_counts},
      {"labeling laws", labeling_laws},
      {"exhaustive K3,3 oracle", [] { return exhaustive("k33", kK33Seconds, true); }},
      {"exhaustive Petersen oracle", [] { return exhaustive("petersen", kPetersenSeconds, false); }},
      {"search pipeline", search_pipeline},
      {"bridge negative test", bridge_negative},
      {"half-edge equivalence", halfedge_equivalence},
      {"verifier independence", verifier_independence},
      {"annealer sanity", annealer_sanity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Check ck;
    try {
      ck = criteria[i].second();
    } catch (const std::exception& e) {
      ck.ok = false;
      ck.detail = std::string("exception: ") + e.what();
    }
    const double s = seconds_since(t0);
    std::printf("%s %zu %s (%.2fs)%s%s\n", ck.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), s,
                ck.detail.empty() ? "" : ": ", ck.detail.c_str());
    std::fflush(stdout);
    failed += ck.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
