#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdc/labeling.hpp"

namespace cdc {

// --- type B reduction and joins ------------------------------------------------

/// Flips the lowest-id TypeB clique until none is left. Each flip splits a
/// cycle, so the cycle count rises strictly; TypeA count never rises.
/// `flips`, when given, is incremented once per flip.
Labeling reduce_type_b(const Labeling& lab, long long* flips = nullptr);

struct JoinResult {
  Labeling labeling;
  std::vector<int> flipped;  // in application order
};

/// Joins two cycles along a shortest path of the cycle adjacency graph by
/// flipping the lowest-id joining clique of each consecutive pair. Adjacent
/// (or equal) cycles need no flips. Throws InternalError when no path exists
/// or when a flipped clique ends up TypeA.
JoinResult join_cycles(const Labeling& lab, int cycle_a, int cycle_b);

// --- centered vertex cuts ----------------------------------------------------------

/// Minimal vertex cut of a line graph that contains a designated vertex.
struct CenteredVertexCut {
  Vertex center = 0;
  std::vector<Vertex> cut;                     // sorted
  std::vector<std::vector<Vertex>> components;  // of lg minus cut, each sorted
};

/// The center alone already separates the line graph (its source edge is a bridge).
class CutVertexDetected : public PreconditionError {
 public:
  explicit CutVertexDetected(Vertex v)
      : PreconditionError("vertex " + std::to_string(v) + " is a cut vertex of the line graph (bridge in source)"),
        vertex_(v) {}
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

/// Tries cuts {v, w} and {v, w1, w2} in id order, then falls back to N(w)
/// for the lowest-id neighbor w of v. The result is validated for
/// minimality and for not containing a whole triangle.
CenteredVertexCut centered_vertex_cut(const Graph& lg, Vertex v);

/// True when removing `cut` leaves at least two components.
bool is_vertex_cut(const Graph& g, const std::vector<Vertex>& cut);

// --- type A resolution ------------------------------------------------------------

struct ResolveOptions {
  int node_budget = 4096;
};

struct ResolveResult {
  Labeling labeling;
  std::vector<int> flips;
  int type_a_before = 0;
  int type_a_after = 0;
};

/// Best-first search over flip sequences of length <= depth. Succeeds only
/// when the TypeA count drops strictly and `clique` is no longer TypeA.
/// Throws PreconditionError when `clique` is not TypeA to begin with.
std::optional<ResolveResult> resolve_type_a(const Labeling& lab, int clique, int depth, ResolveOptions options = {});

// --- search -----------------------------------------------------------------------

struct AnnealingConfig {
  std::vector<std::pair<double, int>> beta_schedule;  // (inverse temperature, sweeps)
  double w_a = 10.0;
  double w_b = 1.0;

  static AnnealingConfig defaults();
  void validate() const;
};

struct SearchConfig {
  std::uint64_t seed = 0;
  int max_restarts = 64;
  long long max_flips_per_attempt = 1'000'000;
  int resolution_depth = 8;
  int enumerate_threshold = 24;
  int resolve_node_budget = 4096;
  int threads = 1;
  std::optional<AnnealingConfig> anneal;

  void validate() const;
};

enum class SearchStatus { Solved, BudgetExhausted };

std::string_view to_string(SearchStatus s);

struct TraceEntry {
  int attempt = 0;
  std::uint64_t seed = 0;
  int round = 0;
  std::string event;
  int type_a = 0;
  int type_b = 0;
  int cycle_count = 0;
  long long flips = 0;  // cumulative within the attempt

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::BudgetExhausted;
  Labeling labeling;
  std::vector<TraceEntry> trace;
  long long flips_applied = 0;
  std::uint64_t seed = 0;  // seed of the attempt that produced `labeling`
  int attempts = 0;
};

/// Restarts from seeds cfg.seed, cfg.seed + 1, ...: random labeling, TypeB
/// reduction, then repeated TypeA resolution with TypeB reduction after each
/// success. Deterministic for a given cfg; cfg.threads > 1 gives the same
/// outcome.
SearchOutcome search_cdc_labeling(std::shared_ptr<const ReducedStructure> rs, const SearchConfig& cfg);

/// Metropolis chain with energy w_a * #TypeA + w_b * #TypeB over single
/// clique flips. Returns the best state seen; Solved iff the energy hit 0.
SearchOutcome anneal(std::shared_ptr<const ReducedStructure> rs, const AnnealingConfig& cfg, std::uint64_t seed);

// --- enumeration ------------------------------------------------------------------

struct EnumRecord {
  std::uint64_t bits = 0;
  int type_a = 0;
  int type_b = 0;
  int cycles = 0;
};

struct EnumerateOptions {
  int threshold = 24;
  bool only_intersection_free = false;
  int threads = 1;
};

struct EnumerationSummary {
  std::uint64_t total = 0;
  std::uint64_t intersection_free = 0;
  std::uint64_t with_type_a = 0;
  int min_type_a = 0;
  std::optional<std::uint64_t> first_intersection_free;
};

/// Classifies all 2^|cliques| labelings in numeric order of their packed
/// bits. `sink` receives records in that order (filtered when requested).
/// Throws PreconditionError when the clique count exceeds the threshold.
EnumerationSummary enumerate_labelings(const ReducedStructure& rs, const EnumerateOptions& options,
                                       const std::function<void(const EnumRecord&)>& sink = {});

}  // namespace cdc
