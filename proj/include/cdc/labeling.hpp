#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdc/reduced.hpp"

namespace cdc {

/// A valid open/closed labeling: one bit per reduced clique selecting which
/// of its two alternating edge classes is open. Every labeling representable
/// here is valid, so each l2 vertex always has two open and two closed edges.
class Labeling {
 public:
  Labeling(std::shared_ptr<const ReducedStructure> rs, std::vector<std::uint8_t> bits);

  const ReducedStructure& structure() const { return *rs_; }
  const std::shared_ptr<const ReducedStructure>& structure_ptr() const { return rs_; }

  int size() const { return static_cast<int>(bits_.size()); }
  std::span<const std::uint8_t> bits() const { return bits_; }
  int bit(int clique) const { return bits_[static_cast<std::size_t>(clique)]; }

  /// Toggles one clique in place. Throws std::out_of_range for unknown ids.
  void flip(int clique);

  /// Bits packed little-endian; only meaningful when size() <= 64.
  std::uint64_t packed() const;

  bool is_open(int l2_edge) const;

  friend bool operator==(const Labeling& a, const Labeling& b) { return a.rs_ == b.rs_ && a.bits_ == b.bits_; }

 private:
  std::shared_ptr<const ReducedStructure> rs_;
  std::vector<std::uint8_t> bits_;
};

struct InitialPolicy {
  enum class Kind { AllZero, SeededRandom };
  Kind kind = Kind::AllZero;
  std::uint64_t seed = 0;

  static InitialPolicy all_zero() { return {Kind::AllZero, 0}; }
  static InitialPolicy seeded_random(std::uint64_t seed) { return {Kind::SeededRandom, seed}; }
};

Labeling initial_labeling(std::shared_ptr<const ReducedStructure> rs, InitialPolicy policy);

/// Number of open incident l2 edges per vertex, counted edge by edge.
std::vector<int> open_degrees(const Labeling& lab);

/// "<clique count>:<hex>" where the hex digits encode sum(bit_i * 2^i),
/// zero-padded to ceil(count / 4) digits.
std::string to_hex(const Labeling& lab);
std::string bits_to_hex(std::span<const std::uint8_t> bits);
std::string packed_to_hex(std::uint64_t bits, int count);
Labeling labeling_from_hex(std::shared_ptr<const ReducedStructure> rs, std::string_view text);

// --- cycles -----------------------------------------------------------------

/// Disjoint open cycles covering every l2 vertex. Each cycle starts at its
/// smallest vertex and heads toward the smaller of that vertex's two open
/// neighbors; cycles are ordered by start vertex.
struct CycleSet {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<int> vertex_cycle;
  std::vector<int> vertex_position;

  int count() const { return static_cast<int>(cycles.size()); }
  int length(int cycle) const { return static_cast<int>(cycles[static_cast<std::size_t>(cycle)].size()); }
};

/// Throws InternalError if some vertex does not have open degree 2.
CycleSet extract_cycles(const Labeling& lab);

enum class Role { Joining, TypeA, TypeB };

std::string_view to_string(Role role);

struct CliqueRole {
  Role role = Role::Joining;
  int cycle_a = 0;
  int cycle_b = 0;  // equals cycle_a for self-intersections

  bool self_intersection() const { return role != Role::Joining; }
  friend bool operator==(const CliqueRole&, const CliqueRole&) = default;
};

enum class ClassifyMethod {
  /// Flip the clique and re-walk its cycle: a split means TypeB.
  FlipSimulation,
  /// Compare the two crossing directions of the source edge along the cycle.
  Interleaving,
};

std::vector<CliqueRole> classify_cliques(const Labeling& lab, const CycleSet& cs,
                                         ClassifyMethod method = ClassifyMethod::FlipSimulation);

/// Copy with one clique's bit toggled.
Labeling invert(const Labeling& lab, int clique);

struct IntersectionCounts {
  int type_a = 0;
  int type_b = 0;
  friend bool operator==(const IntersectionCounts&, const IntersectionCounts&) = default;
};

IntersectionCounts count_intersections(std::span<const CliqueRole> roles);

/// Cycles as nodes; an edge per pair of cycles joined by some clique and a
/// loop per self-intersected cycle. Witness lists are sorted clique ids.
struct CycleAdjacencyGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // a < b, sorted
  std::vector<int> loops;                  // sorted
  std::map<std::pair<int, int>, std::vector<int>> witnesses;  // loops keyed (a, a)

  bool connected() const;
  std::vector<std::vector<int>> adjacency() const;  // without loops, ascending
};

CycleAdjacencyGraph cycle_adjacency(const Labeling& lab, const CycleSet& cs, std::span<const CliqueRole> roles);

}  // namespace cdc
