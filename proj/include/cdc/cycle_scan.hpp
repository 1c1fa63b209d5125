#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cdc/reduced.hpp"

namespace cdc {

/// Position of the open partner of `position` in a clique whose bit is `bit`.
/// Class 0 pairs (0,1),(2,3); class 1 pairs (1,2),(3,0).
constexpr int open_partner_position(int position, int bit) {
  return bit == 0 ? (position ^ 1) : (3 - position);
}

/// Flat tables for walking open cycles of a reduced structure quickly.
///
/// This is the hot kernel behind extract_cycles, interleaving
/// classification, enumeration and the search loops. Bits are read through
/// a callable so the same walk serves byte vectors and packed words.
class CycleScanner {
 public:
  explicit CycleScanner(const ReducedStructure& rs);

  int vertex_count() const { return static_cast<int>(slots_.size()); }
  int clique_count() const { return static_cast<int>(cycle4_.size()); }

  struct Counts {
    int type_a = 0;
    int type_b = 0;
    int cycles = 0;
  };

  /// Walks every cycle in canonical order. Fills vertex_cycle, vertex_position
  /// and (when non-null) the flattened cycle sequences with offsets.
  template <class BitFn>
  int walk(BitFn bit, std::vector<int>& vertex_cycle, std::vector<int>& vertex_position,
           std::vector<int>* order = nullptr, std::vector<int>* offsets = nullptr) const;

  /// Counts of TypeA / TypeB self-intersections and cycles, using the
  /// direction rule: a self-intersection is TypeB exactly when the cycle
  /// crosses the clique's source edge twice in the same direction.
  template <class BitFn>
  Counts counts(BitFn bit) const;

  Counts counts(std::span<const std::uint8_t> bits) const {
    return counts([&](int q) { return static_cast<int>(bits[static_cast<std::size_t>(q)]); });
  }
  Counts counts(std::uint64_t bits) const {
    return counts([bits](int q) { return static_cast<int>((bits >> q) & 1U); });
  }

  /// +1 when the open edge of `clique` through u-side position `u_pos` is
  /// traversed from its u-side end to its v-side end, -1 otherwise.
  template <class BitFn>
  int crossing_direction(BitFn bit, int clique, int u_pos, const std::vector<int>& vertex_position,
                         const std::vector<int>& cycle_length, const std::vector<int>& vertex_cycle) const;

  const std::array<int, 4>& cycle4(int clique) const { return cycle4_[static_cast<std::size_t>(clique)]; }
  const std::array<CliqueSlot, 2>& slots(Vertex x) const { return slots_[static_cast<std::size_t>(x)]; }

 private:
  std::vector<std::array<CliqueSlot, 2>> slots_;
  std::vector<std::array<int, 4>> cycle4_;
  // Scratch for counts(); CycleScanner is therefore not shareable across threads.
  mutable std::vector<int> vc_, vp_, len_;
};

// --- template definitions -------------------------------------------------------

template <class BitFn>
int CycleScanner::walk(BitFn bit, std::vector<int>& vertex_cycle, std::vector<int>& vertex_position,
                       std::vector<int>* order, std::vector<int>* offsets) const {
  const int n = vertex_count();
  vertex_cycle.assign(static_cast<std::size_t>(n), -1);
  vertex_position.assign(static_cast<std::size_t>(n), -1);
  if (order) order->clear();
  if (offsets) offsets->assign(1, 0);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (vertex_cycle[static_cast<std::size_t>(start)] != -1) continue;
    const auto& s = slots_[static_cast<std::size_t>(start)];
    auto partner = [&](const CliqueSlot& slot) {
      return cycle4_[static_cast<std::size_t>(slot.clique)]
                    [static_cast<std::size_t>(open_partner_position(slot.position, bit(slot.clique)))];
    };
    // Leave the start vertex toward its smaller open neighbor.
    const int p0 = partner(s[0]);
    const int p1 = partner(s[1]);
    int via_slot = p0 < p1 ? 0 : 1;
    int x = start;
    int pos = 0;
    while (true) {
      vertex_cycle[static_cast<std::size_t>(x)] = cycles;
      vertex_position[static_cast<std::size_t>(x)] = pos++;
      if (order) order->push_back(x);
      const CliqueSlot& leave = slots_[static_cast<std::size_t>(x)][static_cast<std::size_t>(via_slot)];
      const int y = partner(leave);
      if (y == start) break;
      const auto& ys = slots_[static_cast<std::size_t>(y)];
      via_slot = ys[0].clique == leave.clique ? 1 : 0;
      x = y;
      if (vertex_cycle[static_cast<std::size_t>(x)] != -1) return -1;  // corrupt labeling
    }
    if (offsets) offsets->push_back(static_cast<int>(order ? order->size() : 0));
    ++cycles;
  }
  return cycles;
}

template <class BitFn>
int CycleScanner::crossing_direction(BitFn bit, int clique, int u_pos, const std::vector<int>& vertex_position,
                                     const std::vector<int>& cycle_length, const std::vector<int>& vertex_cycle) const {
  const auto& cyc = cycle4_[static_cast<std::size_t>(clique)];
  const int s = cyc[static_cast<std::size_t>(u_pos)];
  const int t = cyc[static_cast<std::size_t>(open_partner_position(u_pos, bit(clique)))];
  const int len = cycle_length[static_cast<std::size_t>(vertex_cycle[static_cast<std::size_t>(s)])];
  const int ps = vertex_position[static_cast<std::size_t>(s)];
  const int pt = vertex_position[static_cast<std::size_t>(t)];
  return (ps + 1) % len == pt ? +1 : -1;
}

template <class BitFn>
CycleScanner::Counts CycleScanner::counts(BitFn bit) const {
  Counts c;
  c.cycles = walk(bit, vc_, vp_);
  len_.assign(static_cast<std::size_t>(c.cycles), 0);
  for (int cyc : vc_) ++len_[static_cast<std::size_t>(cyc)];
  for (int q = 0; q < clique_count(); ++q) {
    const auto& cyc = cycle4_[static_cast<std::size_t>(q)];
    if (vc_[static_cast<std::size_t>(cyc[0])] != vc_[static_cast<std::size_t>(cyc[2])]) continue;
    const int d0 = crossing_direction(bit, q, 0, vp_, len_, vc_);
    const int d2 = crossing_direction(bit, q, 2, vp_, len_, vc_);
    (d0 == d2 ? c.type_b : c.type_a) += 1;
  }
  return c;
}

}  // namespace cdc
