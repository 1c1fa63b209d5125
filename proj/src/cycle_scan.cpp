#include "cdc/cycle_scan.hpp"

namespace cdc {

CycleScanner::CycleScanner(const ReducedStructure& rs) : slots_(rs.vertex_cliques) {
  cycle4_.reserve(rs.cliques.size());
  for (const ReducedClique& c : rs.cliques) cycle4_.push_back(c.cycle4);
}

}  // namespace cdc
