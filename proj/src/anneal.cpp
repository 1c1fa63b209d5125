#include "cdc/anneal.hpp"

#include "cdc/cycle_scan.hpp"
#include "cdc/dynamics.hpp"

namespace cdc {

AnnealingConfig AnnealingConfig::defaults() {
  AnnealingConfig cfg;
  cfg.beta_schedule = {{0.1, 50}, {0.3, 50}, {1.0, 100}, {3.0, 100}, {10.0, 200}};
  return cfg;
}

void AnnealingConfig::validate() const {
  if (beta_schedule.empty()) throw PreconditionError("annealing schedule is empty");
  for (const auto& [beta, sweeps] : beta_schedule)
    if (!(beta >= 0.0) || sweeps <= 0) throw PreconditionError("annealing stage needs beta >= 0 and sweeps > 0");
  if (!(w_a > 0.0)) throw PreconditionError("annealing weight w_a must be positive");
  if (!(w_b >= 0.0)) throw PreconditionError("annealing weight w_b must be non-negative");
}

SearchOutcome anneal(std::shared_ptr<const ReducedStructure> rs, const AnnealingConfig& cfg, std::uint64_t seed) {
  if (!rs) throw PreconditionError("anneal without a reduced structure");
  cfg.validate();
  const CycleScanner scanner(*rs);
  const int m = rs->clique_count();
  std::mt19937_64 rng(seed);
  Labeling start = initial_labeling(rs, InitialPolicy::seeded_random(seed));
  std::vector<std::uint8_t> bits(start.bits().begin(), start.bits().end());

  auto energy = [&](const CycleScanner::Counts& c) { return cfg.w_a * c.type_a + cfg.w_b * c.type_b; };
  CycleScanner::Counts cur = scanner.counts(std::span<const std::uint8_t>(bits));
  double h = energy(cur);
  std::vector<std::uint8_t> best = bits;
  double best_h = h;
  long long accepted = 0;

  SearchOutcome out{SearchStatus::BudgetExhausted, start, {}, 0, seed, 1};
  out.trace.push_back({0, seed, 0, "initial", cur.type_a, cur.type_b, cur.cycles, 0});
  int stage = 0;
  for (const auto& [beta, sweeps] : cfg.beta_schedule) {
    ++stage;
    for (long long step = 0; step < static_cast<long long>(sweeps) * m && best_h > 0.0; ++step) {
      const auto q = static_cast<std::size_t>(uniform_below(rng, static_cast<std::uint64_t>(m)));
      bits[q] ^= 1U;
      const CycleScanner::Counts next = scanner.counts(std::span<const std::uint8_t>(bits));
      const double hn = energy(next);
      if (metropolis_accept(hn - h, beta, rng)) {
        cur = next;
        h = hn;
        ++accepted;
        if (h < best_h) {
          best_h = h;
          best = bits;
        }
      } else {
        bits[q] ^= 1U;
      }
    }
    out.trace.push_back({0, seed, stage, "anneal_stage", cur.type_a, cur.type_b, cur.cycles, accepted});
    if (best_h <= 0.0) break;
  }
  out.labeling = Labeling(rs, std::move(best));
  out.flips_applied = accepted;
  out.status = best_h <= 0.0 ? SearchStatus::Solved : SearchStatus::BudgetExhausted;
  return out;
}

}  // namespace cdc
