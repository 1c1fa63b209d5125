#include <algorithm>
#include <future>

#include "cdc/cycle_scan.hpp"
#include "cdc/dynamics.hpp"

namespace cdc {

namespace {

struct Chunk {
  EnumerationSummary summary;
  std::vector<EnumRecord> records;
};

Chunk scan_range(const ReducedStructure& rs, std::uint64_t lo, std::uint64_t hi, bool keep, bool only_free) {
  const CycleScanner scanner(rs);
  Chunk out;
  out.summary.min_type_a = rs.clique_count() + 1;
  for (std::uint64_t bits = lo; bits < hi; ++bits) {
    const auto c = scanner.counts(bits);
    ++out.summary.total;
    const bool free = c.type_a == 0 && c.type_b == 0;
    if (free) {
      ++out.summary.intersection_free;
      if (!out.summary.first_intersection_free) out.summary.first_intersection_free = bits;
    }
    if (c.type_a > 0) ++out.summary.with_type_a;
    out.summary.min_type_a = std::min(out.summary.min_type_a, c.type_a);
    if (keep && (free || !only_free)) out.records.push_back({bits, c.type_a, c.type_b, c.cycles});
  }
  return out;
}

}  // namespace

EnumerationSummary enumerate_labelings(const ReducedStructure& rs, const EnumerateOptions& options,
                                       const std::function<void(const EnumRecord&)>& sink) {
  const int m = rs.clique_count();
  if (options.threshold < 1 || options.threshold > 63) throw PreconditionError("enumeration threshold must lie in [1, 63]");
  if (m > options.threshold)
    throw PreconditionError("enumeration threshold exceeded: " + std::to_string(m) + " cliques > " +
                            std::to_string(options.threshold));
  if (options.threads < 1) throw PreconditionError("threads must be positive");
  const std::uint64_t total = std::uint64_t{1} << m;
  const bool keep = static_cast<bool>(sink);

  std::vector<Chunk> chunks;
  const auto threads = static_cast<std::uint64_t>(std::min<long long>(options.threads, static_cast<long long>(total)));
  if (threads <= 1) {
    chunks.push_back(scan_range(rs, 0, total, keep, options.only_intersection_free));
  } else {
    std::vector<std::future<Chunk>> futures;
    for (std::uint64_t t = 0; t < threads; ++t)
      futures.push_back(std::async(std::launch::async, scan_range, std::cref(rs), total * t / threads,
                                   total * (t + 1) / threads, keep, options.only_intersection_free));
    for (auto& f : futures) chunks.push_back(f.get());
  }

  // Chunks cover ascending contiguous ranges, so concatenation keeps numeric order.
  EnumerationSummary sum;
  sum.min_type_a = m + 1;
  for (Chunk& c : chunks) {
    sum.total += c.summary.total;
    sum.intersection_free += c.summary.intersection_free;
    sum.with_type_a += c.summary.with_type_a;
    sum.min_type_a = std::min(sum.min_type_a, c.summary.min_type_a);
    if (!sum.first_intersection_free) sum.first_intersection_free = c.summary.first_intersection_free;
    if (keep)
      for (const EnumRecord& r : c.records) sink(r);
  }
  return sum;
}

}  // namespace cdc
