#pragma once

#include <cstdint>

namespace tecc {

/// Work counters for one decomposition run. All counters are plain
/// increments and monotone within a run; together they witness that the
/// contraction pass does linear work in n + m.
struct WorkCounters {
  std::uint64_t dfs_steps = 0;             // adjacency entries scanned
  std::uint64_t path_link_traversals = 0;  // next-link hops in absorb walks
  std::uint64_t alpha_insertions = 0;      // single edge insertions into a bag
  std::uint64_t ear_comparisons = 0;       // lexicographic ear comparisons
};

}  // namespace tecc
