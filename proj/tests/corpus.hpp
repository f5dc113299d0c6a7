#pragma once

// Seeded instance corpus shared by the unit tests and the acceptance suite.

#include <cstdint>
#include <utility>
#include <vector>

#include "tecc/generator.hpp"
#include "tecc/graph.hpp"

namespace corpus {

inline tecc::Multigraph random_instance(int index, std::uint64_t seed_base = 1,
                                        int max_n = 10, int max_m = 16) {
  tecc::SplitMix64 rng(seed_base + static_cast<std::uint64_t>(index));
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
  const int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_m) + 1));
  return tecc::gen_random_multigraph(n, m, rng.next());
}

// Deterministic enumeration of valid planted specs covering all block
// kinds, skeletons and connectors.
inline tecc::PlantSpec planted_spec(int index, std::uint64_t seed_base = 99) {
  tecc::PlantSpec spec;
  const int blocks = 1 + index % 4;
  for (int b = 0; b < blocks; ++b) {
    const auto kind = static_cast<tecc::BlockKind>((index + b) % 3);
    const int size = kind == tecc::BlockKind::DoubledCycle ? 2 + (index + b) % 4 : 4 + b % 2;
    spec.blocks.push_back({kind, size});
  }
  spec.skeleton = static_cast<tecc::Skeleton>(index % (blocks < 2 ? 2 : 3));
  spec.connector = (spec.skeleton == tecc::Skeleton::Cycle || index % 2 == 0)
                       ? tecc::Connector::Bridge
                       : tecc::Connector::TwoEdgeBundle;
  spec.seed = seed_base + static_cast<std::uint64_t>(index);
  return spec;
}

inline tecc::Multigraph from_pairs(int n,
                                   std::vector<std::pair<tecc::VertexId, tecc::VertexId>> p) {
  return tecc::Multigraph::from_edge_list(n, p);
}

inline tecc::Multigraph k4() {
  return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline tecc::Multigraph c4() { return from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

inline tecc::Multigraph cycle(int n) {
  std::vector<std::pair<tecc::VertexId, tecc::VertexId>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
  return from_pairs(n, std::move(p));
}

// Two K4 blocks {0..3} and {4..7} joined by (0,4) and (1,5).
inline tecc::Multigraph two_k4_bundle() {
  return from_pairs(8, {{0, 1},
                        {0, 2},
                        {0, 3},
                        {1, 2},
                        {1, 3},
                        {2, 3},
                        {4, 5},
                        {4, 6},
                        {4, 7},
                        {5, 6},
                        {5, 7},
                        {6, 7},
                        {0, 4},
                        {1, 5}});
}

// Same blocks joined by the single edge (0,4).
inline tecc::Multigraph two_k4_bridge() {
  return from_pairs(8, {{0, 1},
                        {0, 2},
                        {0, 3},
                        {1, 2},
                        {1, 3},
                        {2, 3},
                        {4, 5},
                        {4, 6},
                        {4, 7},
                        {5, 6},
                        {5, 7},
                        {6, 7},
                        {0, 4}});
}

// Ring of three K4 blocks joined by single edges; each joining pair is a
// 2-cut, so every block gets one auxiliary pair.
inline tecc::Multigraph ring_of_three_k4() {
  std::vector<std::pair<tecc::VertexId, tecc::VertexId>> p;
  for (int b = 0; b < 3; ++b)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) p.emplace_back(4 * b + i, 4 * b + j);
  p.emplace_back(0, 4);
  p.emplace_back(5, 8);
  p.emplace_back(9, 1);
  return from_pairs(12, std::move(p));
}

}  // namespace corpus
