#pragma once

#include <cstdint>
#include <vector>

#include "tecc/graph.hpp"

namespace tecc {

/// SplitMix64: the fixed, portable generator behind every seeded corpus.
/// The stream depends only on the 64-bit seed, never on the platform, so
/// generated instances reproduce everywhere. Draws use plain modulo; the
/// bias is irrelevant at corpus scale.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// m edges drawn with replacement over unordered vertex pairs; parallel
/// edges and self-loops are possible. Deterministic in the seed.
Multigraph gen_random_multigraph(int n, int m, std::uint64_t seed);

/// Building blocks that are 3-edge-connected by construction.
enum class BlockKind {
  Complete,      // K_size, size >= 4
  Wheel,         // hub plus a rim cycle, size >= 4 total
  DoubledCycle,  // cycle with every edge doubled, size >= 2
};

struct BlockSpec {
  BlockKind kind = BlockKind::Complete;
  int size = 4;
};

enum class Skeleton { Path, Tree, Cycle };
enum class Connector { Bridge, TwoEdgeBundle };

/// A planted instance: 3-edge-connected blocks wired together by cut
/// connectors, so the ground-truth component partition is the block list.
/// Cycle skeletons require bridge connectors and at least two blocks;
/// otherwise the connectors would stop being cuts and the plant would lie.
struct PlantSpec {
  std::vector<BlockSpec> blocks;
  Skeleton skeleton = Skeleton::Path;
  Connector connector = Connector::Bridge;
  std::uint64_t seed = 0;
};

struct PlantedInstance {
  Multigraph graph;
  std::vector<std::vector<VertexId>> expected_classes;  // sorted, by smallest member
};

/// Throws std::invalid_argument on specs whose connectors would not be cuts
/// (cycle + bundle, cycle with fewer than two blocks) or undersized blocks.
PlantedInstance gen_planted(const PlantSpec& spec);

/// Chain of K5 blocks joined by two-edge bundles, sized to land within 5%
/// of the requested edge count. Structure is uniform across sizes, so
/// doubling the target doubles the work.
Multigraph gen_scaling_instance(long long target_edges);

}  // namespace tecc
