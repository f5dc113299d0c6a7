#include "tecc/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tecc {

Multigraph gen_random_multigraph(int n, int m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random_multigraph: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto u = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
    const auto v = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
    pairs.emplace_back(u, v);
  }
  return Multigraph::from_edge_list(n, pairs);
}

namespace {

int block_vertex_count(const BlockSpec& b) { return b.size; }

void append_block_edges(const BlockSpec& b, int base,
                        std::vector<std::pair<VertexId, VertexId>>& pairs) {
  switch (b.kind) {
    case BlockKind::Complete:
      for (int i = 0; i < b.size; ++i)
        for (int j = i + 1; j < b.size; ++j) pairs.emplace_back(base + i, base + j);
      break;
    case BlockKind::Wheel: {
      const int rim = b.size - 1;  // vertex base is the hub
      for (int i = 0; i < rim; ++i) {
        pairs.emplace_back(base + 1 + i, base + 1 + (i + 1) % rim);
        pairs.emplace_back(base, base + 1 + i);
      }
      break;
    }
    case BlockKind::DoubledCycle:
      for (int i = 0; i < b.size; ++i) {
        const int j = (i + 1) % b.size;
        pairs.emplace_back(base + i, base + j);
        pairs.emplace_back(base + i, base + j);
      }
      break;
  }
}

void validate(const PlantSpec& spec) {
  if (spec.blocks.empty()) throw std::invalid_argument("gen_planted: no blocks");
  for (const auto& b : spec.blocks) {
    const int min_size = b.kind == BlockKind::DoubledCycle ? 2 : 4;
    if (b.size < min_size)
      throw std::invalid_argument("gen_planted: block size " + std::to_string(b.size) +
                                  " too small to be 3-edge-connected");
  }
  if (spec.skeleton == Skeleton::Cycle) {
    if (spec.connector == Connector::TwoEdgeBundle)
      throw std::invalid_argument(
          "gen_planted: a cycle of two-edge bundles leaves no 2-cuts between blocks");
    if (spec.blocks.size() < 2)
      throw std::invalid_argument("gen_planted: a cycle skeleton needs at least two blocks");
  }
}

}  // namespace

PlantedInstance gen_planted(const PlantSpec& spec) {
  validate(spec);
  SplitMix64 rng(spec.seed);

  const size_t nblocks = spec.blocks.size();
  std::vector<int> base(nblocks);
  int n = 0;
  for (size_t i = 0; i < nblocks; ++i) {
    base[i] = n;
    n += block_vertex_count(spec.blocks[i]);
  }

  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (size_t i = 0; i < nblocks; ++i) append_block_edges(spec.blocks[i], base[i], pairs);

  auto pick = [&](size_t block) {
    return base[block] +
           static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.blocks[block].size)));
  };
  auto pick_two = [&](size_t block, VertexId& a, VertexId& b) {
    a = pick(block);
    do {
      b = pick(block);
    } while (b == a);
  };
  auto connect = [&](size_t from, size_t to) {
    if (spec.connector == Connector::Bridge) {
      pairs.emplace_back(pick(from), pick(to));
    } else {
      VertexId a1, a2, b1, b2;
      pick_two(from, a1, a2);
      pick_two(to, b1, b2);
      pairs.emplace_back(a1, b1);
      pairs.emplace_back(a2, b2);
    }
  };

  for (size_t i = 1; i < nblocks; ++i) {
    const size_t parent =
        spec.skeleton == Skeleton::Tree ? static_cast<size_t>(rng.below(i)) : i - 1;
    connect(parent, i);
  }
  if (spec.skeleton == Skeleton::Cycle) connect(nblocks - 1, 0);

  PlantedInstance inst;
  inst.graph = Multigraph::from_edge_list(n, pairs);
  inst.expected_classes.reserve(nblocks);
  for (size_t i = 0; i < nblocks; ++i) {
    std::vector<VertexId> cls;
    for (int v = 0; v < block_vertex_count(spec.blocks[i]); ++v) cls.push_back(base[i] + v);
    inst.expected_classes.push_back(std::move(cls));
  }
  return inst;
}

Multigraph gen_scaling_instance(long long target_edges) {
  if (target_edges < 24) throw std::invalid_argument("gen_scaling_instance: target too small");
  // b K5 blocks and b-1 bundles: 12b - 2 edges.
  const auto blocks =
      std::max<long long>(2, llround((static_cast<double>(target_edges) + 2.0) / 12.0));
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(static_cast<size_t>(12 * blocks));
  for (long long blk = 0; blk < blocks; ++blk) {
    const int b = static_cast<int>(5 * blk);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) pairs.emplace_back(b + i, b + j);
    if (blk > 0) {
      pairs.emplace_back(b - 5, b);      // vertex 0 of previous to vertex 0 here
      pairs.emplace_back(b - 4, b + 1);  // vertex 1 of previous to vertex 1 here
    }
  }
  return Multigraph::from_edge_list(static_cast<int>(5 * blocks), pairs);
}

}  // namespace tecc
