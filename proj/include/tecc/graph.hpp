#pragma once

#include <span>
#include <utility>
#include <vector>

namespace tecc {

using VertexId = int;
using EdgeId = int;

/// Immutable undirected multigraph over dense vertex ids [0, n).
///
/// EdgeId i refers to the i-th input pair, so parallel edges keep distinct
/// identities for the whole run. Self-loops stay in the edge table but are
/// diverted out of the adjacency lists into a per-vertex side list; graph
/// traversals never see them. Adjacency preserves input order, which makes
/// every traversal deterministic given the input.
///
/// Immutable after construction; safe to share across threads.
class Multigraph {
 public:
  struct HalfEdge {
    EdgeId edge;
    VertexId to;
  };

  Multigraph() = default;

  /// Builds a graph from an explicit edge list. Throws std::invalid_argument
  /// naming the first offending pair if an endpoint is out of range.
  static Multigraph from_edge_list(
      int vertex_count, std::span<const std::pair<VertexId, VertexId>> pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  bool is_self_loop(EdgeId e) const {
    return edges_[static_cast<size_t>(e)].first == edges_[static_cast<size_t>(e)].second;
  }

  /// Non-loop half-edges at v, in input order.
  std::span<const HalfEdge> adjacent(VertexId v) const {
    return {adj_.data() + adj_offset_[static_cast<size_t>(v)],
            adj_.data() + adj_offset_[static_cast<size_t>(v) + 1]};
  }

  /// Self-loop edge ids diverted at v, in input order.
  std::span<const EdgeId> self_loops(VertexId v) const {
    return {loops_.data() + loop_offset_[static_cast<size_t>(v)],
            loops_.data() + loop_offset_[static_cast<size_t>(v) + 1]};
  }

  /// Number of edge ends at v; a self-loop contributes two.
  int degree(VertexId v) const {
    return static_cast<int>(adjacent(v).size()) + 2 * static_cast<int>(self_loops(v).size());
  }

  /// The edge table, in input order.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<int> adj_offset_;  // CSR over non-loop half-edges
  std::vector<HalfEdge> adj_;
  std::vector<int> loop_offset_;  // CSR over diverted self-loops
  std::vector<EdgeId> loops_;
};

/// Vertex sets of the connected components, each sorted ascending, ordered
/// by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);

}  // namespace tecc
