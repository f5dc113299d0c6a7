#include "tecc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tecc {

Multigraph Multigraph::from_edge_list(
    int vertex_count, std::span<const std::pair<VertexId, VertexId>> pairs) {
  if (vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");

  for (size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("edge " + std::to_string(i) + " (" + std::to_string(u) +
                                  "," + std::to_string(v) + ") has an endpoint outside [0," +
                                  std::to_string(vertex_count) + ")");
  }

  Multigraph g;
  g.n_ = vertex_count;
  g.edges_.assign(pairs.begin(), pairs.end());

  const auto n = static_cast<size_t>(vertex_count);
  std::vector<int> adj_count(n, 0);
  std::vector<int> loop_count(n, 0);
  for (const auto& [u, v] : pairs) {
    if (u == v) {
      ++loop_count[static_cast<size_t>(u)];
    } else {
      ++adj_count[static_cast<size_t>(u)];
      ++adj_count[static_cast<size_t>(v)];
    }
  }

  g.adj_offset_.assign(n + 1, 0);
  g.loop_offset_.assign(n + 1, 0);
  for (size_t v = 0; v < n; ++v) {
    g.adj_offset_[v + 1] = g.adj_offset_[v] + adj_count[v];
    g.loop_offset_[v + 1] = g.loop_offset_[v] + loop_count[v];
  }
  g.adj_.resize(static_cast<size_t>(g.adj_offset_[n]));
  g.loops_.resize(static_cast<size_t>(g.loop_offset_[n]));

  // Fill in edge-id order so each adjacency list follows input order.
  std::vector<int> adj_cursor(g.adj_offset_.begin(), g.adj_offset_.end() - 1);
  std::vector<int> loop_cursor(g.loop_offset_.begin(), g.loop_offset_.end() - 1);
  for (size_t e = 0; e < pairs.size(); ++e) {
    const auto [u, v] = pairs[e];
    const auto id = static_cast<EdgeId>(e);
    if (u == v) {
      g.loops_[static_cast<size_t>(loop_cursor[static_cast<size_t>(u)]++)] = id;
    } else {
      g.adj_[static_cast<size_t>(adj_cursor[static_cast<size_t>(u)]++)] = {id, v};
      g.adj_[static_cast<size_t>(adj_cursor[static_cast<size_t>(v)]++)] = {id, u};
    }
  }
  return g;
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> components;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<VertexId> stack;

  for (VertexId start = 0; start < n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<VertexId> comp;
    seen[static_cast<size_t>(start)] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const auto& half : g.adjacent(v)) {
        if (!seen[static_cast<size_t>(half.to)]) {
          seen[static_cast<size_t>(half.to)] = 1;
          stack.push_back(half.to);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

}  // namespace tecc
