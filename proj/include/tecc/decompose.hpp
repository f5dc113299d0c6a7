#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tecc/counters.hpp"
#include "tecc/graph.hpp"

namespace tecc {

/// An edge of an emitted subgraph: either an edge of the input graph,
/// referenced by id, or an auxiliary edge created when a 2-cut was removed.
/// Auxiliary edges carry the ordinal of the generating 2-cut so the two
/// replacement edges of one cut can be matched up later; they are never
/// self-loops (degenerate ones are discarded at creation).
struct OutputEdge {
  enum class Kind : std::uint8_t { Original, Auxiliary };

  Kind kind = Kind::Original;
  EdgeId id = -1;      // Original only
  VertexId u = -1;     // endpoints; for Original these mirror the edge table
  VertexId v = -1;
  int cut_tag = -1;    // Auxiliary only

  static OutputEdge original(EdgeId id, VertexId u, VertexId v) {
    return {Kind::Original, id, u, v, -1};
  }
  static OutputEdge auxiliary(VertexId u, VertexId v, int cut_tag) {
    return {Kind::Auxiliary, -1, u, v, cut_tag};
  }

  bool operator==(const OutputEdge&) const = default;
};

/// The lexicographically smallest ear leaving a subtree: a back-edge
/// (tail curving up to head), or the initial sentinel that every escaping
/// back-edge beats. `via` is the concrete edge currently embodying the ear,
/// so absorbing an ear always contributes a real output edge.
struct EarValue {
  bool infinite = true;
  VertexId tail = -1;
  VertexId head = -1;
  OutputEdge via;

  static EarValue inf() { return {}; }
  static EarValue back_edge(VertexId tail, VertexId head, const OutputEdge& via) {
    return {false, tail, head, via};
  }
};

/// Read-only view of the DFS numbering, for ancestor tests while the search
/// is still running. `visit` holds 1-based visit numbers (0 = unvisited),
/// `subtree` the number of descendants including self (final once a vertex
/// is closed), `open` flags vertices still on the DFS stack.
struct DfsTreeView {
  std::span<const int> visit;
  std::span<const int> subtree;
  std::span<const unsigned char> open;

  /// True iff a lies on the root path of b (reflexive). For a closed vertex
  /// this is the interval test visit(a) <= visit(b) < visit(a) + subtree(a);
  /// for an open vertex the visit-number comparison alone is valid because
  /// every visited vertex with a larger number lies in its active subtree.
  bool is_ancestor(VertexId a, VertexId b) const {
    const auto sa = static_cast<size_t>(a);
    if (open[sa]) return visit[sa] <= visit[static_cast<size_t>(b)];
    return visit[sa] <= visit[static_cast<size_t>(b)] &&
           visit[static_cast<size_t>(b)] < visit[sa] + subtree[sa];
  }
};

/// Strict lexicographic back-edge order relative to context vertex w:
///   (i)  head of a visited earlier than head of b, or
///   (ii) equal heads, tail of a visited earlier and not an ancestor of
///        b's tail, or
///   (iii) equal heads and a's tail a proper descendant of b's tail.
/// The sentinel compares as: back-edge < sentinel iff the back-edge escapes
/// above w while its tail is in w's subtree; sentinel < back-edge iff the
/// back-edge's head is w or below. Parallel edges (same head and tail) are
/// ordered by a fixed rule: originals before auxiliaries, then by id / tag.
bool ear_less(const DfsTreeView& t, const EarValue& a, const EarValue& b, VertexId w);

inline bool ear_less_eq(const DfsTreeView& t, const EarValue& a, const EarValue& b,
                        VertexId w) {
  return !ear_less(t, b, a, w);
}

/// One 3-edge-connected component: its vertex set and the edge multiset of
/// its auxiliary subgraph (induced original edges plus auxiliary edges).
struct Component {
  std::vector<VertexId> vertices;
  std::vector<OutputEdge> edges;
};

struct TwoCut {
  OutputEdge first;   // the tree-edge side, as embodied when found
  OutputEdge second;  // the other cut member
};

/// Result of one run: components in ejection order with each connected
/// component's root emitted last, bridges by edge id, and the 2-cuts in
/// the order they were found. Cut members and bridges appear in no
/// component's edge list.
struct Decomposition {
  std::vector<Component> components;
  std::vector<EdgeId> bridges;
  std::vector<TwoCut> two_cuts;
};

struct DecomposeOptions {
  /// Enables the structural checks on the supervertex paths (interior
  /// degrees >= 3, strictly increasing visit numbers, consistent ears) at
  /// every list completion. A violation throws std::logic_error. Intended
  /// for verification runs; quadratic on long paths.
  bool debug_checks = false;
};

/// Decomposes g into its 3-edge-connected components and builds each
/// component's auxiliary subgraph edge multiset in a single depth-first
/// pass per connected component. Total over the input; disconnected inputs
/// are handled component by component, roots in increasing vertex order.
Decomposition decompose(const Multigraph& g, DecomposeOptions opts = {});

/// Same, with work counters populated. The decomposition is identical to
/// the uncounted run.
Decomposition decompose(const Multigraph& g, WorkCounters& counters,
                        DecomposeOptions opts = {});

namespace detail {

/// Pool-backed multiset of output edges with O(1) push and destructive O(1)
/// concatenation; element counts are conserved across concats.
class EdgeArena {
 public:
  struct Bag {
    int head = -1;
    int tail = -1;
    int size = 0;
  };

  void push(Bag& b, const OutputEdge& e) {
    const int idx = static_cast<int>(nodes_.size());
    nodes_.push_back({e, -1});
    if (b.tail >= 0)
      nodes_[static_cast<size_t>(b.tail)].next = idx;
    else
      b.head = idx;
    b.tail = idx;
    ++b.size;
  }

  /// Moves all of src onto the end of dst; src is left empty.
  void concat(Bag& dst, Bag& src) {
    if (src.head < 0) return;
    if (dst.tail >= 0)
      nodes_[static_cast<size_t>(dst.tail)].next = src.head;
    else
      dst.head = src.head;
    dst.tail = src.tail;
    dst.size += src.size;
    src = Bag{};
  }

  void collect(const Bag& b, std::vector<OutputEdge>& out) const {
    for (int i = b.head; i >= 0; i = nodes_[static_cast<size_t>(i)].next)
      out.push_back(nodes_[static_cast<size_t>(i)].edge);
  }

 private:
  struct Node {
    OutputEdge edge;
    int next = -1;
  };
  std::vector<Node> nodes_;
};

}  // namespace detail

}  // namespace tecc
