#include "tecc/decompose.hpp"

#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tecc {

namespace {

bool via_less(const OutputEdge& a, const OutputEdge& b) {
  // Fixed rank for parallel candidates: originals first, then by id / tag.
  if (a.kind != b.kind) return a.kind == OutputEdge::Kind::Original;
  if (a.kind == OutputEdge::Kind::Original) return a.id < b.id;
  return a.cut_tag < b.cut_tag;
}

}  // namespace

bool ear_less(const DfsTreeView& t, const EarValue& a, const EarValue& b, VertexId w) {
  if (a.infinite || b.infinite) {
    if (a.infinite && b.infinite) return false;
    if (a.infinite)  // sentinel < (x curving to y) iff w is an ancestor of y
      return t.is_ancestor(w, b.head);
    // (x curving to y) < sentinel iff y is a proper ancestor of w and the
    // tail x lies in w's subtree
    return a.head != w && t.is_ancestor(a.head, w) && t.is_ancestor(w, a.tail);
  }
  if (a.head != b.head)
    return t.visit[static_cast<size_t>(a.head)] < t.visit[static_cast<size_t>(b.head)];
  if (a.tail != b.tail) {
    if (t.visit[static_cast<size_t>(a.tail)] < t.visit[static_cast<size_t>(b.tail)])
      return !t.is_ancestor(a.tail, b.tail);
    return t.is_ancestor(b.tail, a.tail);  // a's tail a proper descendant of b's
  }
  return via_less(a.via, b.via);
}

namespace {

// All per-vertex bookkeeping for one run. Vertices double as supervertex
// representatives; the transformed graph is never materialized, it is
// encoded by the degree counters, path links, parent edges and ear
// embodiments together.
struct Decomposer {
  const Multigraph& g;
  DecomposeOptions opts;
  WorkCounters& ctr;

  int n;
  std::vector<int> visit;       // dfs numbers, 1-based; 0 = unvisited
  std::vector<int> subtree;     // descendant count including self
  std::vector<int> degree;      // degree in the transformed graph
  std::vector<VertexId> parent;
  std::vector<EdgeId> tree_edge_id;        // id of the edge the DFS arrived by
  std::vector<OutputEdge> parent_edge;     // current embodiment of the parent edge
  std::vector<VertexId> path_next;         // successor on the current w-path
  std::vector<unsigned char> open;
  std::vector<EarValue> ear;
  std::vector<std::vector<VertexId>> pending_incoming;  // tails of stored back-edges

  // sigma: intrusive member lists, one per live supervertex
  std::vector<VertexId> member_next;
  std::vector<VertexId> member_tail;
  std::vector<int> member_count;

  detail::EdgeArena arena;
  std::vector<detail::EdgeArena::Bag> bag;  // alpha

  std::vector<int> component_of;  // vertex -> emitted component index
  Decomposition out;
  int counter = 1;

  Decomposer(const Multigraph& graph, WorkCounters& counters, DecomposeOptions options)
      : g(graph), opts(options), ctr(counters), n(graph.vertex_count()) {
    const auto sn = static_cast<size_t>(n);
    visit.assign(sn, 0);
    subtree.assign(sn, 1);
    degree.assign(sn, 0);
    parent.assign(sn, -1);
    tree_edge_id.assign(sn, -1);
    parent_edge.assign(sn, OutputEdge{});
    path_next.assign(sn, -1);
    open.assign(sn, 0);
    ear.assign(sn, EarValue::inf());
    pending_incoming.resize(sn);
    member_next.assign(sn, -1);
    member_tail.assign(sn, -1);
    member_count.assign(sn, 1);
    bag.assign(sn, {});
    component_of.assign(sn, -1);
  }

  DfsTreeView view() const { return {visit, subtree, open}; }

  bool less(const EarValue& a, const EarValue& b, VertexId w) {
    ++ctr.ear_comparisons;
    return ear_less(view(), a, b, w);
  }
  bool less_eq(const EarValue& a, const EarValue& b, VertexId w) { return !less(b, a, w); }

  void bag_push(VertexId w, const OutputEdge& e) {
    ++ctr.alpha_insertions;
    arena.push(bag[static_cast<size_t>(w)], e);
  }

  // Merges supervertex x into w: edge bag, member list and degree.
  void merge_into(VertexId w, VertexId x) {
    arena.concat(bag[static_cast<size_t>(w)], bag[static_cast<size_t>(x)]);
    bag_push(w, parent_edge[static_cast<size_t>(x)]);
    const VertexId wt = member_tail[static_cast<size_t>(w)] >= 0
                            ? member_tail[static_cast<size_t>(w)]
                            : w;
    member_next[static_cast<size_t>(wt)] = x;
    member_tail[static_cast<size_t>(w)] =
        member_tail[static_cast<size_t>(x)] >= 0 ? member_tail[static_cast<size_t>(x)] : x;
    member_count[static_cast<size_t>(w)] += member_count[static_cast<size_t>(x)];
    degree[static_cast<size_t>(w)] += degree[static_cast<size_t>(x)] - 2;
  }

  // Ejects supervertex u: freezes its vertex set and edge bag as a finished
  // component.
  void emit(VertexId u) {
    Component comp;
    comp.vertices.reserve(static_cast<size_t>(member_count[static_cast<size_t>(u)]));
    const int index = static_cast<int>(out.components.size());
    for (VertexId x = u; x >= 0; x = member_next[static_cast<size_t>(x)]) {
      comp.vertices.push_back(x);
      component_of[static_cast<size_t>(x)] = index;
    }
    comp.edges.reserve(static_cast<size_t>(bag[static_cast<size_t>(u)].size));
    arena.collect(bag[static_cast<size_t>(u)], comp.edges);
    out.components.push_back(std::move(comp));
  }

  void begin_vertex(VertexId w, VertexId from, EdgeId via_edge) {
    visit[static_cast<size_t>(w)] = counter++;
    parent[static_cast<size_t>(w)] = from;
    tree_edge_id[static_cast<size_t>(w)] = via_edge;
    if (via_edge >= 0) parent_edge[static_cast<size_t>(w)] = OutputEdge::original(via_edge, from, w);
    open[static_cast<size_t>(w)] = 1;
  }

  // Walks the path starting at head, absorbing every supervertex on it into
  // w, then adds the path's ear. A head of -1 means the current w-path is
  // the null path: only ear(w) itself is added. No-op when null_path.
  void absorb_ear(VertexId w, VertexId head, bool null_path) {
    if (null_path) return;
    if (head < 0) {
      if (!ear[static_cast<size_t>(w)].infinite) bag_push(w, ear[static_cast<size_t>(w)].via);
      return;
    }
    VertexId x = head;
    while (x >= 0) {
      ++ctr.path_link_traversals;
      merge_into(w, x);
      x = path_next[static_cast<size_t>(x)];
    }
    const EarValue& e = ear[static_cast<size_t>(head)];
    assert(!e.infinite);
    bag_push(w, e.via);
  }

  // Handles one stored incoming back-edge (u curving to w): removes its two
  // edge ends and absorbs the w-path prefix whose subtrees contain u.
  void absorb_subpath(VertexId w, VertexId u) {
    degree[static_cast<size_t>(w)] -= 2;
    VertexId x = path_next[static_cast<size_t>(w)];
    while (x >= 0) {
      ++ctr.path_link_traversals;
      const auto sx = static_cast<size_t>(x);
      const bool descendant = visit[sx] <= visit[static_cast<size_t>(u)] &&
                              visit[static_cast<size_t>(u)] < visit[sx] + subtree[sx];
      if (!descendant) break;
      merge_into(w, x);
      x = path_next[sx];
    }
    path_next[static_cast<size_t>(w)] = x;
  }

  // Ejects the degree <= 2 child u at backtrack time. Sets null_path when
  // the u-path vanishes, otherwise rewrites head to the surviving path
  // head. Generates the auxiliary edges of the 2-cut per the two cases.
  void gen_aux_edges(VertexId w, VertexId u, bool& null_path, VertexId& head) {
    const auto su = static_cast<size_t>(u);
    if (degree[su] == 1) {
      // The parent edge is a bridge; the subtree's last component is done.
      assert(parent_edge[su].kind == OutputEdge::Kind::Original);
      if (opts.debug_checks && !ear[su].infinite)
        throw std::logic_error("bridge child carries a live ear");
      out.bridges.push_back(parent_edge[su].id);
      null_path = true;
    } else if (path_next[su] < 0) {
      // 2-cut {parent edge of u, ear(u)}.
      const EarValue cut_ear = ear[su];
      assert(!cut_ear.infinite);
      const int tag = static_cast<int>(out.two_cuts.size());
      out.two_cuts.push_back({parent_edge[su], cut_ear.via});
      const VertexId other_tail = cut_ear.tail;  // inside sigma(u)
      const VertexId d = cut_ear.head;
      if (w != d)  // the far-side auxiliary edge becomes the new embodiment
        ear[su] = EarValue::back_edge(w, d, OutputEdge::auxiliary(w, d, tag));
      if (u != other_tail) bag_push(u, OutputEdge::auxiliary(u, other_tail, tag));
      null_path = true;
    } else {
      // 2-cut {parent edge of u, parent edge of the next path vertex}.
      const VertexId u1 = path_next[su];
      const auto su1 = static_cast<size_t>(u1);
      const VertexId other_endpoint = parent[su1];  // inside sigma(u)
      const int tag = static_cast<int>(out.two_cuts.size());
      out.two_cuts.push_back({parent_edge[su], parent_edge[su1]});
      parent[su1] = w;
      parent_edge[su1] = OutputEdge::auxiliary(w, u1, tag);
      if (u != other_endpoint) bag_push(u, OutputEdge::auxiliary(u, other_endpoint, tag));
      head = u1;
      if (opts.debug_checks && !(ear[su1].via == ear[su].via))
        throw std::logic_error("path ear mismatch after re-heading");
    }
    emit(u);
    // The subtree was cut off; for a bridge this retires the dead edge end,
    // for a 2-cut the embodiment inherits the count.
    degree[static_cast<size_t>(w)] += degree[su] - 2;
  }

  // Backtrack handling after child u finished.
  void after_child(VertexId w, VertexId u) {
    const auto su = static_cast<size_t>(u);
    subtree[static_cast<size_t>(w)] += subtree[su];
    bool null_path = false;
    VertexId head = u;
    if (degree[su] <= 2) gen_aux_edges(w, u, null_path, head);
    if (less_eq(ear[static_cast<size_t>(w)], ear[su], w)) {
      absorb_ear(w, head, null_path);
      // A vanished u-path left its ear embodied as a new edge out of w; if
      // it reaches a proper ancestor, it belongs to w's component.
      const EarValue& eu = ear[su];
      if (null_path && !eu.infinite && eu.head != w) {
        assert(view().is_ancestor(eu.head, w));
        bag_push(w, eu.via);
      }
    } else {
      absorb_ear(w, path_next[static_cast<size_t>(w)], false);
      path_next[static_cast<size_t>(w)] = null_path ? -1 : head;
      ear[static_cast<size_t>(w)] = ear[su];
    }
  }

  void outgoing_back_edge(VertexId w, VertexId u, EdgeId e) {
    const EarValue candidate = EarValue::back_edge(w, u, OutputEdge::original(e, w, u));
    if (less(candidate, ear[static_cast<size_t>(w)], w)) {
      absorb_ear(w, path_next[static_cast<size_t>(w)], false);
      path_next[static_cast<size_t>(w)] = -1;
      ear[static_cast<size_t>(w)] = candidate;
    } else {
      bag_push(w, candidate.via);
    }
  }

  void check_path_invariants(VertexId w) {
    int prev_visit = visit[static_cast<size_t>(w)];
    const EarValue& path_ear = ear[static_cast<size_t>(w)];
    for (VertexId x = path_next[static_cast<size_t>(w)]; x >= 0;
         x = path_next[static_cast<size_t>(x)]) {
      const auto sx = static_cast<size_t>(x);
      if (visit[sx] <= prev_visit)
        throw std::logic_error("w-path visit numbers not strictly increasing at vertex " +
                               std::to_string(x));
      if (degree[sx] < 3)
        throw std::logic_error("interior w-path supervertex " + std::to_string(x) +
                               " has degree " + std::to_string(degree[sx]) + " < 3");
      if (path_ear.infinite || !(ear[sx].via == path_ear.via))
        throw std::logic_error("w-path ear embodiment mismatch at vertex " +
                               std::to_string(x));
      prev_visit = visit[sx];
    }
  }

  // Completes L[w]: drains the stored incoming back-edges in insertion
  // order, then runs the structural checks if enabled.
  void finish_vertex(VertexId w) {
    for (const VertexId u : pending_incoming[static_cast<size_t>(w)]) absorb_subpath(w, u);
    pending_incoming[static_cast<size_t>(w)].clear();
    if (opts.debug_checks) check_path_invariants(w);
    open[static_cast<size_t>(w)] = 0;
  }

  struct Frame {
    VertexId w;
    int cursor = 0;
    VertexId returned_child = -1;
  };

  void run_component(VertexId root) {
    std::vector<Frame> stack;
    begin_vertex(root, -1, -1);
    stack.push_back({root});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.returned_child >= 0) {
        after_child(f.w, f.returned_child);
        f.returned_child = -1;
      }
      const auto adj = g.adjacent(f.w);
      bool descended = false;
      while (f.cursor < static_cast<int>(adj.size())) {
        const auto [e, u] = adj[static_cast<size_t>(f.cursor++)];
        ++degree[static_cast<size_t>(f.w)];
        ++ctr.dfs_steps;
        if (visit[static_cast<size_t>(u)] == 0) {
          begin_vertex(u, f.w, e);
          f.returned_child = u;
          stack.push_back({u});
          descended = true;
          break;
        } else if (e == tree_edge_id[static_cast<size_t>(f.w)]) {
          // the one adjacency entry of the tree edge to the parent; parallel
          // copies fall through as back-edges
        } else if (visit[static_cast<size_t>(u)] < visit[static_cast<size_t>(f.w)]) {
          outgoing_back_edge(f.w, u, e);
        } else {
          pending_incoming[static_cast<size_t>(f.w)].push_back(u);
        }
      }
      if (descended) continue;
      finish_vertex(f.w);
      stack.pop_back();
    }
    if (opts.debug_checks) {
      if (path_next[static_cast<size_t>(root)] >= 0)
        throw std::logic_error("root path not empty at termination");
      if (degree[static_cast<size_t>(root)] != 0)
        throw std::logic_error("transformed graph not edgeless at termination; root degree " +
                               std::to_string(degree[static_cast<size_t>(root)]));
    }
    emit(root);
  }

  Decomposition run() {
    for (VertexId v = 0; v < n; ++v)
      if (visit[static_cast<size_t>(v)] == 0) run_component(v);
    // Diverted input self-loops join the component of their vertex.
    for (VertexId v = 0; v < n; ++v)
      for (const EdgeId e : g.self_loops(v))
        out.components[static_cast<size_t>(component_of[static_cast<size_t>(v)])]
            .edges.push_back(OutputEdge::original(e, v, v));
    return std::move(out);
  }
};

}  // namespace

Decomposition decompose(const Multigraph& g, WorkCounters& counters, DecomposeOptions opts) {
  Decomposer d(g, counters, opts);
  return d.run();
}

Decomposition decompose(const Multigraph& g, DecomposeOptions opts) {
  WorkCounters counters;
  return decompose(g, counters, opts);
}

}  // namespace tecc
