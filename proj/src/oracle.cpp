#include "tecc/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace tecc {

namespace {

void check_guard(const Multigraph& g, const OracleLimits& limits, const char* what) {
  if (g.edge_count() > limits.max_edges) {
    std::ostringstream msg;
    msg << what << ": graph has " << g.edge_count() << " edges, oracle size guard is "
        << limits.max_edges;
    throw OracleSizeError(msg.str());
  }
}

// Component label per vertex, ignoring the edges for which skip(e) is true.
template <typename Skip>
std::vector<int> component_labels(const Multigraph& g, Skip skip) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<size_t>(n), -1);
  std::vector<VertexId> stack;
  int next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[static_cast<size_t>(s)] >= 0) continue;
    label[static_cast<size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const auto& half : g.adjacent(v)) {
        if (skip(half.edge)) continue;
        if (label[static_cast<size_t>(half.to)] < 0) {
          label[static_cast<size_t>(half.to)] = next;
          stack.push_back(half.to);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const std::vector<int>& labels) {
  int max_label = -1;
  for (const int l : labels) max_label = std::max(max_label, l);
  return max_label + 1;
}

std::vector<std::vector<VertexId>> classes_from_labels(const std::vector<int>& label) {
  std::vector<std::vector<VertexId>> classes(static_cast<size_t>(component_count(label)));
  // Relabel by first appearance so classes come out ordered by smallest member.
  std::vector<int> order(classes.size(), -1);
  int next = 0;
  for (size_t v = 0; v < label.size(); ++v) {
    int& slot = order[static_cast<size_t>(label[v])];
    if (slot < 0) slot = next++;
    classes[static_cast<size_t>(slot)].push_back(static_cast<VertexId>(v));
  }
  return classes;
}

}  // namespace

int max_flow_value(const Multigraph& g, VertexId s, VertexId t, int cap) {
  if (s == t) throw std::invalid_argument("max_flow_value: s == t");

  // Each undirected non-loop edge becomes a pair of unit arcs; arc 2e runs
  // u -> v, arc 2e+1 runs v -> u, and pushing on one cancels the other.
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<int> flow(static_cast<size_t>(2 * m), 0);
  std::vector<int> prev_arc(static_cast<size_t>(n));
  std::vector<char> seen(static_cast<size_t>(n));

  int total = 0;
  while (total < cap) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<VertexId> queue{s};
    seen[static_cast<size_t>(s)] = 1;
    bool reached = false;
    for (size_t qi = 0; qi < queue.size() && !reached; ++qi) {
      const VertexId v = queue[qi];
      for (const auto& half : g.adjacent(v)) {
        const auto [eu, ev] = g.endpoints(half.edge);
        const int arc = 2 * half.edge + (v == eu ? 0 : 1);
        if (1 - flow[static_cast<size_t>(arc)] <= 0) continue;
        if (seen[static_cast<size_t>(half.to)]) continue;
        seen[static_cast<size_t>(half.to)] = 1;
        prev_arc[static_cast<size_t>(half.to)] = arc;
        if (half.to == t) {
          reached = true;
          break;
        }
        queue.push_back(half.to);
      }
    }
    if (!reached) break;
    for (VertexId v = t; v != s;) {
      const int arc = prev_arc[static_cast<size_t>(v)];
      ++flow[static_cast<size_t>(arc)];
      --flow[static_cast<size_t>(arc ^ 1)];
      const auto [eu, ev] = g.endpoints(static_cast<EdgeId>(arc / 2));
      v = (arc % 2 == 0) ? eu : ev;
    }
    ++total;
  }
  return total;
}

CutReport enumerate_cuts(const Multigraph& g, OracleLimits limits) {
  check_guard(g, limits, "enumerate_cuts");
  CutReport report;
  const int m = g.edge_count();
  const int base_components = component_count(component_labels(g, [](EdgeId) { return false; }));

  std::vector<char> is_bridge(static_cast<size_t>(m), 0);
  for (EdgeId e = 0; e < m; ++e) {
    if (g.is_self_loop(e)) continue;
    const auto labels = component_labels(g, [e](EdgeId x) { return x == e; });
    if (component_count(labels) > base_components) {
      is_bridge[static_cast<size_t>(e)] = 1;
      report.bridges.push_back(e);
    }
  }

  for (EdgeId e = 0; e < m; ++e) {
    if (g.is_self_loop(e) || is_bridge[static_cast<size_t>(e)]) continue;
    for (EdgeId f = e + 1; f < m; ++f) {
      if (g.is_self_loop(f) || is_bridge[static_cast<size_t>(f)]) continue;
      const auto labels = component_labels(g, [e, f](EdgeId x) { return x == e || x == f; });
      if (component_count(labels) > base_components) report.two_cuts.emplace_back(e, f);
    }
  }
  return report;
}

std::vector<std::vector<VertexId>> three_ecc_classes(const Multigraph& g, OracleLimits limits) {
  check_guard(g, limits, "three_ecc_classes");
  const int n = g.vertex_count();
  const auto cc = component_labels(g, [](EdgeId) { return false; });

  std::vector<std::vector<char>> related(static_cast<size_t>(n),
                                         std::vector<char>(static_cast<size_t>(n), 0));
  for (VertexId u = 0; u < n; ++u) {
    related[static_cast<size_t>(u)][static_cast<size_t>(u)] = 1;
    for (VertexId v = u + 1; v < n; ++v) {
      if (cc[static_cast<size_t>(u)] != cc[static_cast<size_t>(v)]) continue;
      if (max_flow_value(g, u, v, 3) == 3) {
        related[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        related[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
      }
    }
  }
  // The relation is transitive on vertices; keep that honest before closing.
#ifndef NDEBUG
  if (n <= 64) {
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = 0; b < n; ++b)
        for (VertexId c = 0; c < n; ++c)
          if (related[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
              related[static_cast<size_t>(b)][static_cast<size_t>(c)])
            assert(related[static_cast<size_t>(a)][static_cast<size_t>(c)]);
  }
#endif

  std::vector<int> cls(static_cast<size_t>(n), -1);
  int next = 0;
  for (VertexId u = 0; u < n; ++u) {
    if (cls[static_cast<size_t>(u)] >= 0) continue;
    cls[static_cast<size_t>(u)] = next;
    for (VertexId v = u + 1; v < n; ++v)
      if (related[static_cast<size_t>(u)][static_cast<size_t>(v)])
        cls[static_cast<size_t>(v)] = next;
    ++next;
  }
  return classes_from_labels(cls);
}

ReferencePartition reference_aux_subgraphs(const Multigraph& g, OracleLimits limits) {
  check_guard(g, limits, "reference_aux_subgraphs");
  ReferencePartition ref;
  ref.classes = three_ecc_classes(g, limits);

  const int n = g.vertex_count();
  std::vector<int> class_of(static_cast<size_t>(n), -1);
  for (size_t c = 0; c < ref.classes.size(); ++c)
    for (const VertexId v : ref.classes[c]) class_of[static_cast<size_t>(v)] = static_cast<int>(c);

  ref.subgraphs.resize(ref.classes.size());
  for (size_t c = 0; c < ref.classes.size(); ++c) ref.subgraphs[c].vertices = ref.classes[c];

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.endpoints(e);
    if (class_of[static_cast<size_t>(u)] == class_of[static_cast<size_t>(v)])
      ref.subgraphs[static_cast<size_t>(class_of[static_cast<size_t>(u)])].induced_edges.push_back(e);
  }

  const auto cuts = enumerate_cuts(g, limits);
  for (const auto& [e, f] : cuts.two_cuts) {
    const auto labels = component_labels(g, [e, f](EdgeId x) { return x == e || x == f; });
    const auto [eu, ev] = g.endpoints(e);
    const auto [fu, fv] = g.endpoints(f);
    // Both cut edges straddle the same two sides of the minimal cut.
    assert(labels[static_cast<size_t>(eu)] != labels[static_cast<size_t>(ev)]);
    for (const VertexId side_e : {eu, ev}) {
      const int side = labels[static_cast<size_t>(side_e)];
      const VertexId side_f = labels[static_cast<size_t>(fu)] == side ? fu : fv;
      assert(labels[static_cast<size_t>(side_f)] == side);
      if (side_e != side_f &&
          class_of[static_cast<size_t>(side_e)] == class_of[static_cast<size_t>(side_f)]) {
        ref.subgraphs[static_cast<size_t>(class_of[static_cast<size_t>(side_e)])]
            .aux_pairs.emplace_back(std::min(side_e, side_f), std::max(side_e, side_f));
      }
    }
  }
  for (auto& sub : ref.subgraphs) {
    std::sort(sub.induced_edges.begin(), sub.induced_edges.end());
    std::sort(sub.aux_pairs.begin(), sub.aux_pairs.end());
  }
  return ref;
}

namespace {

std::string vertex_set_string(const std::vector<VertexId>& vs) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  out << '}';
  return out.str();
}

}  // namespace

Verdict check_equivalence(const Multigraph& g, const Decomposition& dec,
                          const ReferencePartition& ref) {
  const int n = g.vertex_count();

  std::vector<int> dec_class(static_cast<size_t>(n), -1);
  for (size_t c = 0; c < dec.components.size(); ++c) {
    for (const VertexId v : dec.components[c].vertices) {
      if (v < 0 || v >= n || dec_class[static_cast<size_t>(v)] >= 0)
        return {false, "component vertex sets do not partition V (vertex " +
                           std::to_string(v) + ")"};
      dec_class[static_cast<size_t>(v)] = static_cast<int>(c);
    }
  }
  for (VertexId v = 0; v < n; ++v)
    if (dec_class[static_cast<size_t>(v)] < 0)
      return {false, "vertex " + std::to_string(v) + " missing from every component"};

  std::vector<int> ref_class(static_cast<size_t>(n), -1);
  for (size_t c = 0; c < ref.classes.size(); ++c)
    for (const VertexId v : ref.classes[c]) ref_class[static_cast<size_t>(v)] = static_cast<int>(c);

  // (a) same partition
  if (dec.components.size() != ref.classes.size())
    return {false, "partition size mismatch: decomposer " +
                       std::to_string(dec.components.size()) + " classes, oracle " +
                       std::to_string(ref.classes.size())};
  for (size_t c = 0; c < dec.components.size(); ++c) {
    auto sorted = dec.components[c].vertices;
    std::sort(sorted.begin(), sorted.end());
    const auto& ref_cls = ref.classes[static_cast<size_t>(
        ref_class[static_cast<size_t>(sorted.front())])];
    if (sorted != ref_cls)
      return {false, "class of vertex " + std::to_string(sorted.front()) + ": decomposer " +
                         vertex_set_string(sorted) + " vs oracle " + vertex_set_string(ref_cls)};
  }

  // (b)+(c) per class edge multisets
  for (size_t c = 0; c < dec.components.size(); ++c) {
    const auto& comp = dec.components[c];
    std::vector<EdgeId> originals;
    std::vector<std::pair<VertexId, VertexId>> aux;
    for (const auto& e : comp.edges) {
      if (e.kind == OutputEdge::Kind::Original)
        originals.push_back(e.id);
      else
        aux.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(originals.begin(), originals.end());
    std::sort(aux.begin(), aux.end());

    const auto& sub = ref.subgraphs[static_cast<size_t>(
        ref_class[static_cast<size_t>(comp.vertices.front())])];
    const std::string where = "component " + vertex_set_string(sub.vertices);
    if (originals != sub.induced_edges) {
      for (const EdgeId e : sub.induced_edges)
        if (!std::binary_search(originals.begin(), originals.end(), e))
          return {false, where + ": original edge " + std::to_string(e) +
                             " missing from decomposer output"};
      for (const EdgeId e : originals)
        if (!std::binary_search(sub.induced_edges.begin(), sub.induced_edges.end(), e))
          return {false, where + ": unexpected original edge " + std::to_string(e)};
      return {false, where + ": original edge multiplicities differ"};
    }
    if (aux != sub.aux_pairs) {
      std::ostringstream msg;
      msg << where << ": auxiliary pairs differ; decomposer has";
      for (const auto& [a, b] : aux) msg << " (" << a << "," << b << ")";
      msg << " oracle has";
      for (const auto& [a, b] : sub.aux_pairs) msg << " (" << a << "," << b << ")";
      return {false, msg.str()};
    }
  }

  // (d) each emitted subgraph, auxiliaries included, is 3-edge-connected
  for (const auto& comp : dec.components) {
    if (comp.vertices.size() < 2) continue;
    std::vector<int> local(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < comp.vertices.size(); ++i)
      local[static_cast<size_t>(comp.vertices[i])] = static_cast<int>(i);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& e : comp.edges) {
      if (local[static_cast<size_t>(e.u)] < 0 || local[static_cast<size_t>(e.v)] < 0)
        return {false, "edge endpoint outside its component"};
      pairs.emplace_back(local[static_cast<size_t>(e.u)], local[static_cast<size_t>(e.v)]);
    }
    const auto sub = Multigraph::from_edge_list(static_cast<int>(comp.vertices.size()), pairs);
    for (VertexId a = 0; a < sub.vertex_count(); ++a)
      for (VertexId b = a + 1; b < sub.vertex_count(); ++b)
        if (max_flow_value(sub, a, b, 3) < 3) {
          auto sorted = comp.vertices;
          std::sort(sorted.begin(), sorted.end());
          return {false, "component " + vertex_set_string(sorted) +
                             " with auxiliaries is not 3-edge-connected: pair (" +
                             std::to_string(comp.vertices[static_cast<size_t>(a)]) + "," +
                             std::to_string(comp.vertices[static_cast<size_t>(b)]) + ")"};
        }
  }

  return {true, ""};
}

}  // namespace tecc
