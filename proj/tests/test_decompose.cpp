#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "corpus.hpp"
#include "tecc/decompose.hpp"
#include "tecc/generator.hpp"
#include "tecc/io.hpp"
#include "tecc/oracle.hpp"

using namespace tecc;

namespace {

// Explicit DFS tree for exercising the ancestor test and the ear order
// without running a decomposition. Children listed in visit order.
struct TestTree {
  std::vector<std::vector<VertexId>> children;
  std::vector<VertexId> parent;
  std::vector<int> visit, subtree;
  std::vector<unsigned char> open;

  explicit TestTree(std::vector<VertexId> parents) : parent(std::move(parents)) {
    const size_t n = parent.size();
    children.resize(n);
    for (size_t v = 0; v < n; ++v)
      if (parent[v] >= 0) children[static_cast<size_t>(parent[v])].push_back(static_cast<VertexId>(v));
    visit.assign(n, 0);
    subtree.assign(n, 1);
    open.assign(n, 0);
    int counter = 1;
    number(root(), counter);
  }

  VertexId root() const {
    for (size_t v = 0; v < parent.size(); ++v)
      if (parent[v] < 0) return static_cast<VertexId>(v);
    return -1;
  }

  void number(VertexId v, int& counter) {
    visit[static_cast<size_t>(v)] = counter++;
    for (const VertexId c : children[static_cast<size_t>(v)]) {
      number(c, counter);
      subtree[static_cast<size_t>(v)] += subtree[static_cast<size_t>(c)];
    }
  }

  DfsTreeView view() const { return {visit, subtree, open}; }

  // Independent oracle: walk parent pointers from b to the root.
  bool ancestor_by_walk(VertexId a, VertexId b) const {
    for (VertexId x = b; x >= 0; x = parent[static_cast<size_t>(x)])
      if (x == a) return true;
    return false;
  }
};

Decomposition decompose_checked(const Multigraph& g) {
  return decompose(g, DecomposeOptions{.debug_checks = true});
}

// Edge ids consumed as bridges or cut members never appear in any
// component; everything else appears exactly once.
void check_edge_conservation(const Multigraph& g, const Decomposition& dec) {
  std::vector<int> uses(static_cast<size_t>(g.edge_count()), 0);
  for (const auto& comp : dec.components)
    for (const auto& e : comp.edges)
      if (e.kind == OutputEdge::Kind::Original) ++uses[static_cast<size_t>(e.id)];

  std::set<EdgeId> consumed(dec.bridges.begin(), dec.bridges.end());
  CHECK(consumed.size() == dec.bridges.size());  // no bridge listed twice
  for (const auto& cut : dec.two_cuts)
    for (const auto& member : {cut.first, cut.second})
      if (member.kind == OutputEdge::Kind::Original)
        CHECK(consumed.insert(member.id).second);  // consumed at most once

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (consumed.count(e)) {
      CHECK(uses[static_cast<size_t>(e)] == 0);
    } else {
      CHECK(uses[static_cast<size_t>(e)] == 1);
    }
  }
}

void check_invariants(const Multigraph& g, const Decomposition& dec) {
  // partition
  std::vector<int> owner(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t c = 0; c < dec.components.size(); ++c)
    for (const VertexId v : dec.components[c].vertices) {
      REQUIRE(owner[static_cast<size_t>(v)] == -1);
      owner[static_cast<size_t>(v)] = static_cast<int>(c);
    }
  for (VertexId v = 0; v < g.vertex_count(); ++v) REQUIRE(owner[static_cast<size_t>(v)] >= 0);

  check_edge_conservation(g, dec);

  // endpoint locality, auxiliary non-degeneracy, absorb-once
  std::set<std::tuple<int, int, int, int>> seen_edges;
  for (size_t c = 0; c < dec.components.size(); ++c) {
    for (const auto& e : dec.components[c].edges) {
      CHECK(owner[static_cast<size_t>(e.u)] == static_cast<int>(c));
      CHECK(owner[static_cast<size_t>(e.v)] == static_cast<int>(c));
      if (e.kind == OutputEdge::Kind::Auxiliary) {
        CHECK(e.u != e.v);
        CHECK(seen_edges.insert({1, e.cut_tag, std::min(e.u, e.v), std::max(e.u, e.v)}).second);
      } else {
        CHECK(seen_edges.insert({0, e.id, 0, 0}).second);
      }
    }
  }
}

}  // namespace

TEST_CASE("is_ancestor on explicit trees") {
  // 0 -> {1, 4}; 1 -> {2, 3}; 4 -> {5}
  TestTree t({-1, 0, 1, 1, 0, 4});
  const auto view = t.view();
  SUBCASE("reflexive") {
    for (VertexId v = 0; v < 6; ++v) CHECK(view.is_ancestor(v, v));
  }
  SUBCASE("root reaches everything") {
    for (VertexId v = 0; v < 6; ++v) CHECK(view.is_ancestor(0, v));
  }
  SUBCASE("sibling subtrees are unrelated both ways") {
    CHECK(!view.is_ancestor(2, 3));
    CHECK(!view.is_ancestor(3, 2));
    CHECK(!view.is_ancestor(1, 4));
    CHECK(!view.is_ancestor(5, 2));
  }
  SUBCASE("agrees with the parent-pointer walk everywhere") {
    for (VertexId a = 0; a < 6; ++a)
      for (VertexId b = 0; b < 6; ++b) CHECK(view.is_ancestor(a, b) == t.ancestor_by_walk(a, b));
  }
  SUBCASE("open vertices use the visit-number test") {
    TestTree partial({-1, 0, 1, 1, 0, 4});
    // Pretend the search currently sits inside 4's subtree.
    partial.open[0] = partial.open[4] = partial.open[5] = 1;
    const auto open_view = partial.view();
    CHECK(open_view.is_ancestor(4, 5));
    CHECK(open_view.is_ancestor(0, 5));
    CHECK(!open_view.is_ancestor(1, 5));  // closed sibling subtree
  }
}

TEST_CASE("ear order") {
  // 0 -> 1 -> 2 -> {3, 4}, with 4 after 3.
  TestTree t({-1, 0, 1, 2, 2});
  const auto view = t.view();
  const auto edge = [](VertexId tail, VertexId head, EdgeId id) {
    return EarValue::back_edge(tail, head, OutputEdge::original(id, tail, head));
  };

  SUBCASE("lower head wins regardless of tails") {
    CHECK(ear_less(view, edge(4, 0, 0), edge(3, 1, 1), 2));
    CHECK(!ear_less(view, edge(3, 1, 1), edge(4, 0, 0), 2));
  }
  SUBCASE("equal heads: proper descendant tail wins") {
    CHECK(ear_less(view, edge(3, 0, 0), edge(2, 0, 1), 2));
    CHECK(!ear_less(view, edge(2, 0, 1), edge(3, 0, 0), 2));
  }
  SUBCASE("equal heads: earlier unrelated tail wins") {
    CHECK(ear_less(view, edge(3, 0, 0), edge(4, 0, 1), 2));
    CHECK(!ear_less(view, edge(4, 0, 1), edge(3, 0, 0), 2));
  }
  SUBCASE("sentinel is smaller than a back-edge reaching only w") {
    const auto reaches_w = edge(3, 2, 0);
    CHECK(ear_less(view, EarValue::inf(), reaches_w, 2));
    CHECK(!ear_less(view, reaches_w, EarValue::inf(), 2));
  }
  SUBCASE("a back-edge escaping above w beats the sentinel") {
    const auto escaping = edge(3, 1, 0);
    CHECK(ear_less(view, escaping, EarValue::inf(), 2));
    CHECK(!ear_less(view, EarValue::inf(), escaping, 2));
  }
  SUBCASE("sentinel equals itself") {
    CHECK(!ear_less(view, EarValue::inf(), EarValue::inf(), 2));
    CHECK(ear_less_eq(view, EarValue::inf(), EarValue::inf(), 2));
  }
  SUBCASE("parallel back-edges rank by edge id") {
    CHECK(ear_less(view, edge(3, 0, 2), edge(3, 0, 5), 2));
    CHECK(!ear_less(view, edge(3, 0, 5), edge(3, 0, 2), 2));
  }
}

TEST_CASE("edge bag conserves elements across destructive concat") {
  detail::EdgeArena arena;
  detail::EdgeArena::Bag a, b;
  for (int i = 0; i < 3; ++i) arena.push(a, OutputEdge::original(i, 0, 1));
  for (int i = 3; i < 8; ++i) arena.push(b, OutputEdge::original(i, 2, 3));
  arena.concat(a, b);
  CHECK(a.size == 8);
  CHECK(b.size == 0);
  std::vector<OutputEdge> all;
  arena.collect(a, all);
  REQUIRE(all.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK(all[static_cast<size_t>(i)].id == i);
  std::vector<OutputEdge> empty;
  arena.collect(b, empty);
  CHECK(empty.empty());
}

TEST_CASE("C4 decomposes into four empty singletons") {
  const auto g = corpus::c4();
  const auto dec = decompose_checked(g);
  REQUIRE(dec.components.size() == 4);
  for (const auto& comp : dec.components) {
    CHECK(comp.vertices.size() == 1);
    CHECK(comp.edges.empty());
  }
  CHECK(dec.bridges.empty());
  check_invariants(g, dec);
}

TEST_CASE("K4 is a single component with all six edges and no auxiliaries") {
  const auto g = corpus::k4();
  const auto dec = decompose_checked(g);
  REQUIRE(dec.components.size() == 1);
  CHECK(dec.components[0].vertices.size() == 4);
  REQUIRE(dec.components[0].edges.size() == 6);
  for (const auto& e : dec.components[0].edges) CHECK(e.kind == OutputEdge::Kind::Original);
  CHECK(dec.bridges.empty());
  CHECK(dec.two_cuts.empty());
  check_invariants(g, dec);
}

TEST_CASE("three parallel edges form one component carrying all three") {
  const auto g = corpus::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}});
  const auto dec = decompose_checked(g);
  REQUIRE(dec.components.size() == 1);
  CHECK(dec.components[0].vertices.size() == 2);
  CHECK(dec.components[0].edges.size() == 3);
  check_invariants(g, dec);
}

TEST_CASE("two parallel edges split into singletons with discarded self-loop auxiliaries") {
  const auto g = corpus::from_pairs(2, {{0, 1}, {0, 1}});
  const auto dec = decompose_checked(g);
  REQUIRE(dec.components.size() == 2);
  for (const auto& comp : dec.components) {
    CHECK(comp.vertices.size() == 1);
    CHECK(comp.edges.empty());
  }
  CHECK(dec.bridges.empty());
  REQUIRE(dec.two_cuts.size() == 1);
  check_invariants(g, dec);
}

TEST_CASE("two K4 blocks joined by a two-edge bundle get one auxiliary each") {
  const auto g = corpus::two_k4_bundle();
  const auto dec = decompose_checked(g);
  REQUIRE(dec.components.size() == 2);

  std::map<VertexId, const Component*> by_min;
  for (const auto& comp : dec.components)
    by_min[*std::min_element(comp.vertices.begin(), comp.vertices.end())] = &comp;
  REQUIRE(by_min.count(0));
  REQUIRE(by_min.count(4));

  const auto expect_block = [](const Component& comp, VertexId lo,
                               std::pair<VertexId, VertexId> aux) {
    CHECK(comp.vertices.size() == 4);
    int originals = 0, auxiliaries = 0;
    for (const auto& e : comp.edges) {
      if (e.kind == OutputEdge::Kind::Original) {
        ++originals;
      } else {
        ++auxiliaries;
        CHECK(std::minmax(e.u, e.v) == std::minmax(aux.first, aux.second));
      }
      CHECK(e.u >= lo);
      CHECK(e.v < lo + 4);
    }
    CHECK(originals == 6);
    CHECK(auxiliaries == 1);
  };
  expect_block(*by_min[0], 0, {0, 1});
  expect_block(*by_min[4], 4, {4, 5});

  CHECK(dec.bridges.empty());
  REQUIRE(dec.two_cuts.size() == 1);
  // the cut members are the two joining edges, ids 12 and 13
  std::set<EdgeId> members;
  for (const auto& member : {dec.two_cuts[0].first, dec.two_cuts[0].second}) {
    REQUIRE(member.kind == OutputEdge::Kind::Original);
    members.insert(member.id);
  }
  CHECK(members == std::set<EdgeId>{12, 13});
  check_invariants(g, dec);
}

TEST_CASE("two K4 blocks joined by a single edge report it as a bridge") {
  const auto g = corpus::two_k4_bridge();
  const auto dec = decompose_checked(g);
  REQUIRE(dec.components.size() == 2);
  for (const auto& comp : dec.components) {
    CHECK(comp.vertices.size() == 4);
    CHECK(comp.edges.size() == 6);
    for (const auto& e : comp.edges) CHECK(e.kind == OutputEdge::Kind::Original);
  }
  CHECK(dec.bridges == std::vector<EdgeId>{12});
  CHECK(dec.two_cuts.empty());
  check_invariants(g, dec);
}

TEST_CASE("a pendant vertex hangs on a bridge") {
  // K4 plus vertex 4 attached to 0 by one edge
  const auto g = corpus::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
  const auto dec = decompose_checked(g);
  REQUIRE(dec.components.size() == 2);
  CHECK(dec.bridges == std::vector<EdgeId>{6});
  check_invariants(g, dec);
}

TEST_CASE("input self-loops are re-attached to their component") {
  const auto g = corpus::from_pairs(2, {{0, 1}, {0, 1}, {1, 1}});
  const auto dec = decompose_checked(g);
  REQUIRE(dec.components.size() == 2);
  bool found = false;
  for (const auto& comp : dec.components) {
    for (const auto& e : comp.edges) {
      CHECK(e.kind == OutputEdge::Kind::Original);
      CHECK(e.id == 2);
      CHECK(comp.vertices == std::vector<VertexId>{1});
      found = true;
    }
  }
  CHECK(found);
  check_invariants(g, dec);
}

TEST_CASE("disconnected inputs decompose per component") {
  // triangle with a doubled edge (one 3ecc pair) next to a lone K4
  const auto g = corpus::from_pairs(
      7, {{0, 1}, {1, 2}, {2, 0}, {2, 0}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
  const auto dec = decompose_checked(g);
  const auto ref = reference_aux_subgraphs(g);
  const auto verdict = check_equivalence(g, dec, ref);
  CHECK_MESSAGE(verdict.pass, verdict.diff);
}

// Long cycle with one chord: backtracking builds a multi-vertex supervertex
// path and the chord's stored incoming back-edge absorbs a slice of it.
// The chord endpoints end up 3-edge-connected with two auxiliary edges.
TEST_CASE("cycle-with-chord instances exercise subpath absorption") {
  for (const auto& [n, chord_a, chord_b] : std::vector<std::tuple<int, int, int>>{
           {8, 1, 4}, {8, 1, 5}, {8, 2, 6}, {8, 1, 7}, {6, 1, 3}, {10, 3, 8}}) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    pairs.emplace_back(chord_a, chord_b);
    const auto g = corpus::from_pairs(n, pairs);
    const auto dec = decompose_checked(g);
    const auto verdict = check_equivalence(g, dec, reference_aux_subgraphs(g));
    CHECK_MESSAGE(verdict.pass, "n=", n, " chord=(", chord_a, ",", chord_b, "): ", verdict.diff);

    // the chord endpoints are the one non-trivial class
    bool found_pair = false;
    for (const auto& comp : dec.components) {
      if (comp.vertices.size() == 2) {
        auto sorted = comp.vertices;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<VertexId>{chord_a, chord_b});
        found_pair = true;
      }
    }
    CHECK(found_pair);
  }
}

TEST_CASE("theta graphs split at both branch vertices") {
  // three internally disjoint paths between 0 and 1
  const auto g = corpus::from_pairs(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
  const auto dec = decompose_checked(g);
  const auto verdict = check_equivalence(g, dec, reference_aux_subgraphs(g));
  CHECK_MESSAGE(verdict.pass, verdict.diff);
}

TEST_CASE("random corpus satisfies the invariant suite and matches the oracle") {
  for (int i = 0; i < 300; ++i) {
    const auto g = corpus::random_instance(i, /*seed_base=*/11);
    CAPTURE(i);
    const auto dec = decompose_checked(g);
    check_invariants(g, dec);
    const auto verdict = check_equivalence(g, dec, reference_aux_subgraphs(g));
    CHECK_MESSAGE(verdict.pass, "instance ", i, ": ", verdict.diff);
  }
}

TEST_CASE("decomposition is deterministic") {
  for (int i = 0; i < 25; ++i) {
    const auto g = corpus::random_instance(i, /*seed_base=*/23);
    const auto a = to_text(make_doc(g, decompose(g)));
    const auto b = to_text(make_doc(g, decompose(g)));
    CHECK(a == b);
  }
}

TEST_CASE("instrumented run returns the identical decomposition") {
  const auto g = corpus::random_instance(4, /*seed_base=*/31);
  WorkCounters ctr;
  const auto plain = to_text(make_doc(g, decompose(g)));
  const auto counted = to_text(make_doc(g, decompose(g, ctr)));
  CHECK(plain == counted);
  CHECK(ctr.dfs_steps > 0);
}

TEST_CASE("K4 needs exactly six bag insertions") {
  WorkCounters ctr;
  decompose(corpus::k4(), ctr);
  CHECK(ctr.alpha_insertions == 6);
}

TEST_CASE("work stays within the linear budget") {
  for (int i = 0; i < 100; ++i) {
    const auto g = corpus::random_instance(i, /*seed_base=*/43, /*max_n=*/12, /*max_m=*/24);
    WorkCounters ctr;
    decompose(g, ctr);
    const auto budget =
        8ull * static_cast<unsigned long long>(g.vertex_count() + g.edge_count());
    CHECK(ctr.path_link_traversals + ctr.alpha_insertions <= budget);
  }
}

TEST_CASE("counters roughly double when the chain doubles") {
  WorkCounters small, large;
  decompose(gen_scaling_instance(10000), small);
  decompose(gen_scaling_instance(20000), large);
  const auto work = [](const WorkCounters& c) {
    return static_cast<double>(c.path_link_traversals + c.alpha_insertions);
  };
  CHECK(work(large) / work(small) <= 2.2);
  CHECK(static_cast<double>(large.dfs_steps) / static_cast<double>(small.dfs_steps) <= 2.2);
}
