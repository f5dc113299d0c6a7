#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "corpus.hpp"
#include "tecc/decompose.hpp"
#include "tecc/io.hpp"

using namespace tecc;

TEST_CASE("read_edge_list") {
  SUBCASE("parallel edges") {
    std::istringstream in("2 3\n0 1\n0 1\n0 1\n");
    const auto g = read_edge_list(in);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 3);
  }
  SUBCASE("isolated vertex") {
    std::istringstream in("1 0\n");
    const auto g = read_edge_list(in);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("endpoint out of range names the line") {
    std::istringstream in("2 1\n0 5\n");
    CHECK_THROWS_WITH_AS(read_edge_list(in), doctest::Contains("line 2"), std::runtime_error);
  }
  SUBCASE("missing header") {
    std::istringstream in("# only a comment\n");
    CHECK_THROWS_AS(read_edge_list(in), std::runtime_error);
  }
  SUBCASE("truncated edge section") {
    std::istringstream in("3 2\n0 1\n");
    CHECK_THROWS_WITH_AS(read_edge_list(in), doctest::Contains("expected 2 edges"),
                         std::runtime_error);
  }
  SUBCASE("junk after the data is rejected") {
    std::istringstream in("2 1\n0 1\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(in), std::runtime_error);
  }
  SUBCASE("comments and label lines are ignored") {
    std::istringstream in("# label 0 alpha\n2 1\n# label 1 beta\n0 1\n# trailing\n");
    const auto g = read_edge_list(in);
    CHECK(g.edge_count() == 1);
  }
}

TEST_CASE("edge list round-trips through write and read") {
  const auto g = corpus::two_k4_bundle();
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  const auto back = read_edge_list(in);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("K4 text document is byte-stable") {
  const auto g = corpus::k4();
  const auto text = to_text(make_doc(g, decompose(g)));
  CHECK(text ==
        "graph n=4 m=6\n"
        "components 1\n"
        "component 0\n"
        "  vertices: 0 1 2 3\n"
        "  edges: 6\n"
        "    original 0 (0,1)\n"
        "    original 1 (0,2)\n"
        "    original 2 (0,3)\n"
        "    original 3 (1,2)\n"
        "    original 4 (1,3)\n"
        "    original 5 (2,3)\n"
        "bridges: 0\n"
        "two-cuts: 0\n");
}

TEST_CASE("C4 text document lists four empty components") {
  const auto g = corpus::c4();
  const auto doc = make_doc(g, decompose(g));
  REQUIRE(doc.components.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(doc.components[i].vertices == std::vector<VertexId>{static_cast<VertexId>(i)});
    CHECK(doc.components[i].edges.empty());
  }
  CHECK(doc.bridges.empty());
}

TEST_CASE("serialization is deterministic") {
  const auto g = corpus::two_k4_bundle();
  const auto dec = decompose(g);
  CHECK(to_text(make_doc(g, dec)) == to_text(make_doc(g, dec)));
  CHECK(to_json(make_doc(g, dec)) == to_json(make_doc(g, dec)));
}

TEST_CASE("json round-trips to an equal document") {
  for (const auto& g : {corpus::k4(), corpus::c4(), corpus::two_k4_bundle(),
                        corpus::two_k4_bridge(), corpus::ring_of_three_k4()}) {
    const auto doc = make_doc(g, decompose(g));
    CHECK(doc_from_json(to_json(doc)) == doc);
  }
}

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t count = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("dot export") {
  SUBCASE("two-K4 bundle: two clusters, two dashed edges, two cut edges") {
    const auto g = corpus::two_k4_bundle();
    const auto dot = export_dot(g, decompose(g));
    CHECK(count_occurrences(dot, "subgraph cluster_") == 2);
    CHECK(count_occurrences(dot, "style=dashed") == 2);
    CHECK(count_occurrences(dot, "style=bold") == 2);
  }
  SUBCASE("K4: one cluster, six solid edges") {
    const auto g = corpus::k4();
    const auto dot = export_dot(g, decompose(g));
    CHECK(count_occurrences(dot, "subgraph cluster_") == 1);
    CHECK(count_occurrences(dot, "style=dashed") == 0);
    CHECK(count_occurrences(dot, " -- ") == 6);
  }
  SUBCASE("empty graph is a valid document") {
    const auto g = corpus::from_pairs(0, {});
    const auto dot = export_dot(g, decompose(g));
    CHECK(dot == "graph tecc {\n}\n");
  }
}
