#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tecc/decompose.hpp"
#include "tecc/graph.hpp"

namespace tecc {

/// Edge list format: a header line "n m", then m data lines "u v" with
/// 0-based endpoints. Lines starting with '#' are comments and blank lines
/// are ignored. Errors carry the 1-based line number.
Multigraph read_edge_list(std::istream& in);
Multigraph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Multigraph& g);

/// Canonical, order-normalized form of a decomposition, the unit of all
/// serialized output. Components are ordered by smallest vertex, vertex
/// lists sorted, edges ordered by kind then endpoints then id/tag, bridges
/// by id, cuts by tag; serialization is therefore byte-deterministic.
struct DecompositionDoc {
  struct Edge {
    bool aux = false;
    EdgeId id = -1;    // originals only
    VertexId u = -1;   // u <= v
    VertexId v = -1;
    int cut = -1;      // auxiliaries only

    bool operator==(const Edge&) const = default;
  };
  struct Comp {
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;

    bool operator==(const Comp&) const = default;
  };
  struct Bridge {
    EdgeId id = -1;
    VertexId u = -1;
    VertexId v = -1;

    bool operator==(const Bridge&) const = default;
  };
  struct Cut {
    int tag = -1;
    Edge first;
    Edge second;

    bool operator==(const Cut&) const = default;
  };

  int n = 0;
  int m = 0;
  std::vector<Comp> components;
  std::vector<Bridge> bridges;
  std::vector<Cut> two_cuts;

  bool operator==(const DecompositionDoc&) const = default;
};

DecompositionDoc make_doc(const Multigraph& g, const Decomposition& d);

std::string to_text(const DecompositionDoc& doc);
std::string to_json(const DecompositionDoc& doc);
DecompositionDoc doc_from_json(const std::string& json);

/// DOT rendering: one cluster per component, auxiliary edges dashed, and
/// original edges that run between components (bridges and cut members)
/// drawn outside the clusters in a distinct style.
std::string export_dot(const Multigraph& g, const Decomposition& d);

}  // namespace tecc
