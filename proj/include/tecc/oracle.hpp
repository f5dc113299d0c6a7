#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tecc/decompose.hpp"
#include "tecc/graph.hpp"

namespace tecc {

/// Thrown when an oracle routine is asked to enumerate beyond its size
/// guard. The oracle is exhaustive by design and desk-scale only.
class OracleSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  int max_edges = 64;
};

/// min(cap, number of pairwise edge-disjoint s-t paths), computed with
/// augmenting paths on unit capacities and stopping after cap augmentations.
/// Throws std::invalid_argument when s == t. Vertices in different
/// connected components yield 0.
int max_flow_value(const Multigraph& g, VertexId s, VertexId t, int cap = 3);

/// Exhaustive cut listing: all bridges (m connectivity checks) and all
/// minimal 2-cuts (pairs whose removal disconnects while neither member is
/// a bridge).
struct CutReport {
  std::vector<EdgeId> bridges;
  std::vector<std::pair<EdgeId, EdgeId>> two_cuts;  // first < second
};

CutReport enumerate_cuts(const Multigraph& g, OracleLimits limits = {});

/// Classes of the relation "joined by three edge-disjoint paths", computed
/// pairwise by flow and closed; transitivity of the pairwise relation is
/// asserted along the way. Classes sorted ascending, ordered by smallest
/// member.
std::vector<std::vector<VertexId>> three_ecc_classes(const Multigraph& g,
                                                     OracleLimits limits = {});

/// For one class: the induced original edges (self-loops included) and the
/// auxiliary endpoint pairs obtained by replacing each minimal 2-cut whose
/// same-side endpoints are distinct and 3-edge-connected.
struct ReferenceSubgraph {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> induced_edges;
  std::vector<std::pair<VertexId, VertexId>> aux_pairs;  // (min, max)
};

struct ReferencePartition {
  std::vector<std::vector<VertexId>> classes;
  std::vector<ReferenceSubgraph> subgraphs;  // parallel to classes
};

ReferencePartition reference_aux_subgraphs(const Multigraph& g, OracleLimits limits = {});

struct Verdict {
  bool pass = false;
  std::string diff;  // empty on pass; names the first discrepancy otherwise

  explicit operator bool() const { return pass; }
};

/// PASS iff (a) the partitions agree, (b) per class the original edge id
/// multisets agree, (c) per class the auxiliary endpoint pair multisets
/// agree (tags ignored), and (d) every decomposer component of two or more
/// vertices is 3-edge-connected under the flow oracle once its auxiliary
/// edges are included.
Verdict check_equivalence(const Multigraph& g, const Decomposition& dec,
                          const ReferencePartition& ref);

}  // namespace tecc
