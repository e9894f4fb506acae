#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathhom/digraph.hpp"

namespace pathhom {

enum class CofibFailure {
  none,
  not_induced,
  edge_out,
  no_unique_closest,
  metric_violation,
};

std::string to_string(CofibFailure f);

/* Heights plus the projection onto the unique closest subgraph vertex;
   pi is defined exactly on X^A (identity on A). */
struct ProjectingDecomposition {
  Heights hts;
  std::vector<std::optional<int>> pi;
};

struct CofibVerdict {
  bool is_cofibration = false;
  CofibFailure failure = CofibFailure::none;
  std::optional<std::pair<int, int>> edge_witness;    // edge_out: (a, x)
  std::optional<int> vertex_witness;                  // no_unique_closest: x
  std::optional<std::pair<int, int>> metric_witness;  // metric_violation: (x, a)
  std::optional<ProjectingDecomposition> decomposition;
};

struct EdgesOut {
  bool ok = false;
  std::optional<std::pair<int, int>> witness;  // first offending (a, x)
};

EdgesOut no_edges_out(const VertexSubset& a);

struct ProjectionResult {
  std::optional<ProjectingDecomposition> pd;
  CofibFailure failure = CofibFailure::none;
  std::optional<int> vertex_witness;
  std::optional<std::pair<int, int>> metric_witness;
};

/* Heights, then per reaching vertex the unique closest member (failure
   no_unique_closest), then the metric condition dist(x,a) = h(x) +
   dist(pi x, a) for every reachable a (failure metric_violation).
   Distances are BFS per source over the whole parent graph. */
ProjectionResult projecting_decomposition(const VertexSubset& a);

CofibVerdict check_cofibration(const VertexSubset& a);

/* Subgraph-valued variant: rejects a non-induced subgraph unless
   coerce_induced replaces it by the induced closure of its vertex set. */
CofibVerdict check_cofibration_subgraph(const DiGraph& x, const DiGraph& a,
                                        bool coerce_induced = false);

/* Re-checks the composite inclusion A into X given A inside B inside X. */
CofibVerdict compose_cofibrations(const VertexSubset& b_in_x,
                                  const std::vector<std::string>& a_members);

/* (inner.A, inner.X) presented as a retract of (outer.A, outer.X). */
struct RetractDiagram {
  VertexSubset inner;
  VertexSubset outer;
  GraphMap section;     // inner parent -> outer parent
  GraphMap retraction;  // outer parent -> inner parent
};

/* Validates the diagram shape (retraction after section = identity, both
   maps respecting the subsets), then re-checks the inner inclusion. */
CofibVerdict verify_retract(const RetractDiagram& d);

/* The codiagonal X + X -> X factored through the box product with the
   5-vertex zigzag J: a cofibration X x dJ into X x J followed by the
   J-collapsing projection. */
struct CodiagonalFactorization {
  DiGraph xj;             // X box J
  VertexSubset boundary;  // X x dJ
  GraphMap include_left;  // X -> XJ at J-vertex -2
  GraphMap include_right; // X -> XJ at J-vertex 2
  GraphMap projection;    // XJ -> X
  CofibVerdict cofib_verdict;
};

CodiagonalFactorization codiagonal_factorization(const DiGraph& x);

/* BFS distances from src over directed edges; -1 when unreachable. */
std::vector<int> bfs_distances(const DiGraph& g, int src);

}  // namespace pathhom
