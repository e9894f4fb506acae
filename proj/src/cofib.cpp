#include "pathhom/cofib.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace pathhom {

std::string to_string(CofibFailure f) {
  switch (f) {
    case CofibFailure::none: return "none";
    case CofibFailure::not_induced: return "not-induced";
    case CofibFailure::edge_out: return "edge-out";
    case CofibFailure::no_unique_closest: return "no-unique-closest";
    case CofibFailure::metric_violation: return "metric-violation";
  }
  return "?";
}

std::vector<int> bfs_distances(const DiGraph& g, int src) {
  std::vector<int> dist(g.num_vertices(), -1);
  dist[src] = 0;
  std::deque<int> queue{src};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.out(v)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

EdgesOut no_edges_out(const VertexSubset& a) {
  for (auto [u, v] : a.parent().edges())
    if (a.contains(u) && !a.contains(v)) return {false, {{u, v}}};
  return {true, std::nullopt};
}

namespace {

/* Edge dichotomy of a valid decomposition: for an edge x->y inside X^A with
   h(x) >= h(y), either the heights agree and pi x -> pi y is an edge or
   pi x = pi y, or h(x) = h(y)+1 and pi x = pi y. A violation here means the
   decomposition logic is broken, not that the input fails. */
void assert_edge_dichotomy(const VertexSubset& a,
                           const ProjectingDecomposition& pd) {
  const DiGraph& x = a.parent();
  for (auto [u, v] : x.edges()) {
    if (!pd.hts.h[u] || !pd.hts.h[v]) continue;
    int hu = *pd.hts.h[u], hv = *pd.hts.h[v];
    if (hu < hv) continue;
    int pu = *pd.pi[u], pv = *pd.pi[v];
    bool ok;
    if (hu == hv)
      ok = pu == pv || x.has_edge(pu, pv);
    else if (hu == hv + 1)
      ok = pu == pv;
    else
      ok = false;  // an edge can raise height by at most one
    if (!ok)
      throw std::logic_error("projection violates the edge dichotomy at " +
                             x.label(u) + " -> " + x.label(v));
  }
}

}  // namespace

ProjectionResult projecting_decomposition(const VertexSubset& a) {
  const DiGraph& x = a.parent();
  ProjectionResult res;
  ProjectingDecomposition pd;
  pd.hts = heights(a);
  pd.pi.assign(x.num_vertices(), std::nullopt);
  for (int v : a.members()) pd.pi[v] = v;

  std::vector<std::vector<int>> dist_from(x.num_vertices());
  for (int v : pd.hts.reaching)
    if (!a.contains(v)) dist_from[v] = bfs_distances(x, v);
  for (int v : a.members()) dist_from[v] = bfs_distances(x, v);

  for (int v : pd.hts.reaching) {
    if (a.contains(v)) continue;
    int closest = -1;
    bool unique = true;
    for (int m : a.members()) {
      int d = dist_from[v][m];
      if (d < 0 || d != *pd.hts.h[v]) continue;
      if (closest < 0)
        closest = m;
      else
        unique = false;
    }
    if (closest < 0)
      throw std::logic_error("height witness lost for " + x.label(v));
    if (!unique) {
      res.failure = CofibFailure::no_unique_closest;
      res.vertex_witness = v;
      return res;
    }
    pd.pi[v] = closest;
  }

  for (int v : pd.hts.reaching) {
    if (a.contains(v)) continue;
    for (int m : a.members()) {
      int d = dist_from[v][m];
      if (d < 0) continue;
      int via = dist_from[*pd.pi[v]][m];
      if (via < 0 || d != *pd.hts.h[v] + via) {
        res.failure = CofibFailure::metric_violation;
        res.metric_witness = {{v, m}};
        return res;
      }
    }
  }

  assert_edge_dichotomy(a, pd);
  res.pd = std::move(pd);
  return res;
}

CofibVerdict check_cofibration(const VertexSubset& a) {
  CofibVerdict v;
  auto eo = no_edges_out(a);
  if (!eo.ok) {
    v.failure = CofibFailure::edge_out;
    v.edge_witness = eo.witness;
    return v;
  }
  auto pr = projecting_decomposition(a);
  if (!pr.pd) {
    v.failure = pr.failure;
    v.vertex_witness = pr.vertex_witness;
    v.metric_witness = pr.metric_witness;
    return v;
  }
  v.is_cofibration = true;
  v.decomposition = std::move(pr.pd);
  return v;
}

CofibVerdict check_cofibration_subgraph(const DiGraph& x, const DiGraph& a,
                                        bool coerce_induced) {
  for (const auto& l : a.labels())
    if (!x.index_of(l))
      throw std::invalid_argument("subgraph vertex not in ambient graph: " + l);
  VertexSubset subset(x, a.labels());
  if (!coerce_induced && !(a == subset.induced())) {
    CofibVerdict v;
    v.failure = CofibFailure::not_induced;
    return v;
  }
  return check_cofibration(subset);
}

CofibVerdict compose_cofibrations(const VertexSubset& b_in_x,
                                  const std::vector<std::string>& a_members) {
  std::set<std::string> b_labels;
  for (const auto& l : b_in_x.member_labels()) b_labels.insert(l);
  for (const auto& l : a_members)
    if (!b_labels.count(l))
      throw std::invalid_argument("composite subset member " + l +
                                  " is not in the middle subgraph");
  return check_cofibration(VertexSubset(b_in_x.parent(), a_members));
}

CofibVerdict verify_retract(const RetractDiagram& d) {
  const DiGraph& xi = d.inner.parent();
  const DiGraph& xo = d.outer.parent();
  if (!(d.section.domain() == xi) || !(d.section.codomain() == xo) ||
      !(d.retraction.domain() == xo) || !(d.retraction.codomain() == xi))
    throw std::invalid_argument("retract diagram maps have wrong endpoints");
  for (std::size_t v = 0; v < xi.num_vertices(); ++v)
    if (d.retraction.apply(d.section.apply(static_cast<int>(v))) !=
        static_cast<int>(v))
      throw std::invalid_argument(
          "retraction after section is not the identity at " +
          xi.label(v));
  for (int v : d.inner.members())
    if (!d.outer.contains(d.section.apply(v)))
      throw std::invalid_argument("section leaves the subgraph at " +
                                  xi.label(v));
  for (int v : d.outer.members())
    if (!d.inner.contains(d.retraction.apply(v)))
      throw std::invalid_argument("retraction leaves the subgraph at " +
                                  xo.label(v));
  return check_cofibration(d.inner);
}

CodiagonalFactorization codiagonal_factorization(const DiGraph& x) {
  auto j = gen_J();
  auto xj = box_product(x, j);
  auto at = [&](const std::string& l, const char* jv) {
    return "(" + l + "," + jv + ")";
  };
  std::vector<std::string> boundary_labels;
  for (const auto& l : x.labels()) {
    boundary_labels.push_back(at(l, "-2"));
    boundary_labels.push_back(at(l, "2"));
  }
  VertexSubset boundary(xj, boundary_labels);

  std::map<std::string, std::string> left, right, proj;
  for (const auto& l : x.labels()) {
    left.emplace(l, at(l, "-2"));
    right.emplace(l, at(l, "2"));
  }
  for (std::size_t v = 0; v < xj.num_vertices(); ++v) {
    const auto& label = xj.label(v);
    /* "(x,j)" with j one of -2,-1,0,1,2 */
    auto cut = label.rfind(',');
    proj.emplace(label, label.substr(1, cut - 1));
  }

  CodiagonalFactorization out{
      xj,
      boundary,
      GraphMap(x, xj, left),
      GraphMap(x, xj, right),
      GraphMap(xj, x, proj),
      check_cofibration(boundary)};
  return out;
}

}  // namespace pathhom
