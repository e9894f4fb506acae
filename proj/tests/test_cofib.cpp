#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pathhom/cofib.hpp"
#include "pathhom/digraph.hpp"

using namespace pathhom;

namespace {

int idx(const DiGraph& g, const std::string& l) { return *g.index_of(l); }

/* Independent uniqueness oracle: per reaching vertex, every subgraph member
   realizing the height and satisfying the metric identity is counted; the
   decomposition must name the only one. */
void check_projection_unique(const VertexSubset& a) {
  auto verdict = check_cofibration(a);
  REQUIRE(verdict.is_cofibration);
  const auto& pd = *verdict.decomposition;
  const DiGraph& x = a.parent();
  std::vector<std::vector<int>> dist;
  for (std::size_t v = 0; v < x.num_vertices(); ++v)
    dist.push_back(bfs_distances(x, static_cast<int>(v)));
  for (int v : pd.hts.reaching) {
    if (a.contains(v)) continue;
    int count = 0;
    int found = -1;
    for (int m : a.members()) {
      if (dist[v][m] != *pd.hts.h[v]) continue;
      bool metric = true;
      for (int b : a.members()) {
        if (dist[v][b] < 0) continue;
        metric = metric && dist[m][b] >= 0 &&
                 dist[v][b] == *pd.hts.h[v] + dist[m][b];
      }
      if (metric) {
        ++count;
        found = m;
      }
    }
    CHECK(count == 1);
    CHECK(found == *pd.pi[v]);
  }
}

}  // namespace

TEST_CASE("zigzag endpoints form a cofibration with endpoint projection") {
  auto j = gen_J();
  VertexSubset a(j, {"-2", "2"});
  auto v = check_cofibration(a);
  REQUIRE(v.is_cofibration);
  const auto& pd = *v.decomposition;
  CHECK(*pd.pi[idx(j, "-1")] == idx(j, "-2"));
  CHECK(*pd.pi[idx(j, "1")] == idx(j, "2"));
  CHECK(*pd.hts.h[idx(j, "-1")] == 1);
  CHECK(*pd.hts.h[idx(j, "1")] == 1);
  CHECK_FALSE(pd.hts.h[idx(j, "0")].has_value());
  check_projection_unique(a);
}

TEST_CASE("mixed cycle far arc fails the metric condition") {
  auto g = gen_mn_cycle(3, 1);
  auto v = check_cofibration(VertexSubset(g, {"2", "3"}));
  REQUIRE_FALSE(v.is_cofibration);
  CHECK(v.failure == CofibFailure::metric_violation);
  REQUIRE(v.metric_witness.has_value());
  CHECK(v.metric_witness->first == idx(g, "0"));
  CHECK(v.metric_witness->second == idx(g, "2"));
}

TEST_CASE("mixed cycle entry arc fails with an edge out") {
  auto g = gen_mn_cycle(3, 1);
  auto v = check_cofibration(VertexSubset(g, {"0", "1"}));
  REQUIRE_FALSE(v.is_cofibration);
  CHECK(v.failure == CofibFailure::edge_out);
  REQUIRE(v.edge_witness.has_value());
  CHECK(v.edge_witness->first == idx(g, "0"));
  CHECK(v.edge_witness->second == idx(g, "3"));
}

TEST_CASE("full and empty subgraphs are cofibrations") {
  auto g = gen_mn_cycle(2, 2);
  auto full = check_cofibration(VertexSubset(g, g.labels()));
  CHECK(full.is_cofibration);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    CHECK(*full.decomposition->hts.h[v] == 0);
    CHECK(*full.decomposition->pi[v] == static_cast<int>(v));
  }
  auto empty = check_cofibration(VertexSubset(g, {}));
  CHECK(empty.is_cofibration);
  CHECK(empty.decomposition->hts.reaching.empty());
}

TEST_CASE("two equidistant targets fail uniqueness") {
  DiGraph g({"s", "a1", "a2"}, {{"s", "a1"}, {"s", "a2"}});
  auto v = check_cofibration(VertexSubset(g, {"a1", "a2"}));
  REQUIRE_FALSE(v.is_cofibration);
  CHECK(v.failure == CofibFailure::no_unique_closest);
  REQUIRE(v.vertex_witness.has_value());
  CHECK(*v.vertex_witness == idx(g, "s"));
}

TEST_CASE("projection targets are the unique admissible choices") {
  check_projection_unique(VertexSubset(gen_line(3), {"3"}));
  check_projection_unique(VertexSubset(gen_line(3), {"2", "3"}));
  check_projection_unique(VertexSubset(gen_mn_cycle(2, 2), {"2"}));
  DiGraph square({"0", "1", "2", "3"},
                 {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}});
  check_projection_unique(VertexSubset(square, {"3"}));
  check_projection_unique(VertexSubset(square, {"1", "3"}));
}

TEST_CASE("subgraph checks reject non-induced input unless coerced") {
  DiGraph x({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  DiGraph bare({"b", "c"}, {});
  auto strict = check_cofibration_subgraph(x, bare);
  CHECK_FALSE(strict.is_cofibration);
  CHECK(strict.failure == CofibFailure::not_induced);
  auto coerced = check_cofibration_subgraph(x, bare, true);
  CHECK(coerced.is_cofibration);
  DiGraph unknown({"b", "z"}, {});
  CHECK_THROWS_AS(check_cofibration_subgraph(x, unknown),
                  std::invalid_argument);
}

TEST_CASE("composite of nested cofibrations is verified directly") {
  auto x = gen_line(2);
  VertexSubset b(x, {"1", "2"});
  REQUIRE(check_cofibration(b).is_cofibration);
  auto v = compose_cofibrations(b, {"2"});
  REQUIRE(v.is_cofibration);
  CHECK(*v.decomposition->hts.h[idx(x, "0")] == 2);
  CHECK(*v.decomposition->pi[idx(x, "0")] == idx(x, "2"));
  CHECK_THROWS_AS(compose_cofibrations(b, {"0"}), std::invalid_argument);
}

TEST_CASE("retract diagrams re-verify the inner inclusion") {
  auto xi = gen_line(1);
  auto xo = box_product(gen_line(1), gen_line(1));
  VertexSubset inner(xi, {"1"});
  VertexSubset outer(xo, {"(1,0)", "(1,1)"});
  GraphMap section(xi, xo, {{"0", "(0,0)"}, {"1", "(1,0)"}});
  GraphMap retraction(xo, xi,
                      {{"(0,0)", "0"},
                       {"(0,1)", "0"},
                       {"(1,0)", "1"},
                       {"(1,1)", "1"}});
  auto v = verify_retract({inner, outer, section, retraction});
  CHECK(v.is_cofibration);

  auto ident = verify_retract(
      {inner, inner, GraphMap::identity(xi), GraphMap::identity(xi)});
  CHECK(ident.is_cofibration);
}

TEST_CASE("malformed retract diagrams are rejected") {
  auto xi = gen_line(1);
  auto xo = box_product(gen_line(1), gen_line(1));
  VertexSubset inner(xi, {"1"});
  VertexSubset outer(xo, {"(1,0)", "(1,1)"});
  GraphMap retraction(xo, xi,
                      {{"(0,0)", "0"},
                       {"(0,1)", "0"},
                       {"(1,0)", "1"},
                       {"(1,1)", "1"}});
  auto constant = GraphMap::constant(xi, xo, "(0,0)");
  CHECK_THROWS_AS(verify_retract({inner, outer, constant, retraction}),
                  std::invalid_argument);
  GraphMap bad_endpoints = GraphMap::identity(xi);
  CHECK_THROWS_AS(verify_retract({inner, outer, bad_endpoints, retraction}),
                  std::invalid_argument);
}

TEST_CASE("codiagonal factorization of a segment") {
  auto x = gen_line(1);
  auto f = codiagonal_factorization(x);
  CHECK(f.xj.num_vertices() == 10);
  CHECK(f.boundary.members().size() == 4);
  REQUIRE(f.cofib_verdict.is_cofibration);

  auto left = compose(f.projection, f.include_left);
  auto right = compose(f.projection, f.include_right);
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    CHECK(left.apply(static_cast<int>(v)) == static_cast<int>(v));
    CHECK(right.apply(static_cast<int>(v)) == static_cast<int>(v));
  }
  CHECK(is_isomorphic(f.boundary.induced(), disjoint_union(x, x)));

  const auto& pd = *f.cofib_verdict.decomposition;
  CHECK(*pd.pi[idx(f.xj, "(0,-1)")] == idx(f.xj, "(0,-2)"));
  CHECK(*pd.pi[idx(f.xj, "(1,1)")] == idx(f.xj, "(1,2)"));
  CHECK_FALSE(pd.hts.h[idx(f.xj, "(0,0)")].has_value());
}

TEST_CASE("codiagonal factorization of a cycle") {
  auto f = codiagonal_factorization(gen_cycle(3));
  CHECK(f.cofib_verdict.is_cofibration);
  CHECK(is_isomorphic(f.boundary.induced(),
                      disjoint_union(gen_cycle(3), gen_cycle(3))));
}

TEST_CASE("failure kinds have stable names") {
  CHECK(to_string(CofibFailure::none) == "none");
  CHECK(to_string(CofibFailure::not_induced) == "not-induced");
  CHECK(to_string(CofibFailure::edge_out) == "edge-out");
  CHECK(to_string(CofibFailure::no_unique_closest) == "no-unique-closest");
  CHECK(to_string(CofibFailure::metric_violation) == "metric-violation");
}
