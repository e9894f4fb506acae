#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pathhom/field.hpp"
#include "pathhom/omega.hpp"

using namespace pathhom;

namespace {

const RationalField Q;

Chain<mpq_class> chain_of(std::vector<std::pair<RegularPath, long>> terms) {
  Chain<mpq_class> c;
  for (auto& [p, coeff] : terms) chain_add(Q, c, p, Q.from_int(coeff));
  return c;
}

std::vector<std::size_t> h_dims(const HomologyTable& t) {
  std::vector<std::size_t> out;
  for (const auto& r : t.rows) out.push_back(r.dim_h);
  return out;
}

std::vector<std::size_t> space_dims(const HomologyTable& t) {
  std::vector<std::size_t> out;
  for (const auto& r : t.rows) out.push_back(r.dim_space);
  return out;
}

DiGraph fixture_square() {
  return DiGraph({"0", "1", "2", "3"},
                 {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}});
}

}  // namespace

TEST_CASE("allowed paths enumerate directed walks in order") {
  auto line = gen_line(2);
  CHECK(allowed_paths(line, 0) ==
        std::vector<RegularPath>{{0}, {1}, {2}});
  CHECK(allowed_paths(line, 1) == std::vector<RegularPath>{{0, 1}, {1, 2}});
  CHECK(allowed_paths(line, 2) == std::vector<RegularPath>{{0, 1, 2}});
  CHECK(allowed_paths(line, 3).empty());
  auto c3 = gen_cycle(3);
  CHECK(allowed_paths(c3, 2) ==
        std::vector<RegularPath>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(is_allowed(line, {0, 1, 2}));
  CHECK_FALSE(is_allowed(line, {0, 2}));
  CHECK_FALSE(is_allowed(line, {}));
  CHECK(path_label(line, {0, 1, 2}) == "0.1.2");
  CHECK_THROWS_AS(allowed_paths(line, -1), std::invalid_argument);
}

TEST_CASE("the regular boundary drops returning faces") {
  CHECK(regular_boundary(Q, chain_of({{{0, 1, 2}, 1}})) ==
        chain_of({{{1, 2}, 1}, {{0, 2}, -1}, {{0, 1}, 1}}));
  CHECK(regular_boundary(Q, chain_of({{{0, 1, 0}, 1}})) ==
        chain_of({{{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(regular_boundary(Q, chain_of({{{0, 1, 3}, 1}, {{0, 2, 3}, -1}})) ==
        chain_of({{{1, 3}, 1}, {{0, 1}, 1}, {{2, 3}, -1}, {{0, 2}, -1}}));
  auto dd = regular_boundary(
      Q, regular_boundary(Q, chain_of({{{0, 1, 2, 3}, 1}, {{0, 1, 2, 1}, 2}})));
  CHECK(dd.empty());
  CHECK_THROWS_AS(regular_boundary(Q, chain_of({{{0}, 1}})),
                  std::invalid_argument);
}

TEST_CASE("omega bases of the named fixtures") {
  CHECK(omega_basis(Q, gen_cycle(3), 2).dim() == 0);

  auto c22 = omega_basis(Q, gen_mn_cycle(2, 2), 2);
  REQUIRE(c22.dim() == 1);
  REQUIRE(c22.paths == std::vector<RegularPath>{{0, 1, 2}, {0, 3, 2}});
  CHECK(Q.eq(c22.vectors[0][0], Q.neg(c22.vectors[0][1])));
  CHECK_FALSE(Q.is_zero(c22.vectors[0][0]));

  auto sq = omega_basis(Q, fixture_square(), 2);
  REQUIRE(sq.dim() == 1);
  REQUIRE(sq.paths == std::vector<RegularPath>{{0, 1, 3}, {0, 2, 3}});
  CHECK(Q.eq(sq.vectors[0][0], Q.neg(sq.vectors[0][1])));

  CHECK(omega_basis(Q, gen_punctured_cube(), 1).dim() == 48);
}

TEST_CASE("omega dimensions match the exhaustive oracle") {
  for (const auto& g : oracle::all_digraphs_up_to(3)) {
    auto expect = oracle::brute_force_omega_dims(g, 3);
    for (int n = 0; n <= 3; ++n)
      CHECK(omega_basis(Q, g, n).dim() == static_cast<std::size_t>(expect[n]));
  }
  for (const auto& g : {gen_alt_cycle(4), gen_alt_cycle(6), gen_mn_cycle(3, 2),
                        gen_suspension_alt4()}) {
    auto expect = oracle::brute_force_omega_dims(g, 3);
    for (int n = 0; n <= 3; ++n)
      CHECK(omega_basis(Q, g, n).dim() == static_cast<std::size_t>(expect[n]));
  }
}

TEST_CASE("homology of the line and the triangle") {
  auto line = homology(Q, gen_line(2), 4);
  CHECK(space_dims(line) == std::vector<std::size_t>{3, 2, 0, 0});
  CHECK(h_dims(line) == std::vector<std::size_t>{1, 0, 0, 0});

  auto tri = homology(Q, gen_cycle(3), 4);
  CHECK(space_dims(tri) == std::vector<std::size_t>{3, 3, 0, 0});
  CHECK(h_dims(tri) == std::vector<std::size_t>{1, 1, 0, 0});
  REQUIRE(tri.generators[1].size() == 1);
  const auto& gen = tri.generators[1][0];
  REQUIRE(gen.size() == 3);
  CHECK(gen[0].second == "0.1");
  CHECK(gen[1].second == "1.2");
  CHECK(gen[2].second == "2.0");
  CHECK(gen[0].first == gen[1].first);
  CHECK(gen[1].first == gen[2].first);
}

TEST_CASE("homology of the suspended alternating cycle") {
  auto g = gen_suspension_alt4();
  auto t = homology(Q, g, 4);
  CHECK(space_dims(t) == std::vector<std::size_t>{6, 12, 8, 0});
  CHECK(t.rows[2].rank_d == 7);
  CHECK(h_dims(t) == std::vector<std::size_t>{1, 0, 1, 0});
  REQUIRE(t.generators[2].size() == 1);
  CHECK(t.generators[2][0].size() == 8);

  /* The degree-2 cycle space is spanned by the alternating sum of the eight
     apex triangles; freeze it up to scale. */
  auto gc = build_omega_complex(Q, g, 3);
  auto ker = nullspace_basis(Q, gc.cc.d[2]);
  REQUIRE(ker.size() == 1);
  std::map<std::string, mpq_class> got;
  for (std::size_t i = 0; i < gc.basis[2].dim(); ++i)
    for (const auto& [p, coeff] : basis_chain(Q, gc.basis[2], i))
      got[path_label(g, p)] += ker[0][i] * coeff;
  std::map<std::string, long> expect = {{"a.0.1", 1},  {"a.2.1", -1},
                                        {"a.2.3", 1},  {"a.0.3", -1},
                                        {"b.0.1", -1}, {"b.2.1", 1},
                                        {"b.2.3", -1}, {"b.0.3", 1}};
  mpq_class scale = got.at("a.0.1");
  REQUIRE(sgn(scale) != 0);
  for (const auto& [label, units] : expect)
    CHECK(got.at(label) == mpq_class(units) * scale);
}

TEST_CASE("homology of the punctured cube") {
  auto t = homology(Q, gen_punctured_cube(), 5, false);
  CHECK(space_dims(t) == std::vector<std::size_t>{26, 48, 24, 0, 0});
  CHECK(t.rows[1].rank_d == 25);
  CHECK(t.rows[2].rank_d == 23);
  CHECK(h_dims(t) == std::vector<std::size_t>{1, 0, 1, 0, 0});
}

TEST_CASE("oriented trees have trivial higher homology") {
  DiGraph tree({"0", "1", "2", "3", "4", "5"},
               {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"1", "4"}, {"4", "5"}});
  CHECK(h_dims(homology(Q, tree, 4)) == std::vector<std::size_t>{1, 0, 0, 0});
  DiGraph star({"c", "l0", "l1", "l2"},
               {{"c", "l0"}, {"c", "l1"}, {"c", "l2"}});
  CHECK(h_dims(homology(Q, star, 3)) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("degree zero homology counts weak components") {
  for (const auto& g : oracle::all_digraphs_up_to(3)) {
    auto t = homology(Q, g, 1, false);
    CHECK(t.rows[0].dim_h ==
          static_cast<std::size_t>(oracle::count_components(g)));
  }
  CHECK(homology(Q, disjoint_union(gen_cycle(3), gen_line(1)), 1, false)
            .rows[0]
            .dim_h == 2);
}

TEST_CASE("boundary operators compose to zero") {
  for (const auto& g : {gen_cycle(3), gen_suspension_alt4(), gen_alt_cycle(6),
                        gen_mn_cycle(3, 2)})
    CHECK(complex_squares_to_zero(Q, build_omega_complex(Q, g, 4).cc));
}

TEST_CASE("labeled boundary matrix of the mixed square") {
  auto lm = omega_boundary_matrix(Q, gen_mn_cycle(2, 2), 2);
  REQUIRE(lm.mat.rows == 4);
  REQUIRE(lm.mat.cols == 1);
  CHECK(lm.row_labels ==
        std::vector<std::string>{"w1_0", "w1_1", "w1_2", "w1_3"});
  CHECK(lm.col_labels == std::vector<std::string>{"w2_0"});
  /* Columns are d of the unique degree-2 basis vector s(012 - 032); rows
     follow the degree-1 paths 01, 03, 12, 32. */
  mpq_class s = lm.mat.at(0, 0);
  REQUIRE(sgn(s) != 0);
  CHECK(lm.mat.at(1, 0) == -s);
  CHECK(lm.mat.at(2, 0) == s);
  CHECK(lm.mat.at(3, 0) == -s);
  CHECK(rank(Q, lm.mat) == 1);
  CHECK_THROWS_AS(omega_boundary_matrix(Q, gen_cycle(3), 0),
                  std::invalid_argument);
}

TEST_CASE("relative chain spaces against full and empty subgraphs") {
  auto g = gen_cycle(3);
  VertexSubset none(g, {});
  VertexSubset all(g, g.labels());
  for (int n = 0; n <= 3; ++n) {
    CHECK(omega_hat_basis(Q, none, n).dim() == omega_basis(Q, g, n).dim());
    CHECK(omega_hat_basis(Q, all, n).dim() == 0);
  }
}

TEST_CASE("relative chain spaces of the square modulo its sink") {
  VertexSubset a(fixture_square(), {"3"});
  CHECK(omega_hat_basis(Q, a, 0).dim() == 3);
  CHECK(omega_hat_basis(Q, a, 1).dim() == 4);
  CHECK(omega_hat_basis(Q, a, 2).dim() == 1);
  CHECK(omega_hat_basis(Q, a, 3).dim() == 0);
}

TEST_CASE("height one chain spaces") {
  auto j = gen_J();
  VertexSubset dj(j, {"-2", "2"});
  auto h0 = omega_hat1_basis(Q, dj, 0);
  REQUIRE(h0.paths.size() == 2);
  CHECK(path_label(j, h0.paths[0]) == "-1");
  CHECK(path_label(j, h0.paths[1]) == "1");
  CHECK(omega_hat1_basis(Q, dj, 1).dim() == 0);

  VertexSubset sink(fixture_square(), {"3"});
  CHECK(omega_hat1_basis(Q, sink, 0).dim() == 2);
  auto h1 = omega_hat1_basis(Q, sink, 1);
  REQUIRE(h1.dim() == 1);
  REQUIRE(h1.paths == std::vector<RegularPath>{{0, 1}, {0, 2}});
  CHECK(Q.eq(h1.vectors[0][0], Q.neg(h1.vectors[0][1])));
  CHECK(complex_squares_to_zero(Q, build_hat1_complex(Q, sink, 3).cc));

  auto bad = gen_mn_cycle(3, 1);
  CHECK_THROWS_AS(omega_hat1_basis(Q, VertexSubset(bad, {"0", "1"}), 1),
                  std::invalid_argument);
}

TEST_CASE("chain spaces split along a no exit subgraph") {
  auto check_split = [&](const DiGraph& g,
                         const std::vector<std::string>& members) {
    VertexSubset a(g, members);
    auto ind = a.induced();
    for (int n = 0; n <= 3; ++n)
      CHECK(omega_basis(Q, g, n).dim() ==
            omega_basis(Q, ind, n).dim() + omega_hat_basis(Q, a, n).dim());
  };
  check_split(fixture_square(), {"3"});
  check_split(gen_J(), {"-2", "2"});
  check_split(gen_mn_cycle(2, 2), {"2"});
  check_split(gen_line(3), {"2", "3"});
}

TEST_CASE("relative homology fixtures") {
  VertexSubset tip(gen_line(1), {"1"});
  CHECK(h_dims(relative_homology(Q, tip, 2)) ==
        std::vector<std::size_t>{0, 0});

  auto g = gen_cycle(3);
  auto absolute = homology(Q, g, 3);
  auto rel_empty = relative_homology(Q, VertexSubset(g, {}), 3);
  CHECK(h_dims(rel_empty) == h_dims(absolute));

  auto rel_all = relative_homology(Q, VertexSubset(g, g.labels()), 3);
  CHECK(space_dims(rel_all) == std::vector<std::size_t>{0, 0, 0});

  VertexSubset sink(fixture_square(), {"3"});
  CHECK(h_dims(relative_homology(Q, sink, 3)) ==
        std::vector<std::size_t>{0, 0, 0});

  auto bad = gen_mn_cycle(3, 1);
  CHECK_THROWS_AS(relative_homology(Q, VertexSubset(bad, {"0", "1"}), 2),
                  std::invalid_argument);
}

TEST_CASE("prime field homology agrees on the fixtures") {
  PrimeField f(1000003);
  for (const auto& g :
       {gen_cycle(3), gen_suspension_alt4(), gen_mn_cycle(2, 2)}) {
    auto over_q = homology(Q, g, 3, false);
    auto over_p = homology(f, g, 3, false);
    CHECK(h_dims(over_q) == h_dims(over_p));
    CHECK(space_dims(over_q) == space_dims(over_p));
  }
}
