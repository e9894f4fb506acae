#include "pathhom/harness.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pathhom/excision.hpp"
#include "pathhom/field.hpp"
#include "pathhom/omega.hpp"

namespace pathhom {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::below(int n) {
  if (n < 1) throw std::invalid_argument("Rng::below: n must be positive");
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() / bound * bound;
  std::uint64_t r;
  do {
    r = bits();
  } while (r >= limit);
  return static_cast<int>(r % bound);
}

bool Rng::chance(double p) {
  return (bits() >> 11) * 0x1.0p-53 < p;
}

namespace {

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

DiGraph random_digraph_rng(Rng& rng, int n, double density) {
  if (n < 1) throw std::invalid_argument("random_digraph: budget must be >= 1");
  auto labels = index_labels(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.chance(density)) edges.emplace_back(labels[u], labels[v]);
  return DiGraph(labels, edges);
}

/* Adjoin m fresh vertices "t0".."t{m-1}", each with one out-edge toward a
   uniformly chosen earlier vertex; (result, base) is then a cofibration. */
DiGraph attach_layer(Rng& rng, const DiGraph& base, int m) {
  std::vector<std::string> labels = base.labels();
  auto edges = base.edge_labels();
  for (int i = 0; i < m; ++i) {
    std::string v = "t" + std::to_string(i);
    int target = rng.below(static_cast<int>(labels.size()));
    edges.emplace_back(v, labels[target]);
    labels.push_back(std::move(v));
  }
  return DiGraph(labels, edges);
}

/* Random attaching map out of A: partition the vertices of A into classes
   "q<i>", adjoin fresh vertices "n<j>", add the image edges forced by the
   graph-map condition plus random extras. At most 4 classes and 2 extras,
   so targets never exceed 6 vertices. */
std::pair<DiGraph, std::map<std::string, std::string>> random_attaching(
    Rng& rng, const DiGraph& a_ind) {
  const int na = static_cast<int>(a_ind.num_vertices());
  std::vector<int> assign(static_cast<std::size_t>(na), 0);
  std::vector<int> rank;
  int used = 0;
  if (na > 0) {
    const int classes = 1 + rng.below(std::min(na, 4));
    rank.assign(static_cast<std::size_t>(classes), -1);
    for (int i = 0; i < na; ++i) assign[i] = rng.below(classes);
    for (int i = 0; i < na; ++i)
      if (rank[assign[i]] < 0) rank[assign[i]] = used++;
  }
  std::vector<std::string> labels;
  for (int r = 0; r < used; ++r) labels.push_back("q" + std::to_string(r));
  const int extras = rng.below(3) + (na == 0 ? 1 : 0);
  for (int j = 0; j < extras; ++j) labels.push_back("n" + std::to_string(j));

  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : a_ind.edges()) {
    int cu = rank[assign[u]], cv = rank[assign[v]];
    if (cu != cv)
      edges.emplace("q" + std::to_string(cu), "q" + std::to_string(cv));
  }
  const int nb = static_cast<int>(labels.size());
  for (int s = 0; s < nb; ++s)
    for (int t = 0; t < nb; ++t)
      if (s != t && rng.chance(0.25)) edges.emplace(labels[s], labels[t]);

  DiGraph b(labels, std::vector<std::pair<std::string, std::string>>(
                        edges.begin(), edges.end()));
  std::map<std::string, std::string> fmap;
  for (int i = 0; i < na; ++i)
    fmap[a_ind.label(i)] = "q" + std::to_string(rank[assign[i]]);
  return {b, fmap};
}

}  // namespace

DiGraph random_digraph(const InstanceSpec& spec) {
  Rng rng(spec.seed);
  return random_digraph_rng(rng, spec.vertex_budget, spec.edge_density);
}

DiGraph random_oriented_tree(const InstanceSpec& spec) {
  if (spec.vertex_budget < 1)
    throw std::invalid_argument("random_oriented_tree: budget must be >= 1");
  Rng rng(spec.seed);
  auto labels = index_labels(spec.vertex_budget);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 1; v < spec.vertex_budget; ++v) {
    int parent = rng.below(v);
    if (rng.chance(0.5))
      edges.emplace_back(labels[v], labels[parent]);
    else
      edges.emplace_back(labels[parent], labels[v]);
  }
  return DiGraph(labels, edges);
}

CofibInstance random_layered_cofibration(const InstanceSpec& spec) {
  if (spec.vertex_budget < 1)
    throw std::invalid_argument(
        "random_layered_cofibration: budget must be >= 1");
  Rng rng(derive_seed(spec.seed, 0xFA11));
  const int base_n = 1 + rng.below(spec.vertex_budget);
  DiGraph base = random_digraph_rng(rng, base_n, spec.edge_density);
  DiGraph x = attach_layer(rng, base, spec.vertex_budget - base_n);
  CofibInstance inst;
  inst.a_members = base.labels();
  inst.verdict = check_cofibration(VertexSubset(x, inst.a_members));
  inst.x = std::move(x);
  if (!inst.verdict.is_cofibration)
    throw std::logic_error(
        "layered construction failed to produce a cofibration: " +
        to_string(inst.verdict.failure));
  return inst;
}

CofibInstance random_cofibration(const InstanceSpec& spec) {
  if (spec.vertex_budget < 1)
    throw std::invalid_argument("random_cofibration: budget must be >= 1");
  const int retries = 24;
  for (int t = 0; t < retries; ++t) {
    Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(t)));
    DiGraph g = random_digraph_rng(rng, spec.vertex_budget, spec.edge_density);
    const int n = static_cast<int>(g.num_vertices());
    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
      if (rng.chance(0.35)) {
        in_a[v] = 1;
        queue.push_back(v);
      }
    // forward closure: successor-closed sets have no edges out
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : g.out(queue[head]))
        if (!in_a[w]) {
          in_a[w] = 1;
          queue.push_back(w);
        }
    std::vector<std::string> members;
    for (int v = 0; v < n; ++v)
      if (in_a[v]) members.push_back(g.label(v));
    auto verdict = check_cofibration(VertexSubset(g, members));
    if (verdict.is_cofibration)
      return CofibInstance{std::move(g), std::move(members),
                           std::move(verdict), false};
  }
  CofibInstance inst = random_layered_cofibration(spec);
  inst.fallback = true;
  return inst;
}

PushoutSquare random_pushout_square(const InstanceSpec& spec) {
  CofibInstance ci = random_cofibration(spec);
  VertexSubset a(ci.x, ci.a_members);
  Rng rng(derive_seed(spec.seed, 0xA77));
  auto [b, fmap] = random_attaching(rng, a.induced());
  GraphMap f(a.induced(), b, fmap);
  return pushout(a, f);
}

ProperInstance random_proper_square(const InstanceSpec& spec) {
  Rng rng(derive_seed(spec.seed, 0x9209));
  const int flavor = rng.below(3);
  if (flavor == 0) {
    CofibInstance ci = random_cofibration(spec);
    VertexSubset a(ci.x, ci.a_members);
    GraphMap f = GraphMap::identity(a.induced());
    return ProperInstance{pushout(a, f), "identity"};
  }
  if (flavor == 1) {
    const int base_n =
        1 + rng.below(std::max(1, spec.vertex_budget - 1));
    InstanceSpec tree_spec = spec;
    tree_spec.seed = derive_seed(spec.seed, 0x7133);
    tree_spec.vertex_budget = base_n;
    DiGraph tree = random_oriented_tree(tree_spec);
    DiGraph x = attach_layer(rng, tree, spec.vertex_budget - base_n);
    VertexSubset a(x, tree.labels());
    DiGraph point({"pt"}, {});
    GraphMap f = GraphMap::constant(a.induced(), point, "pt");
    return ProperInstance{pushout(a, f), "tree-collapse"};
  }
  const int bn = 1 + rng.below(3);
  DiGraph b = random_digraph_rng(rng, bn, spec.edge_density);
  DiGraph j = gen_J();
  DiGraph bj = box_product(b, j);
  DiGraph x = attach_layer(rng, bj, 1 + rng.below(3));
  VertexSubset a(x, bj.labels());
  std::map<std::string, std::string> fmap;
  for (const auto& bl : b.labels())
    for (const auto& jl : j.labels()) fmap["(" + bl + "," + jl + ")"] = bl;
  GraphMap f(a.induced(), b, fmap);
  return ProperInstance{pushout(a, f), "zigzag-projection"};
}

RetractDiagram random_retract(const InstanceSpec& spec) {
  CofibInstance ci = random_cofibration(spec);
  DiGraph i1 = gen_line(1);
  DiGraph outer_x = box_product(ci.x, i1);
  std::vector<std::string> outer_members;
  for (const auto& l : ci.a_members) {
    outer_members.push_back("(" + l + ",0)");
    outer_members.push_back("(" + l + ",1)");
  }
  std::map<std::string, std::string> sec, ret;
  for (const auto& l : ci.x.labels()) {
    sec[l] = "(" + l + ",0)";
    ret["(" + l + ",0)"] = l;
    ret["(" + l + ",1)"] = l;
  }
  VertexSubset inner(ci.x, ci.a_members);
  VertexSubset outer(outer_x, outer_members);
  GraphMap section(ci.x, outer_x, sec);
  GraphMap retraction(outer_x, ci.x, ret);
  return RetractDiagram{std::move(inner), std::move(outer),
                        std::move(section), std::move(retraction)};
}

namespace {

bool acts_as_identity(const GraphMap& m) {
  for (const auto& l : m.domain().labels())
    if (m.apply_label(l) != l) return false;
  return true;
}

template <typename K>
bool relative_homology_vanishes(const K& k, const VertexSubset& a,
                                int cutoff) {
  auto t = relative_homology(k, a, cutoff, false);
  for (const auto& r : t.rows)
    if (r.dim_h != 0) return false;
  return true;
}

InstanceSpec child_spec(const InstanceSpec& spec, std::uint64_t tag, int i) {
  InstanceSpec s = spec;
  s.seed = derive_seed(spec.seed,
                       tag * 0x10000ULL + static_cast<std::uint64_t>(i));
  return s;
}

}  // namespace

AxiomReport axiom_suite(const InstanceSpec& spec, int instances) {
  if (instances < 1)
    throw std::invalid_argument("axiom_suite: instances must be >= 1");
  RationalField q;
  const int cutoff = spec.max_degree;
  AxiomReport rep;
  rep.spec = spec;
  rep.instances = instances;

  auto finish = [&rep](AxiomCheck c) {
    c.ok = c.failures.empty() && c.passed == c.attempted;
    rep.checks.push_back(std::move(c));
  };
  auto record = [](AxiomCheck& c, bool pass, const std::string& what) {
    ++c.attempted;
    if (pass)
      ++c.passed;
    else
      c.failures.push_back(what);
  };

  {  // C1: identities and composites of cofibrations are cofibrations
    AxiomCheck c;
    c.name = "C1-identity-and-composites";
    for (int i = 0; i < instances; ++i) {
      InstanceSpec s = child_spec(spec, 1, i);
      CofibInstance ci = random_cofibration(s);
      bool id_ok =
          check_cofibration(VertexSubset(ci.x, ci.x.labels())).is_cofibration;
      // middle pair: successor-closed subset of A, rejection-sampled
      VertexSubset b_in_x(ci.x, ci.a_members);
      DiGraph b_ind = b_in_x.induced();
      Rng rng(derive_seed(s.seed, 0xC1));
      std::vector<std::string> inner_members;  // (B, empty) fallback
      for (int t = 0; t < 8; ++t) {
        const int nb = static_cast<int>(b_ind.num_vertices());
        std::vector<char> in_a(static_cast<std::size_t>(nb), 0);
        std::vector<int> queue;
        for (int v = 0; v < nb; ++v)
          if (rng.chance(0.4)) {
            in_a[v] = 1;
            queue.push_back(v);
          }
        for (std::size_t head = 0; head < queue.size(); ++head)
          for (int w : b_ind.out(queue[head]))
            if (!in_a[w]) {
              in_a[w] = 1;
              queue.push_back(w);
            }
        std::vector<std::string> cand;
        for (int v = 0; v < nb; ++v)
          if (in_a[v]) cand.push_back(b_ind.label(v));
        if (check_cofibration(VertexSubset(b_ind, cand)).is_cofibration) {
          inner_members = std::move(cand);
          break;
        }
      }
      bool comp_ok =
          compose_cofibrations(b_in_x, inner_members).is_cofibration;
      record(c, id_ok && comp_ok,
             "seed=" + std::to_string(s.seed) + " identity=" +
                 std::to_string(id_ok) + " composite=" +
                 std::to_string(comp_ok));
    }
    finish(std::move(c));
  }

  {  // C3: the empty subgraph includes as a cofibration
    AxiomCheck c;
    c.name = "C3-initial";
    for (int i = 0; i < instances; ++i) {
      InstanceSpec s = child_spec(spec, 3, i);
      DiGraph g = random_digraph(s);
      bool ok = check_cofibration(VertexSubset(g, {})).is_cofibration;
      record(c, ok, "seed=" + std::to_string(s.seed));
    }
    finish(std::move(c));
  }

  {  // C4: pushouts of cofibrations are cofibrations
    AxiomCheck c;
    c.name = "C4-pushout-stability";
    for (int i = 0; i < instances; ++i) {
      InstanceSpec s = child_spec(spec, 4, i);
      PushoutSquare sq = random_pushout_square(s);
      std::vector<std::string> b_in_y;
      for (const auto& bl : sq.attaching.codomain().labels())
        b_in_y.push_back(sq.corner_b.apply_label(bl));
      bool ok =
          check_cofibration(VertexSubset(sq.result, b_in_y)).is_cofibration;
      record(c, ok, "seed=" + std::to_string(s.seed));
    }
    finish(std::move(c));
  }

  {  // C4: pushouts of acyclic cofibrations are acyclic
    AxiomCheck c;
    c.name = "C4-acyclic-stability";
    c.note = "acyclic = relative homology vanishes up to degree " +
             std::to_string(cutoff);
    for (int i = 0; i < instances; ++i) {
      InstanceSpec s = child_spec(spec, 5, i);
      CofibInstance ci = random_layered_cofibration(s);
      VertexSubset a(ci.x, ci.a_members);
      bool src_acyclic = relative_homology_vanishes(q, a, cutoff);
      Rng rng(derive_seed(s.seed, 0xACE));
      auto [b, fmap] = random_attaching(rng, a.induced());
      GraphMap f(a.induced(), b, fmap);
      PushoutSquare sq = pushout(a, f);
      std::vector<std::string> b_in_y;
      for (const auto& bl : b.labels())
        b_in_y.push_back(sq.corner_b.apply_label(bl));
      VertexSubset target(sq.result, b_in_y);
      bool cof_ok = check_cofibration(target).is_cofibration;
      bool tgt_acyclic =
          cof_ok && relative_homology_vanishes(q, target, cutoff);
      record(c, src_acyclic && cof_ok && tgt_acyclic,
             "seed=" + std::to_string(s.seed) + " src_acyclic=" +
                 std::to_string(src_acyclic) + " cofib=" +
                 std::to_string(cof_ok) + " tgt_acyclic=" +
                 std::to_string(tgt_acyclic));
    }
    finish(std::move(c));
  }

  {  // C5: codiagonal factorization through the zigzag cylinder
    AxiomCheck c;
    c.name = "C5-codiagonal";
    std::vector<std::pair<std::string, DiGraph>> cases = {
        {"i0", gen_line(0)},          {"i1", gen_line(1)},
        {"i2", gen_line(2)},          {"c3", gen_cycle(3)},
        {"c_2_2", gen_mn_cycle(2, 2)}, {"alt_c_4", gen_alt_cycle(4)}};
    for (int i = 0; i < instances; ++i) {
      InstanceSpec s = child_spec(spec, 6, i);
      cases.emplace_back("seed=" + std::to_string(s.seed), random_digraph(s));
    }
    for (const auto& [name, g] : cases) {
      CodiagonalFactorization cf = codiagonal_factorization(g);
      bool cofib_ok = cf.cofib_verdict.is_cofibration;
      bool left_ok = acts_as_identity(compose(cf.projection, cf.include_left));
      bool right_ok =
          acts_as_identity(compose(cf.projection, cf.include_right));
      bool boundary_ok =
          is_isomorphic(cf.boundary.induced(), disjoint_union(g, g));
      record(c, cofib_ok && left_ok && right_ok && boundary_ok, name);
    }
    finish(std::move(c));
  }

  {  // left properness: pushing a homology iso along a cofibration
    AxiomCheck c;
    c.name = "left-properness";
    c.note = "homology isomorphisms checked up to degree " +
             std::to_string(cutoff);
    for (int i = 0; i < instances; ++i) {
      InstanceSpec s = child_spec(spec, 7, i);
      ProperInstance pi = random_proper_square(s);
      bool base_ok = check_cofibration(pi.square.inclusion).is_cofibration;
      bool att_iso = is_homology_iso(q, pi.square.attaching, cutoff);
      bool corner_iso = is_homology_iso(q, pi.square.corner_x, cutoff);
      record(c, base_ok && att_iso && corner_iso,
             "seed=" + std::to_string(s.seed) + " flavor=" + pi.flavor +
                 " base=" + std::to_string(base_ok) + " attaching_iso=" +
                 std::to_string(att_iso) + " corner_iso=" +
                 std::to_string(corner_iso));
    }
    finish(std::move(c));
  }

  {  // retract closure: retracts of cofibrations are cofibrations
    AxiomCheck c;
    c.name = "retract-closure";
    for (int i = 0; i < instances; ++i) {
      InstanceSpec s = child_spec(spec, 8, i);
      RetractDiagram rd = random_retract(s);
      bool outer_ok = check_cofibration(rd.outer).is_cofibration;
      bool inner_ok = verify_retract(rd).is_cofibration;
      record(c, outer_ok && inner_ok,
             "seed=" + std::to_string(s.seed) + " outer=" +
                 std::to_string(outer_ok) + " inner=" +
                 std::to_string(inner_ok));
    }
    finish(std::move(c));
  }

  {  // box closure: A box Z inside X box Z, with the product projection
    AxiomCheck c;
    c.name = "box-closure";
    for (int i = 0; i < instances; ++i) {
      InstanceSpec s = child_spec(spec, 9, i);
      CofibInstance ci = random_cofibration(s);
      DiGraph z;
      switch (i % 3) {
        case 0: z = gen_line(1); break;
        case 1: z = gen_cycle(3); break;
        default: {
          InstanceSpec zs = child_spec(spec, 10, i);
          zs.vertex_budget = 2 + Rng(zs.seed).below(2);
          z = random_digraph(zs);
        }
      }
      DiGraph xz = box_product(ci.x, z);
      std::vector<std::string> members;
      for (const auto& al : ci.a_members)
        for (const auto& zl : z.labels())
          members.push_back("(" + al + "," + zl + ")");
      auto verdict = check_cofibration(VertexSubset(xz, members));
      bool product_pi = verdict.is_cofibration;
      if (verdict.is_cofibration && verdict.decomposition &&
          ci.verdict.decomposition) {
        // projection acts on the first coordinate only
        const auto& inner_pd = *ci.verdict.decomposition;
        const auto& box_pd = *verdict.decomposition;
        for (int xv = 0;
             product_pi && xv < static_cast<int>(ci.x.num_vertices()); ++xv) {
          if (!inner_pd.pi[xv]) continue;
          std::string expect = ci.x.label(*inner_pd.pi[xv]);
          for (const auto& zl : z.labels()) {
            auto idx = xz.index_of("(" + ci.x.label(xv) + "," + zl + ")");
            if (!idx || !box_pd.pi[*idx] ||
                xz.label(*box_pd.pi[*idx]) != "(" + expect + "," + zl + ")") {
              product_pi = false;
              break;
            }
          }
        }
      }
      record(c, verdict.is_cofibration && product_pi,
             "seed=" + std::to_string(s.seed) + " cofib=" +
                 std::to_string(verdict.is_cofibration) + " product_pi=" +
                 std::to_string(product_pi));
    }
    finish(std::move(c));
  }

  {  // negative controls: broken inclusions must be rejected
    AxiomCheck c;
    c.name = "negative-controls";
    for (int i = 0; i < instances; ++i) {
      InstanceSpec s = child_spec(spec, 11, i);
      Rng rng(s.seed);
      const int base_n = std::max(1, spec.vertex_budget - 1);
      DiGraph base = random_digraph_rng(rng, base_n, spec.edge_density);
      DiGraph x = attach_layer(rng, base, 1);
      auto edges = x.edge_labels();
      edges.emplace_back(base.label(rng.below(base_n)), "t0");
      DiGraph broken(x.labels(), edges);
      auto verdict = check_cofibration(VertexSubset(broken, base.labels()));
      bool flagged = !verdict.is_cofibration &&
                     verdict.failure == CofibFailure::edge_out;
      record(c, flagged, "seed=" + std::to_string(s.seed) +
                             " failure=" + to_string(verdict.failure));
    }
    // both inclusions of a contracted edge of C_{3,1} fail, each for its
    // own reason, and the excision verifier refuses the squares up front
    DiGraph c31 = gen_mn_cycle(3, 1);
    DiGraph point({"pt"}, {});
    auto v_metric = check_cofibration(VertexSubset(c31, {"2", "3"}));
    record(c,
           !v_metric.is_cofibration &&
               v_metric.failure == CofibFailure::metric_violation,
           "c_3_1 {2,3}: " + to_string(v_metric.failure));
    auto v_edge = check_cofibration(VertexSubset(c31, {"0", "1"}));
    record(c,
           !v_edge.is_cofibration && v_edge.failure == CofibFailure::edge_out,
           "c_3_1 {0,1}: " + to_string(v_edge.failure));
    for (const auto& members :
         std::vector<std::vector<std::string>>{{"2", "3"}, {"0", "1"}}) {
      VertexSubset a(c31, members);
      GraphMap f = GraphMap::constant(a.induced(), point, "pt");
      PushoutSquare sq = pushout(a, f);
      bool rejected = false;
      try {
        verify_excision(q, sq, cutoff);
      } catch (const std::invalid_argument&) {
        rejected = true;
      }
      record(c, rejected,
             "c_3_1 contraction {" + members[0] + "," + members[1] +
                 "}: excision verifier accepted a non-cofibration");
    }
    finish(std::move(c));
  }

  {  // C2: weak equivalences and 2-out-of-6
    AxiomCheck c;
    c.name = "C2-two-out-of-six";
    c.note =
        "not sampled: weak equivalences are homology isomorphisms here, so "
        "2-out-of-6 reduces to functoriality of induced maps";
    c.ok = true;
    rep.checks.push_back(std::move(c));
  }

  {  // C6, C7: coproducts and transfinite composition
    AxiomCheck c;
    c.name = "C6-C7-infinite-colimits";
    c.note =
        "not sampled: arbitrary coproducts and transfinite composition "
        "exceed finite instances; finite coproducts covered by pushouts "
        "along the empty subgraph";
    c.ok = true;
    rep.checks.push_back(std::move(c));
  }

  rep.ok = true;
  for (const auto& c : rep.checks) rep.ok = rep.ok && c.ok;
  return rep;
}

}  // namespace pathhom
