#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathhom/cofib.hpp"
#include "pathhom/omega.hpp"

namespace pathhom {

inline void require_projectable(const VertexSubset& a,
                                const ProjectingDecomposition& pd,
                                const RegularPath& p) {
  for (int v : p) {
    if (a.contains(v) || !pd.pi[v])
      throw std::invalid_argument("path leaves the projectable complement at " +
                                  a.parent().label(v));
  }
}

/* Prefix-projection operator: a degree-m path x0..xm maps to the sum over
   i >= j of (-1)^i x0..xi pi(xi)..pi(xm); tuples with equal consecutive
   vertices vanish. Defined on complement paths whose vertices reach A. */
template <class K>
Chain<typename K::Elem> L_op(const K& k, const VertexSubset& a,
                             const ProjectingDecomposition& pd, int j,
                             const Chain<typename K::Elem>& c) {
  if (j < 0) throw std::invalid_argument("negative start index");
  Chain<typename K::Elem> out;
  for (const auto& [p, coeff] : c) {
    require_projectable(a, pd, p);
    for (std::size_t i = static_cast<std::size_t>(j); i < p.size(); ++i) {
      RegularPath q;
      q.reserve(p.size() + 1);
      for (std::size_t t = 0; t <= i; ++t) q.push_back(p[t]);
      for (std::size_t t = i; t < p.size(); ++t) q.push_back(*pd.pi[p[t]]);
      bool regular = true;
      for (std::size_t t = 0; t + 1 < q.size(); ++t)
        regular = regular && q[t] != q[t + 1];
      if (!regular) continue;
      chain_add(k, out, q, i % 2 == 0 ? coeff : k.neg(coeff));
    }
  }
  return out;
}

/* Vertexwise projection onto A; defined wherever pi is. */
template <class K>
Chain<typename K::Elem> pi_linear(const K& k, const VertexSubset& a,
                                  const ProjectingDecomposition& pd,
                                  const Chain<typename K::Elem>& c) {
  Chain<typename K::Elem> out;
  for (const auto& [p, coeff] : c) {
    RegularPath q;
    q.reserve(p.size());
    for (int v : p) {
      if (!pd.pi[v])
        throw std::invalid_argument("projection undefined at " +
                                    a.parent().label(v));
      q.push_back(*pd.pi[v]);
    }
    bool regular = true;
    for (std::size_t t = 0; t + 1 < q.size(); ++t)
      regular = regular && q[t] != q[t + 1];
    if (regular) chain_add(k, out, q, coeff);
  }
  return out;
}

struct LBoundaryReport {
  bool ok = true;
  int checked = 0;
  std::optional<std::string> failure;  // offending path and identity kind
};

/* Checks, per complement path ending at height one, the boundary identity
   d L0(p) = -L0(dp) - p + pi(p) in the full chain complex and its truncated
   form trunc(d L0(p)) = -L0(dp) - p. Needs only a projecting decomposition,
   not the edge condition. */
template <class K>
LBoundaryReport verify_L_boundary(const K& k, const VertexSubset& a,
                                  int cutoff) {
  auto pr = projecting_decomposition(a);
  if (!pr.pd)
    throw std::invalid_argument("no projecting decomposition: " +
                                to_string(pr.failure));
  const auto& pd = *pr.pd;
  const DiGraph& x = a.parent();
  LBoundaryReport rep;
  for (int m = 0; m < cutoff; ++m) {
    for (const auto& p : allowed_paths(x, m)) {
      bool eligible = true;
      for (int v : p) eligible = eligible && !a.contains(v) && pd.pi[v];
      eligible = eligible && pd.hts.h[p.back()] && *pd.hts.h[p.back()] == 1;
      if (!eligible) continue;
      ++rep.checked;
      Chain<typename K::Elem> cp{{p, k.one()}};
      auto l = L_op(k, a, pd, 0, cp);
      auto lhs = regular_boundary(k, l);
      auto dp = m >= 1 ? regular_boundary(k, cp) : Chain<typename K::Elem>{};
      auto neg_part = chain_sum(k, chain_neg(k, L_op(k, a, pd, 0, dp)),
                                chain_neg(k, cp));
      auto rhs = chain_sum(k, neg_part, pi_linear(k, a, pd, cp));
      if (!(lhs == rhs)) {
        rep.ok = false;
        rep.failure = path_label(x, p) + ": full identity";
        return rep;
      }
      if (!(drop_inside(k, a, lhs) == neg_part)) {
        rep.ok = false;
        rep.failure = path_label(x, p) + ": truncated identity";
        return rep;
      }
    }
  }
  return rep;
}

/* Cone of the inclusion of the height-one complex into the complement
   complex: degree n holds a height-one chain of degree n-1 and a complement
   chain of degree n, with d(p,q) = (-dp, dq - p). */
template <class K>
struct MappingCone {
  GradedBasisComplex<K> hat1;
  GradedBasisComplex<K> comp;
  std::vector<Matrix<typename K::Elem>> embed;  // hat1 inside comp, per degree
  ChainComplex<typename K::Elem> cc;
};

template <class K>
MappingCone<K> mapping_cone(const K& k, const VertexSubset& a, int cutoff) {
  MappingCone<K> mc;
  mc.hat1 = build_hat1_complex(k, a, cutoff);
  mc.comp = build_complement_complex(k, a, cutoff);
  for (int n = 0; n <= cutoff; ++n) {
    std::vector<Chain<typename K::Elem>> chains;
    for (std::size_t j = 0; j < mc.hat1.basis[n].dim(); ++j)
      chains.push_back(basis_chain(k, mc.hat1.basis[n], j));
    mc.embed.push_back(
        express_in_basis(k, mc.comp.basis[n], chains, "cone embedding"));
  }

  auto h1dim = [&](int n) {
    return n < 0 ? std::size_t{0} : mc.hat1.cc.dims[n];
  };
  for (int n = 0; n <= cutoff; ++n)
    mc.cc.dims.push_back(h1dim(n - 1) + mc.comp.cc.dims[n]);
  mc.cc.d.push_back(Matrix<typename K::Elem>(0, mc.cc.dims[0], k.zero()));
  for (int n = 1; n <= cutoff; ++n) {
    std::size_t top_rows = h1dim(n - 2);
    std::size_t bot_rows = mc.comp.cc.dims[n - 1];
    std::size_t left_cols = h1dim(n - 1);
    std::size_t right_cols = mc.comp.cc.dims[n];
    Matrix<typename K::Elem> d(top_rows + bot_rows, left_cols + right_cols,
                               k.zero());
    if (n >= 2) {
      const auto& dh = mc.hat1.cc.d[n - 1];
      for (std::size_t i = 0; i < top_rows; ++i)
        for (std::size_t j = 0; j < left_cols; ++j)
          d.at(i, j) = k.neg(dh.at(i, j));
    }
    const auto& emb = mc.embed[n - 1];
    for (std::size_t i = 0; i < bot_rows; ++i)
      for (std::size_t j = 0; j < left_cols; ++j)
        d.at(top_rows + i, j) = k.neg(emb.at(i, j));
    const auto& dc = mc.comp.cc.d[n];
    for (std::size_t i = 0; i < bot_rows; ++i)
      for (std::size_t j = 0; j < right_cols; ++j)
        d.at(top_rows + i, left_cols + j) = dc.at(i, j);
    mc.cc.d.push_back(std::move(d));
  }
  if (!complex_squares_to_zero(k, mc.cc))
    throw std::logic_error("cone boundary fails to square to zero");
  return mc;
}

struct DegreeIso {
  int degree = 0;
  std::size_t dim_from = 0;
  std::size_t dim_to = 0;
  bool iso = false;  // square and full rank
};

struct EReport {
  bool ok = false;
  bool chain_map = false;
  std::vector<DegreeIso> degrees;
};

/* Builds E(p,q) = L0(p) + q from the cone into the relative complex and
   verifies it is a degreewise isomorphism commuting with the boundaries.
   Requires a verified cofibration. */
template <class K>
EReport verify_E(const K& k, const VertexSubset& a, int cutoff) {
  auto verdict = check_cofibration(a);
  if (!verdict.is_cofibration)
    throw std::invalid_argument("not a cofibration: " +
                                to_string(verdict.failure));
  const auto& pd = *verdict.decomposition;
  auto mc = mapping_cone(k, a, cutoff);
  auto hat = build_hat_complex(k, a, cutoff);

  EReport rep;
  std::vector<Matrix<typename K::Elem>> e;
  for (int n = 0; n <= cutoff; ++n) {
    std::vector<Chain<typename K::Elem>> images;
    if (n >= 1)
      for (std::size_t j = 0; j < mc.hat1.basis[n - 1].dim(); ++j)
        images.push_back(
            L_op(k, a, pd, 0, basis_chain(k, mc.hat1.basis[n - 1], j)));
    for (std::size_t j = 0; j < mc.comp.basis[n].dim(); ++j)
      images.push_back(basis_chain(k, mc.comp.basis[n], j));
    auto expressed = try_express_in_basis(k, hat.basis[n], images);
    if (!expressed) return rep;  // image leaves the relative chain space
    e.push_back(std::move(*expressed));
  }
  rep.chain_map = is_chain_map(k, mc.cc, hat.cc, e);
  bool all_iso = true;
  for (int n = 0; n <= cutoff; ++n) {
    DegreeIso di;
    di.degree = n;
    di.dim_from = mc.cc.dims[n];
    di.dim_to = hat.cc.dims[n];
    di.iso = di.dim_from == di.dim_to && rank(k, e[n]) == di.dim_to;
    all_iso = all_iso && di.iso;
    rep.degrees.push_back(di);
  }
  rep.ok = rep.chain_map && all_iso;
  return rep;
}

struct ExcisionReport {
  bool ok = false;
  bool cofib_base = false;    // pushed-out inclusion is again a cofibration
  bool dims_equal = false;    // relative homology dimensions agree
  bool chain_map = false;     // induced relative map commutes with boundaries
  bool chain_iso = false;     // and is a degreewise isomorphism
  std::vector<std::size_t> rel_h_x;  // degrees 0..cutoff-1
  std::vector<std::size_t> rel_h_y;
};

/* For a pushout square over a cofibration A into X with attaching map
   f : A -> B, compares the relative homology of (X, A) and (Y, B) and checks
   that the map induced by the X corner is a chain isomorphism of relative
   complexes. */
template <class K>
ExcisionReport verify_excision(const K& k, const PushoutSquare& sq,
                               int cutoff) {
  auto verdict = check_cofibration(sq.inclusion);
  if (!verdict.is_cofibration)
    throw std::invalid_argument("square base is not a cofibration: " +
                                to_string(verdict.failure));
  ExcisionReport rep;

  std::vector<std::string> b_labels;
  for (const auto& l : sq.attaching.codomain().labels())
    b_labels.push_back(sq.corner_b.apply_label(l));
  VertexSubset b_in_y(sq.result, b_labels);
  rep.cofib_base = check_cofibration(b_in_y).is_cofibration;
  if (!rep.cofib_base) return rep;

  auto hx = build_hat_complex(k, sq.inclusion, cutoff);
  auto hy = build_hat_complex(k, b_in_y, cutoff);
  auto tx = compute_homology(k, hx.cc);
  auto ty = compute_homology(k, hy.cc);
  rep.dims_equal = true;
  for (int n = 0; n < cutoff; ++n) {
    rep.rel_h_x.push_back(tx.dim(n));
    rep.rel_h_y.push_back(ty.dim(n));
    rep.dims_equal = rep.dims_equal && tx.dim(n) == ty.dim(n);
  }

  std::vector<Matrix<typename K::Elem>> t;
  for (int n = 0; n <= cutoff; ++n) {
    std::vector<Chain<typename K::Elem>> images;
    for (std::size_t j = 0; j < hx.basis[n].dim(); ++j)
      images.push_back(drop_inside(
          k, b_in_y, map_chain(k, sq.corner_x, basis_chain(k, hx.basis[n], j))));
    auto expressed = try_express_in_basis(k, hy.basis[n], images);
    if (!expressed) return rep;
    t.push_back(std::move(*expressed));
  }
  rep.chain_map = is_chain_map(k, hx.cc, hy.cc, t);
  rep.chain_iso = rep.chain_map;
  for (int n = 0; n <= cutoff; ++n)
    rep.chain_iso = rep.chain_iso && hx.cc.dims[n] == hy.cc.dims[n] &&
                    rank(k, t[n]) == hy.cc.dims[n];
  rep.ok = rep.dims_equal && rep.chain_iso;
  return rep;
}

struct LesNode {
  int degree = 0;
  std::string at;  // "A", "X", or "rel"
  std::size_t dim_mid = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  bool composite_zero = false;
  bool exact = false;
};

struct LesReport {
  bool ok = true;
  std::vector<LesNode> nodes;
};

/* Assembles the homology sequence of (X, A) out of the subgraph inclusion,
   the relative quotient, and the connecting boundary, then checks exactness
   at every node it can see below the cutoff. Requires no edges out of A. */
template <class K>
LesReport verify_les(const K& k, const VertexSubset& a, int cutoff) {
  require_no_edges_out(a, "homology sequence");
  const DiGraph& x = a.parent();
  DiGraph ai = a.induced();

  auto ca = build_omega_complex(k, ai, cutoff);
  auto cx = build_omega_complex(k, x, cutoff);
  auto ch = build_hat_complex(k, a, cutoff);

  auto to_x = [&](const RegularPath& p) {
    RegularPath q;
    q.reserve(p.size());
    for (int v : p) q.push_back(*x.index_of(ai.label(v)));
    return q;
  };
  auto relabel = [&](const Chain<typename K::Elem>& c) {
    Chain<typename K::Elem> out;
    for (const auto& [p, coeff] : c) out.emplace(to_x(p), coeff);
    return out;
  };

  /* Subgraph chains in ambient coordinates, per degree. */
  std::vector<std::vector<Chain<typename K::Elem>>> a_chains;
  for (int n = 0; n <= cutoff; ++n) {
    std::vector<Chain<typename K::Elem>> cs;
    for (std::size_t j = 0; j < ca.basis[n].dim(); ++j)
      cs.push_back(relabel(basis_chain(k, ca.basis[n], j)));
    a_chains.push_back(std::move(cs));
  }

  std::vector<Matrix<typename K::Elem>> imap, jmap;
  for (int n = 0; n <= cutoff; ++n) {
    imap.push_back(
        express_in_basis(k, cx.basis[n], a_chains[n], "subgraph inclusion"));

    /* Split each ambient basis vector across span(A) + relative and keep the
       relative coordinates. */
    std::size_t npaths = cx.basis[n].paths.size();
    std::size_t ad = a_chains[n].size();
    std::size_t hd = ch.basis[n].dim();
    Matrix<typename K::Elem> w(npaths, ad + hd, k.zero());
    for (std::size_t j = 0; j < ad; ++j) {
      auto coords = coords_over_paths(k, cx.basis[n].paths, a_chains[n][j]);
      if (!coords) throw std::logic_error("subgraph chain escapes ambient");
      for (std::size_t i = 0; i < npaths; ++i) w.at(i, j) = (*coords)[i];
    }
    for (std::size_t j = 0; j < hd; ++j) {
      auto coords = coords_over_paths(k, cx.basis[n].paths,
                                      basis_chain(k, ch.basis[n], j));
      if (!coords) throw std::logic_error("relative chain escapes ambient");
      for (std::size_t i = 0; i < npaths; ++i) w.at(i, ad + j) = (*coords)[i];
    }
    auto split = solve(k, w, basis_matrix(k, cx.basis[n]));
    if (!split) throw std::logic_error("ambient chains fail to split");
    Matrix<typename K::Elem> jm(hd, cx.basis[n].dim(), k.zero());
    for (std::size_t i = 0; i < hd; ++i)
      for (std::size_t j = 0; j < cx.basis[n].dim(); ++j)
        jm.at(i, j) = split->at(ad + i, j);
    jmap.push_back(std::move(jm));
  }
  if (!is_chain_map(k, ca.cc, cx.cc, imap))
    throw std::logic_error("inclusion fails to be a chain map");
  if (!is_chain_map(k, cx.cc, ch.cc, jmap))
    throw std::logic_error("quotient fails to be a chain map");

  auto ha = compute_homology(k, ca.cc);
  auto hx = compute_homology(k, cx.cc);
  auto hr = compute_homology(k, ch.cc);
  auto istar = induced_on_homology(k, ha, hx, imap);
  auto jstar = induced_on_homology(k, hx, hr, jmap);

  /* Connecting map: lift a relative cycle, take its full boundary (which
     lands inside A), and read off its class. */
  std::vector<Matrix<typename K::Elem>> dstar(1, Matrix<typename K::Elem>());
  for (int n = 1; n < cutoff; ++n) {
    Matrix<typename K::Elem> m(ha.dim(n - 1), hr.dim(n), k.zero());
    for (std::size_t j = 0; j < hr.dim(n); ++j) {
      Chain<typename K::Elem> lift;
      for (std::size_t i = 0; i < ch.basis[n].dim(); ++i) {
        auto piece =
            chain_scaled(k, basis_chain(k, ch.basis[n], i), hr.reps[n].at(i, j));
        lift = chain_sum(k, std::move(lift), piece);
      }
      auto bd = regular_boundary(k, lift);
      if (!(drop_inside(k, a, bd) == Chain<typename K::Elem>{}))
        throw std::logic_error("relative cycle boundary leaves the subgraph");
      Chain<typename K::Elem> in_a;
      for (const auto& [p, coeff] : bd) {
        RegularPath q;
        q.reserve(p.size());
        for (int v : p) q.push_back(*ai.index_of(x.label(v)));
        in_a.emplace(q, coeff);
      }
      auto coords =
          express_in_basis(k, ca.basis[n - 1], {in_a}, "connecting image");
      std::vector<typename K::Elem> vec(ca.basis[n - 1].dim(), k.zero());
      for (std::size_t i = 0; i < vec.size(); ++i) vec[i] = coords.at(i, 0);
      auto cls = homology_class_coords(k, ha, n - 1, vec);
      if (!cls) throw std::logic_error("connecting image is not a cycle");
      for (std::size_t i = 0; i < cls->size(); ++i) m.at(i, j) = (*cls)[i];
    }
    dstar.push_back(std::move(m));
  }

  LesReport rep;
  auto node = [&](int degree, const std::string& at, std::size_t dim_mid,
                  const Matrix<typename K::Elem>& in,
                  const Matrix<typename K::Elem>& out, bool has_out) {
    LesNode nd;
    nd.degree = degree;
    nd.at = at;
    nd.dim_mid = dim_mid;
    nd.rank_in = rank(k, in);
    nd.rank_out = has_out ? rank(k, out) : 0;
    nd.composite_zero =
        !has_out || is_zero_matrix(k, matmul(k, out, in));
    nd.exact = nd.composite_zero && nd.rank_in + nd.rank_out == nd.dim_mid;
    rep.ok = rep.ok && nd.exact;
    rep.nodes.push_back(nd);
  };

  Matrix<typename K::Elem> none;
  for (int n = 0; n < cutoff; ++n) {
    node(n, "X", hx.dim(n), istar[n], jstar[n], true);
    if (n >= 1)
      node(n, "rel", hr.dim(n), jstar[n], dstar[n], true);
    else
      node(n, "rel", hr.dim(n), jstar[n], none, false);
    if (n <= cutoff - 2) node(n, "A", ha.dim(n), dstar[n + 1], istar[n], true);
  }
  return rep;
}

}  // namespace pathhom
