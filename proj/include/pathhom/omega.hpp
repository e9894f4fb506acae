#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pathhom/complex.hpp"
#include "pathhom/cofib.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/matrix.hpp"
#include "pathhom/paths.hpp"

namespace pathhom {

/* Subspace of the span of `paths` given by explicit coordinate vectors. */
template <class K>
struct PathBasis {
  int degree = 0;
  std::vector<RegularPath> paths;
  std::vector<std::vector<typename K::Elem>> vectors;

  std::size_t dim() const { return vectors.size(); }
};

template <class K>
Chain<typename K::Elem> basis_chain(const K& k, const PathBasis<K>& b,
                                    std::size_t j) {
  Chain<typename K::Elem> c;
  for (std::size_t i = 0; i < b.paths.size(); ++i)
    chain_add(k, c, b.paths[i], b.vectors[j][i]);
  return c;
}

template <class K>
std::optional<std::vector<typename K::Elem>> coords_over_paths(
    const K& k, const std::vector<RegularPath>& paths,
    const Chain<typename K::Elem>& c) {
  std::map<RegularPath, std::size_t> idx;
  for (std::size_t i = 0; i < paths.size(); ++i) idx.emplace(paths[i], i);
  std::vector<typename K::Elem> out(paths.size(), k.zero());
  for (const auto& [p, coeff] : c) {
    auto it = idx.find(p);
    if (it == idx.end()) return std::nullopt;
    out[it->second] = coeff;
  }
  return out;
}

template <class K>
Matrix<typename K::Elem> basis_matrix(const K& k, const PathBasis<K>& b) {
  return columns_matrix(k, b.paths.size(), b.vectors);
}

/* Coordinates of each chain in the basis, or nullopt when some chain leaves
   the span. */
template <class K>
std::optional<Matrix<typename K::Elem>> try_express_in_basis(
    const K& k, const PathBasis<K>& b,
    const std::vector<Chain<typename K::Elem>>& chains) {
  Matrix<typename K::Elem> rhs(b.paths.size(), chains.size(), k.zero());
  for (std::size_t j = 0; j < chains.size(); ++j) {
    auto coords = coords_over_paths(k, b.paths, chains[j]);
    if (!coords) return std::nullopt;
    for (std::size_t i = 0; i < coords->size(); ++i) rhs.at(i, j) = (*coords)[i];
  }
  return solve(k, basis_matrix(k, b), rhs);
}

/* Throwing variant for spans guaranteed by construction; failure to land in
   the span is a broken structural invariant, not an input condition. */
template <class K>
Matrix<typename K::Elem> express_in_basis(
    const K& k, const PathBasis<K>& b,
    const std::vector<Chain<typename K::Elem>>& chains, const char* what) {
  auto sol = try_express_in_basis(k, b, chains);
  if (!sol) throw std::logic_error(std::string(what) + ": not in span");
  return *sol;
}

/* Kernel of the face constraints: vectors in the span of `cols` whose
   boundary terms all satisfy face_ok. Degree 0 has no constraints. */
template <class K>
std::vector<std::vector<typename K::Elem>> face_kernel(
    const K& k, const std::vector<RegularPath>& cols,
    const std::function<bool(const RegularPath&)>& face_ok) {
  if (cols.empty()) return {};
  if (cols.front().size() == 1) {
    std::vector<std::vector<typename K::Elem>> id;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::vector<typename K::Elem> v(cols.size(), k.zero());
      v[j] = k.one();
      id.push_back(std::move(v));
    }
    return id;
  }
  std::map<RegularPath, std::size_t> row_of;
  std::vector<std::map<std::size_t, typename K::Elem>> col_entries(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Chain<typename K::Elem> one{{cols[j], k.one()}};
    for (const auto& [face, coeff] : regular_boundary(k, one)) {
      if (face_ok(face)) continue;
      auto [it, _] = row_of.try_emplace(face, row_of.size());
      col_entries[j].emplace(it->second, coeff);
    }
  }
  Matrix<typename K::Elem> m(row_of.size(), cols.size(), k.zero());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, coeff] : col_entries[j]) m.at(r, j) = coeff;
  return nullspace_basis(k, m);
}

/* Basis of the degree-n space of allowed chains with allowed boundary. */
template <class K>
PathBasis<K> omega_basis(const K& k, const DiGraph& g, int n) {
  PathBasis<K> b;
  b.degree = n;
  b.paths = allowed_paths(g, n);
  b.vectors = face_kernel<K>(
      k, b.paths, [&](const RegularPath& f) { return is_allowed(g, f); });
  return b;
}

/* Same space for the complement of A, kept in parent-graph indexing. */
template <class K>
PathBasis<K> omega_complement_basis(const K& k, const VertexSubset& a, int n) {
  const DiGraph& x = a.parent();
  PathBasis<K> b;
  b.degree = n;
  for (auto& p : allowed_paths(x, n)) {
    bool outside = true;
    for (int v : p) outside = outside && !a.contains(v);
    if (outside) b.paths.push_back(std::move(p));
  }
  b.vectors = face_kernel<K>(
      k, b.paths, [&](const RegularPath& f) { return is_allowed(x, f); });
  return b;
}

/* Allowed chains meeting the complement of A whose full boundary in the
   parent graph is allowed. */
template <class K>
PathBasis<K> omega_hat_basis(const K& k, const VertexSubset& a, int n) {
  const DiGraph& x = a.parent();
  PathBasis<K> b;
  b.degree = n;
  for (auto& p : allowed_paths(x, n)) {
    bool meets = false;
    for (int v : p) meets = meets || !a.contains(v);
    if (meets) b.paths.push_back(std::move(p));
  }
  b.vectors = face_kernel<K>(
      k, b.paths, [&](const RegularPath& f) { return is_allowed(x, f); });
  return b;
}

inline void require_no_edges_out(const VertexSubset& a, const char* what) {
  auto eo = no_edges_out(a);
  if (!eo.ok) {
    const auto& [av, xv] = *eo.witness;
    throw std::invalid_argument(std::string(what) + ": edge out of subgraph " +
                                a.parent().label(av) + "->" +
                                a.parent().label(xv));
  }
}

/* Chains of complement paths ending at height 1 whose boundary stays in
   such paths. Needs no edges out of A so that heights decrease along the
   complement only at the last step into A. */
template <class K>
PathBasis<K> omega_hat1_basis(const K& k, const VertexSubset& a, int n) {
  require_no_edges_out(a, "height-one subspace");
  const DiGraph& x = a.parent();
  Heights hts = heights(a);
  auto good = [&](const RegularPath& p) {
    for (int v : p)
      if (a.contains(v)) return false;
    return is_allowed(x, p) && hts.h[p.back()] && *hts.h[p.back()] == 1;
  };
  PathBasis<K> b;
  b.degree = n;
  for (auto& p : allowed_paths(x, n))
    if (good(p)) b.paths.push_back(std::move(p));
  b.vectors = face_kernel<K>(k, b.paths, good);
  return b;
}

/* Remove the terms lying entirely inside A. */
template <class K>
Chain<typename K::Elem> drop_inside(const K& k, const VertexSubset& a,
                                    const Chain<typename K::Elem>& c) {
  Chain<typename K::Elem> out;
  for (const auto& [p, coeff] : c) {
    bool inside = true;
    for (int v : p) inside = inside && a.contains(v);
    if (!inside) chain_add(k, out, p, coeff);
  }
  return out;
}

template <class K>
struct GradedBasisComplex {
  std::vector<PathBasis<K>> basis;  // degrees 0 .. top
  ChainComplex<typename K::Elem> cc;
};

/* Assembles boundary matrices in the listed bases; bnd maps a degree-n
   chain to its degree-(n-1) boundary image. */
template <class K, class BndFn>
GradedBasisComplex<K> build_graded_complex(const K& k,
                                           std::vector<PathBasis<K>> bases,
                                           BndFn bnd, const char* what) {
  GradedBasisComplex<K> gc;
  gc.basis = std::move(bases);
  for (const auto& b : gc.basis) gc.cc.dims.push_back(b.dim());
  gc.cc.d.push_back(Matrix<typename K::Elem>(0, gc.cc.dims[0], k.zero()));
  for (std::size_t n = 1; n < gc.basis.size(); ++n) {
    std::vector<Chain<typename K::Elem>> images;
    for (std::size_t j = 0; j < gc.basis[n].dim(); ++j)
      images.push_back(bnd(basis_chain(k, gc.basis[n], j)));
    gc.cc.d.push_back(express_in_basis(k, gc.basis[n - 1], images, what));
  }
  return gc;
}

template <class K>
GradedBasisComplex<K> build_omega_complex(const K& k, const DiGraph& g,
                                          int cutoff) {
  std::vector<PathBasis<K>> bases;
  for (int n = 0; n <= cutoff; ++n) bases.push_back(omega_basis(k, g, n));
  return build_graded_complex(
      k, std::move(bases),
      [&](const Chain<typename K::Elem>& c) { return regular_boundary(k, c); },
      "omega boundary");
}

template <class K>
GradedBasisComplex<K> build_complement_complex(const K& k,
                                               const VertexSubset& a,
                                               int cutoff) {
  std::vector<PathBasis<K>> bases;
  for (int n = 0; n <= cutoff; ++n)
    bases.push_back(omega_complement_basis(k, a, n));
  return build_graded_complex(
      k, std::move(bases),
      [&](const Chain<typename K::Elem>& c) { return regular_boundary(k, c); },
      "complement boundary");
}

/* Relative complex under the truncated boundary; requires no edges out of A
   so the allowed/inside split is compatible with the boundary. */
template <class K>
GradedBasisComplex<K> build_hat_complex(const K& k, const VertexSubset& a,
                                        int cutoff) {
  require_no_edges_out(a, "relative complex");
  std::vector<PathBasis<K>> bases;
  for (int n = 0; n <= cutoff; ++n) bases.push_back(omega_hat_basis(k, a, n));
  return build_graded_complex(
      k, std::move(bases),
      [&](const Chain<typename K::Elem>& c) {
        return drop_inside(k, a, regular_boundary(k, c));
      },
      "relative boundary");
}

template <class K>
GradedBasisComplex<K> build_hat1_complex(const K& k, const VertexSubset& a,
                                         int cutoff) {
  std::vector<PathBasis<K>> bases;
  for (int n = 0; n <= cutoff; ++n) bases.push_back(omega_hat1_basis(k, a, n));
  return build_graded_complex(
      k, std::move(bases),
      [&](const Chain<typename K::Elem>& c) { return regular_boundary(k, c); },
      "height-one boundary");
}

/* Boundary matrix between the degree n and n-1 bases with generated row and
   column names. */
template <class K>
LabeledMatrix<typename K::Elem> omega_boundary_matrix(const K& k,
                                                      const DiGraph& g,
                                                      int n) {
  if (n < 1) throw std::invalid_argument("boundary degree must be >= 1");
  auto lo = omega_basis(k, g, n - 1);
  auto hi = omega_basis(k, g, n);
  std::vector<Chain<typename K::Elem>> images;
  for (std::size_t j = 0; j < hi.dim(); ++j)
    images.push_back(regular_boundary(k, basis_chain(k, hi, j)));
  LabeledMatrix<typename K::Elem> lm;
  lm.mat = express_in_basis(k, lo, images, "omega boundary");
  for (std::size_t i = 0; i < lo.dim(); ++i)
    lm.row_labels.push_back("w" + std::to_string(n - 1) + "_" +
                            std::to_string(i));
  for (std::size_t j = 0; j < hi.dim(); ++j)
    lm.col_labels.push_back("w" + std::to_string(n) + "_" + std::to_string(j));
  return lm;
}

struct HomologyRow {
  std::size_t dim_space = 0;  // chain space dimension at this degree
  std::size_t rank_d = 0;     // rank of the outgoing boundary
  std::size_t nullity_d = 0;  // cycle dimension
  std::size_t dim_h = 0;
};

/* One homology class as printable (coefficient, path) terms. */
using GeneratorChain = std::vector<std::pair<std::string, std::string>>;

struct HomologyTable {
  int cutoff = 0;
  std::vector<HomologyRow> rows;                        // degrees 0..cutoff-1
  std::vector<std::vector<GeneratorChain>> generators;  // same degrees
};

template <class K>
HomologyTable table_from_complex(const K& k, const DiGraph& g,
                                 const GradedBasisComplex<K>& gc, int cutoff,
                                 bool with_generators) {
  HomologyTable t;
  t.cutoff = cutoff;
  std::vector<std::size_t> ranks;
  for (const auto& m : gc.cc.d) ranks.push_back(rank(k, m));
  auto hd = compute_homology(k, gc.cc);
  for (int n = 0; n < cutoff; ++n) {
    HomologyRow r;
    r.dim_space = gc.cc.dims[n];
    r.rank_d = ranks[n];
    r.nullity_d = r.dim_space - r.rank_d;
    r.dim_h = r.nullity_d - ranks[n + 1];
    if (r.dim_h != hd.dim(n))
      throw std::logic_error("rank bookkeeping disagrees with homology basis");
    t.rows.push_back(r);
  }
  if (with_generators) {
    for (int n = 0; n < cutoff; ++n) {
      std::vector<GeneratorChain> classes;
      for (std::size_t j = 0; j < hd.dim(n); ++j) {
        Chain<typename K::Elem> c;
        for (std::size_t i = 0; i < gc.basis[n].dim(); ++i) {
          auto scaled =
              chain_scaled(k, basis_chain(k, gc.basis[n], i), hd.reps[n].at(i, j));
          c = chain_sum(k, std::move(c), scaled);
        }
        GeneratorChain terms;
        for (const auto& [p, coeff] : c)
          terms.emplace_back(k.str(coeff), path_label(g, p));
        classes.push_back(std::move(terms));
      }
      t.generators.push_back(std::move(classes));
    }
  }
  return t;
}

template <class K>
HomologyTable homology(const K& k, const DiGraph& g, int cutoff,
                       bool with_generators = true) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  auto gc = build_omega_complex(k, g, cutoff);
  return table_from_complex(k, g, gc, cutoff, with_generators);
}

template <class K>
HomologyTable relative_homology(const K& k, const VertexSubset& a, int cutoff,
                                bool with_generators = true) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  auto gc = build_hat_complex(k, a, cutoff);
  return table_from_complex(k, a.parent(), gc, cutoff, with_generators);
}

/* Vertexwise image of a chain under a digraph map; a tuple with equal
   consecutive images vanishes in the regular quotient. */
template <class K>
Chain<typename K::Elem> map_chain(const K& k, const GraphMap& f,
                                  const Chain<typename K::Elem>& c) {
  Chain<typename K::Elem> out;
  for (const auto& [p, coeff] : c) {
    RegularPath q;
    q.reserve(p.size());
    for (int v : p) q.push_back(f.apply(v));
    bool regular = true;
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
      regular = regular && q[i] != q[i + 1];
    if (regular) chain_add(k, out, q, coeff);
  }
  return out;
}

/* Degreewise matrices of the induced chain map between omega complexes;
   landing in the target basis and commuting with the boundary hold for
   every digraph map, so violations throw. */
template <class K>
std::vector<Matrix<typename K::Elem>> omega_chain_map(
    const K& k, const GraphMap& f, const GradedBasisComplex<K>& from,
    const GradedBasisComplex<K>& to) {
  std::vector<Matrix<typename K::Elem>> out;
  for (std::size_t n = 0; n < from.basis.size(); ++n) {
    std::vector<Chain<typename K::Elem>> images;
    for (std::size_t j = 0; j < from.basis[n].dim(); ++j)
      images.push_back(map_chain(k, f, basis_chain(k, from.basis[n], j)));
    out.push_back(express_in_basis(k, to.basis[n], images, "induced map"));
  }
  if (!is_chain_map(k, from.cc, to.cc, out))
    throw std::logic_error("induced map fails to commute with the boundary");
  return out;
}

/* Matrices of the map induced on homology in degrees 0..cutoff-1. */
template <class K>
std::vector<Matrix<typename K::Elem>> induced_homology_matrices(
    const K& k, const GraphMap& f, int cutoff) {
  auto from = build_omega_complex(k, f.domain(), cutoff);
  auto to = build_omega_complex(k, f.codomain(), cutoff);
  auto cm = omega_chain_map(k, f, from, to);
  auto hf = compute_homology(k, from.cc);
  auto ht = compute_homology(k, to.cc);
  return induced_on_homology(k, hf, ht, cm);
}

template <class K>
bool is_homology_iso(const K& k, const GraphMap& f, int cutoff) {
  return all_square_full_rank(k, induced_homology_matrices(k, f, cutoff));
}

}  // namespace pathhom
