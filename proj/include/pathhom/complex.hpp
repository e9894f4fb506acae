#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pathhom/matrix.hpp"

namespace pathhom {

/* Nonnegatively graded complex stored through degree top():
   d[n] maps degree n to degree n-1; d[0] has zero rows. */
template <class E>
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix<E>> d;

  int top() const { return static_cast<int>(dims.size()) - 1; }
};

template <class K>
bool complex_squares_to_zero(const K& k,
                             const ChainComplex<typename K::Elem>& cc) {
  for (int n = 1; n < cc.top(); ++n)
    if (!is_zero_matrix(k, matmul(k, cc.d[n], cc.d[n + 1]))) return false;
  return true;
}

/* Columns of `cols` that extend the column span of `base` to a basis of the
   joint span. */
template <class K>
Matrix<typename K::Elem> rank_extension(const K& k,
                                        const Matrix<typename K::Elem>& base,
                                        const Matrix<typename K::Elem>& cols) {
  if (base.rows != cols.rows) throw std::invalid_argument("row mismatch");
  Matrix<typename K::Elem> acc = base;
  Matrix<typename K::Elem> out(base.rows, 0, k.zero());
  std::size_t r = rank(k, acc);
  for (std::size_t j = 0; j < cols.cols; ++j) {
    Matrix<typename K::Elem> trial(acc.rows, acc.cols + 1, k.zero());
    for (std::size_t i = 0; i < acc.rows; ++i) {
      for (std::size_t c = 0; c < acc.cols; ++c) trial.at(i, c) = acc.at(i, c);
      trial.at(i, acc.cols) = cols.at(i, j);
    }
    std::size_t r2 = rank(k, trial);
    if (r2 > r) {
      r = r2;
      acc = trial;
      Matrix<typename K::Elem> grown(out.rows, out.cols + 1, k.zero());
      for (std::size_t i = 0; i < out.rows; ++i) {
        for (std::size_t c = 0; c < out.cols; ++c) grown.at(i, c) = out.at(i, c);
        grown.at(i, out.cols) = cols.at(i, j);
      }
      out = grown;
    }
  }
  return out;
}

/* Homology of degrees 0 .. top-1; the top degree is excluded because its
   incoming boundary is not stored. Columns of cycles[n] span ker d[n],
   boundaries[n] span im d[n+1], reps[n] complete boundaries[n] to a basis
   of the cycles, all in degree-n chain coordinates. */
template <class K>
struct HomologyData {
  using E = typename K::Elem;
  std::vector<Matrix<E>> cycles;
  std::vector<Matrix<E>> boundaries;
  std::vector<Matrix<E>> reps;

  std::size_t dim(int n) const { return reps[n].cols; }
  int degrees() const { return static_cast<int>(reps.size()); }
};

template <class K>
Matrix<typename K::Elem> columns_matrix(
    const K& k, std::size_t rows,
    const std::vector<std::vector<typename K::Elem>>& cols) {
  Matrix<typename K::Elem> m(rows, cols.size(), k.zero());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

template <class K>
HomologyData<K> compute_homology(const K& k,
                                 const ChainComplex<typename K::Elem>& cc) {
  HomologyData<K> hd;
  for (int n = 0; n < cc.top(); ++n) {
    auto z = columns_matrix(k, cc.dims[n], nullspace_basis(k, cc.d[n]));
    const auto& dn1 = cc.d[n + 1];
    auto piv = rref(k, dn1).pivots;
    Matrix<typename K::Elem> b(cc.dims[n], piv.size(), k.zero());
    for (std::size_t j = 0; j < piv.size(); ++j)
      for (std::size_t i = 0; i < cc.dims[n]; ++i)
        b.at(i, j) = dn1.at(i, piv[j]);
    auto h = rank_extension(k, b, z);
    hd.cycles.push_back(std::move(z));
    hd.boundaries.push_back(std::move(b));
    hd.reps.push_back(std::move(h));
  }
  return hd;
}

/* Coordinates of a cycle's class in the rep basis: solve [B | H] x = c and
   keep the H block. Returns nullopt when c is not a cycle of the complex. */
template <class K>
std::optional<std::vector<typename K::Elem>> homology_class_coords(
    const K& k, const HomologyData<K>& hd, int n,
    const std::vector<typename K::Elem>& cycle) {
  const auto& b = hd.boundaries[n];
  const auto& h = hd.reps[n];
  Matrix<typename K::Elem> bh(b.rows, b.cols + h.cols, k.zero());
  for (std::size_t i = 0; i < b.rows; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) bh.at(i, j) = b.at(i, j);
    for (std::size_t j = 0; j < h.cols; ++j) bh.at(i, b.cols + j) = h.at(i, j);
  }
  auto x = solve(k, bh, cycle);
  if (!x) return std::nullopt;
  return std::vector<typename K::Elem>(x->begin() + b.cols, x->end());
}

/* Degreewise maps f[n] : C_n -> D_n. */
template <class K>
bool is_chain_map(const K& k, const ChainComplex<typename K::Elem>& c,
                  const ChainComplex<typename K::Elem>& d,
                  const std::vector<Matrix<typename K::Elem>>& f) {
  int through = std::min(c.top(), d.top());
  for (int n = 1; n <= through; ++n)
    if (matmul(k, f[n - 1], c.d[n]) != matmul(k, d.d[n], f[n])) return false;
  return true;
}

/* Matrices of the induced map on homology, degrees 0 .. degrees()-1 of the
   smaller side. Throws when some f-image of a cycle rep is not a cycle,
   which a chain map cannot produce. */
template <class K>
std::vector<Matrix<typename K::Elem>> induced_on_homology(
    const K& k, const HomologyData<K>& hc, const HomologyData<K>& hd,
    const std::vector<Matrix<typename K::Elem>>& f) {
  int through = std::min(hc.degrees(), hd.degrees());
  std::vector<Matrix<typename K::Elem>> out;
  for (int n = 0; n < through; ++n) {
    Matrix<typename K::Elem> m(hd.dim(n), hc.dim(n), k.zero());
    for (std::size_t j = 0; j < hc.dim(n); ++j) {
      std::vector<typename K::Elem> rep(hc.reps[n].rows, k.zero());
      for (std::size_t i = 0; i < rep.size(); ++i) rep[i] = hc.reps[n].at(i, j);
      auto img = mat_apply(k, f[n], rep);
      std::vector<typename K::Elem> img_vec(img.rows, k.zero());
      for (std::size_t i = 0; i < img.rows; ++i) img_vec[i] = img.at(i, 0);
      auto coords = homology_class_coords(k, hd, n, img_vec);
      if (!coords) throw std::logic_error("image of a cycle is not a cycle");
      for (std::size_t i = 0; i < coords->size(); ++i)
        m.at(i, j) = (*coords)[i];
    }
    out.push_back(std::move(m));
  }
  return out;
}

template <class K>
bool all_square_full_rank(const K& k,
                          const std::vector<Matrix<typename K::Elem>>& ms) {
  for (const auto& m : ms) {
    if (m.rows != m.cols) return false;
    if (rank(k, m) != m.rows) return false;
  }
  return true;
}

}  // namespace pathhom
