#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathhom {

template <class E>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<E> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const E& zero)
      : rows(r), cols(c), a(r * c, zero) {}

  E& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const E& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool operator==(const Matrix&) const = default;
};

template <class K>
Matrix<typename K::Elem> identity_matrix(const K& k, std::size_t n) {
  Matrix<typename K::Elem> m(n, n, k.zero());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
  return m;
}

template <class K>
Matrix<typename K::Elem> matmul(const K& k,
                                const Matrix<typename K::Elem>& x,
                                const Matrix<typename K::Elem>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul shape mismatch");
  Matrix<typename K::Elem> r(x.rows, y.cols, k.zero());
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t l = 0; l < x.cols; ++l) {
      if (k.is_zero(x.at(i, l))) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        r.at(i, j) = k.add(r.at(i, j), k.mul(x.at(i, l), y.at(l, j)));
    }
  return r;
}

template <class K>
bool is_zero_matrix(const K& k, const Matrix<typename K::Elem>& m) {
  for (const auto& e : m.a)
    if (!k.is_zero(e)) return false;
  return true;
}

template <class K>
Matrix<typename K::Elem> mat_apply(const K& k,
                                   const Matrix<typename K::Elem>& m,
                                   const std::vector<typename K::Elem>& v) {
  Matrix<typename K::Elem> col(m.cols, 1, k.zero());
  for (std::size_t i = 0; i < m.cols; ++i) col.at(i, 0) = v[i];
  return matmul(k, m, col);
}

template <class K>
struct RrefResult {
  Matrix<typename K::Elem> r;
  std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
};

/* Reduced row echelon form with deterministic pivoting: columns are scanned
   left to right and the first row with a nonzero entry is promoted. The row
   update loop is the parallel kernel; parallel=false runs the identical
   arithmetic serially, so both variants produce the same matrix. */
template <class K>
RrefResult<K> rref(const K& k, Matrix<typename K::Elem> m,
                   bool parallel = true) {
  using std::swap;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols && lead < m.rows; ++col) {
    std::size_t piv = lead;
    while (piv < m.rows && k.is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < m.cols; ++j) swap(m.at(piv, j), m.at(lead, j));
    const auto scale = k.inv(m.at(lead, col));
    for (std::size_t j = col; j < m.cols; ++j)
      m.at(lead, j) = k.mul(scale, m.at(lead, j));
    const long long nrows = static_cast<long long>(m.rows);
#pragma omp parallel for schedule(static) if (parallel)
    for (long long r = 0; r < nrows; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      if (ur == lead || k.is_zero(m.at(ur, col))) continue;
      const auto f = m.at(ur, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(ur, j) = k.sub(m.at(ur, j), k.mul(f, m.at(lead, j)));
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

/* Serial reference for the parallel kernel; kept for testing and benchmarks. */
template <class K>
RrefResult<K> rref_serial(const K& k, Matrix<typename K::Elem> m) {
  return rref(k, std::move(m), false);
}

template <class K>
std::size_t rank(const K& k, const Matrix<typename K::Elem>& m) {
  return rref(k, m).pivots.size();
}

/* Basis of the right nullspace; one vector per free column, ascending.
   Size cols - rank by construction (rank-nullity). */
template <class K>
std::vector<std::vector<typename K::Elem>> nullspace_basis(
    const K& k, const Matrix<typename K::Elem>& m) {
  auto rr = rref(k, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<std::vector<typename K::Elem>> basis;
  for (std::size_t fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<typename K::Elem> x(m.cols, k.zero());
    x[fc] = k.one();
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
      x[rr.pivots[r]] = k.neg(rr.r.at(r, fc));
    basis.push_back(std::move(x));
  }
  assert(rr.pivots.size() + basis.size() == m.cols);
  return basis;
}

/* Solve M X = B for all columns of B at once; nullopt if any column is
   inconsistent. Free variables are set to zero. */
template <class K>
std::optional<Matrix<typename K::Elem>> solve(
    const K& k, const Matrix<typename K::Elem>& m,
    const Matrix<typename K::Elem>& b) {
  if (b.rows != m.rows) throw std::invalid_argument("solve shape mismatch");
  Matrix<typename K::Elem> aug(m.rows, m.cols + b.cols, k.zero());
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    for (std::size_t j = 0; j < b.cols; ++j) aug.at(i, m.cols + j) = b.at(i, j);
  }
  auto rr = rref(k, std::move(aug));
  for (auto c : rr.pivots)
    if (c >= m.cols) return std::nullopt;
  Matrix<typename K::Elem> x(m.cols, b.cols, k.zero());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols; ++j)
      x.at(rr.pivots[r], j) = rr.r.at(r, m.cols + j);
  return x;
}

template <class K>
std::optional<std::vector<typename K::Elem>> solve(
    const K& k, const Matrix<typename K::Elem>& m,
    const std::vector<typename K::Elem>& b) {
  Matrix<typename K::Elem> col(m.rows, 1, k.zero());
  for (std::size_t i = 0; i < m.rows; ++i) col.at(i, 0) = b[i];
  auto x = solve(k, m, col);
  if (!x) return std::nullopt;
  std::vector<typename K::Elem> v(m.cols, k.zero());
  for (std::size_t i = 0; i < m.cols; ++i) v[i] = x->at(i, 0);
  return v;
}

/* Dense matrix with named bases on both axes; the carrier for boundary
   matrices and debug dumps. */
template <class E>
struct LabeledMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  Matrix<E> mat;
};

template <class K>
std::pair<LabeledMatrix<typename K::Elem>, std::vector<std::size_t>> rref(
    const K& k, const LabeledMatrix<typename K::Elem>& lm) {
  auto rr = rref(k, lm.mat);
  LabeledMatrix<typename K::Elem> out;
  out.col_labels = lm.col_labels;
  out.row_labels.reserve(lm.mat.rows);
  for (std::size_t i = 0; i < lm.mat.rows; ++i)
    out.row_labels.push_back("r" + std::to_string(i));
  out.mat = std::move(rr.r);
  return {std::move(out), std::move(rr.pivots)};
}

template <class K>
std::string to_csv(const K& k, const LabeledMatrix<typename K::Elem>& lm) {
  std::string s;
  for (const auto& c : lm.col_labels) {
    s += ',';
    s += c;
  }
  s += '\n';
  for (std::size_t i = 0; i < lm.mat.rows; ++i) {
    s += lm.row_labels[i];
    for (std::size_t j = 0; j < lm.mat.cols; ++j) {
      s += ',';
      s += k.str(lm.mat.at(i, j));
    }
    s += '\n';
  }
  return s;
}

}  // namespace pathhom
