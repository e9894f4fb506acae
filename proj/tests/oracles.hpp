#pragma once

/* Independent brute-force oracles used by tests and the acceptance suite.
   Everything here is deliberately self-contained: no pathhom linear algebra,
   no omega machinery, only the DiGraph data model and the stdlib. */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "pathhom/digraph.hpp"

namespace oracle {

/* Exact fraction on int64; entries stay tiny at oracle scale. */
struct Frac {
  long long num = 0, den = 1;

  Frac() = default;
  Frac(long long n) : num(n) {}
  Frac(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  Frac operator+(const Frac& o) const {
    return Frac(num * o.den + o.num * den, den * o.den);
  }
  Frac operator-(const Frac& o) const {
    return Frac(num * o.den - o.num * den, den * o.den);
  }
  Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
  Frac operator/(const Frac& o) const { return Frac(num * o.den, den * o.num); }
  bool is_zero() const { return num == 0; }
};

/* Row echelon rank over Frac; returns the number of pivots. */
inline std::size_t frac_rank(std::vector<std::vector<Frac>> m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Frac f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j)
        m[r][j] = m[r][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/* All vertex tuples of the given degree with no two consecutive entries
   equal, in lexicographic order. */
inline std::vector<std::vector<int>> all_regular_tuples(int nv, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left < 0) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < nv; ++v) {
      if (!cur.empty() && cur.back() == v) continue;
      cur.push_back(v);
      self(self, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, degree);
  return out;
}

inline bool tuple_allowed(const pathhom::DiGraph& g,
                          const std::vector<int>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return true;
}

/* dim of the degree-n space of allowed-path combinations whose boundaries
   are again spanned by allowed paths, computed over the full regular path
   space: columns are allowed n-paths, rows are all non-allowed regular
   (n-1)-paths, entries the signed face coefficients. */
inline int brute_force_omega_dim(const pathhom::DiGraph& g, int n) {
  int nv = static_cast<int>(g.num_vertices());
  std::vector<std::vector<int>> cols;
  for (const auto& p : all_regular_tuples(nv, n))
    if (tuple_allowed(g, p)) cols.push_back(p);
  if (n == 0) return static_cast<int>(cols.size());
  std::map<std::vector<int>, std::size_t> row_of;
  for (const auto& p : all_regular_tuples(nv, n - 1))
    if (!tuple_allowed(g, p)) row_of.emplace(p, row_of.size());
  std::vector<std::vector<Frac>> m(row_of.size(),
                                   std::vector<Frac>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& p = cols[c];
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0 && i + 1 < p.size() && p[i - 1] == p[i + 1]) continue;
      std::vector<int> face;
      for (std::size_t j = 0; j < p.size(); ++j)
        if (j != i) face.push_back(p[j]);
      auto it = row_of.find(face);
      if (it == row_of.end()) continue;  // face is allowed
      m[it->second][c] =
          m[it->second][c] + Frac(i % 2 == 0 ? 1 : -1);
    }
  }
  return static_cast<int>(cols.size() - frac_rank(std::move(m)));
}

inline std::vector<int> brute_force_omega_dims(const pathhom::DiGraph& g,
                                               int max_degree) {
  std::vector<int> dims;
  for (int n = 0; n <= max_degree; ++n)
    dims.push_back(brute_force_omega_dim(g, n));
  return dims;
}

/* Connected components of the undirected support, by union-find. */
inline int count_components(const pathhom::DiGraph& g) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : g.edges()) parent[find(u)] = find(v);
  int roots = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (find(static_cast<int>(v)) == static_cast<int>(v)) ++roots;
  return roots;
}

/* Sorted (out-degree, in-degree) profile; differing profiles certify
   non-isomorphism. */
inline bool degree_profiles_differ(const pathhom::DiGraph& x,
                                   const pathhom::DiGraph& y) {
  auto profile = [](const pathhom::DiGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> p;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      p.emplace_back(g.out(static_cast<int>(v)).size(),
                     g.in(static_cast<int>(v)).size());
    std::sort(p.begin(), p.end());
    return p;
  };
  return profile(x) != profile(y);
}

/* Every digraph on 1..max_vertices labeled vertices. */
inline std::vector<pathhom::DiGraph> all_digraphs_up_to(int max_vertices) {
  std::vector<pathhom::DiGraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::string> verts;
    for (int v = 0; v < n; ++v) verts.push_back(std::to_string(v));
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) slots.emplace_back(u, v);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size());
         ++bits) {
      std::vector<std::pair<std::string, std::string>> edges;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (bits >> s & 1)
          edges.emplace_back(std::to_string(slots[s].first),
                             std::to_string(slots[s].second));
      out.emplace_back(verts, edges);
    }
  }
  return out;
}

/* Universal property of a pushout square, checked exhaustively against all
   cocones into every test graph of at most max_test_vertices vertices: the
   square commutes, and for every pair of maps u: X -> T, w: B -> T agreeing
   on A, the vertex assignment they force on Y is a valid graph map (it is
   automatically the unique candidate, since the corners cover Y's
   vertices). */
inline bool verify_pushout_universal(const pathhom::PushoutSquare& sq,
                                     int max_test_vertices = 3) {
  const pathhom::DiGraph& x = sq.inclusion.parent();
  const pathhom::DiGraph& b = sq.attaching.codomain();
  const pathhom::DiGraph& y = sq.result;
  const auto a_ind = sq.inclusion.induced();

  for (const auto& l : a_ind.labels())
    if (sq.corner_x.apply_label(l) !=
        sq.corner_b.apply_label(sq.attaching.apply_label(l)))
      return false;  // square does not commute

  int nx = static_cast<int>(x.num_vertices());
  int nb = static_cast<int>(b.num_vertices());
  std::vector<int> a_idx;  // indices into X of subgraph members
  for (int v : sq.inclusion.members()) a_idx.push_back(v);

  for (const auto& t : all_digraphs_up_to(max_test_vertices)) {
    int nt = static_cast<int>(t.num_vertices());
    std::vector<int> u(nx, 0);
    while (true) {
      if (pathhom::valid_vertex_map(x, t, u)) {
        /* w is forced on the image of A; free elsewhere */
        std::vector<int> forced(nb, -1);
        bool consistent = true;
        for (int av : a_idx) {
          auto bi = b.index_of(sq.attaching.apply_label(x.label(av)));
          if (forced[*bi] >= 0 && forced[*bi] != u[av]) consistent = false;
          forced[*bi] = u[av];
        }
        if (consistent) {
          std::vector<int> free_slots;
          for (int v = 0; v < nb; ++v)
            if (forced[v] < 0) free_slots.push_back(v);
          std::vector<int> w = forced;
          std::vector<int> choice(free_slots.size(), 0);
          while (true) {
            for (std::size_t s = 0; s < free_slots.size(); ++s)
              w[free_slots[s]] = choice[s];
            if (pathhom::valid_vertex_map(b, t, w)) {
              /* forced mediating map on Y */
              std::vector<int> med(y.num_vertices(), -1);
              for (int v = 0; v < nx; ++v) {
                auto yi = y.index_of(sq.corner_x.apply_label(x.label(v)));
                med[*yi] = u[v];
              }
              for (int v = 0; v < nb; ++v) {
                auto yi = y.index_of(sq.corner_b.apply_label(b.label(v)));
                if (med[*yi] >= 0 && med[*yi] != w[v]) return false;
                med[*yi] = w[v];
              }
              for (auto mv : med)
                if (mv < 0) return false;  // corners fail to cover Y
              if (!pathhom::valid_vertex_map(y, t, med)) return false;
            }
            std::size_t s = 0;
            while (s < choice.size() && ++choice[s] == nt) choice[s++] = 0;
            if (s == choice.size() && !choice.empty()) break;
            if (choice.empty()) break;
          }
        }
      }
      int s = 0;
      while (s < nx && ++u[s] == nt) u[s++] = 0;
      if (s == nx) break;
    }
  }
  return true;
}

}  // namespace oracle
