#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathhom/digraph.hpp"

namespace pathhom {

/* Vertex tuple with no two consecutive entries equal; degree = size - 1.
   Vertices are indices into a fixed ambient graph. */
using RegularPath = std::vector<int>;

template <class E>
using Chain = std::map<RegularPath, E>;

std::string path_label(const DiGraph& g, const RegularPath& p);

/* Directed walks of length n, each step an edge, in lexicographic vertex
   order. Degree 0 lists the vertices. */
std::vector<RegularPath> allowed_paths(const DiGraph& g, int n);

bool is_allowed(const DiGraph& g, const RegularPath& p);

template <class K>
void chain_add(const K& k, Chain<typename K::Elem>& c, const RegularPath& p,
               const typename K::Elem& coeff) {
  if (k.is_zero(coeff)) return;
  auto [it, inserted] = c.try_emplace(p, coeff);
  if (!inserted) {
    it->second = k.add(it->second, coeff);
    if (k.is_zero(it->second)) c.erase(it);
  }
}

template <class K>
Chain<typename K::Elem> chain_scaled(const K& k,
                                     const Chain<typename K::Elem>& c,
                                     const typename K::Elem& s) {
  Chain<typename K::Elem> out;
  for (const auto& [p, coeff] : c) chain_add(k, out, p, k.mul(coeff, s));
  return out;
}

template <class K>
Chain<typename K::Elem> chain_sum(const K& k, Chain<typename K::Elem> a,
                                  const Chain<typename K::Elem>& b) {
  for (const auto& [p, coeff] : b) chain_add(k, a, p, coeff);
  return a;
}

template <class K>
Chain<typename K::Elem> chain_neg(const K& k,
                                  const Chain<typename K::Elem>& c) {
  Chain<typename K::Elem> out;
  for (const auto& [p, coeff] : c) out.emplace(p, k.neg(coeff));
  return out;
}

/* Alternating face sum; a face with two equal consecutive vertices is zero
   in the regular quotient and is dropped. */
template <class K>
Chain<typename K::Elem> regular_boundary(const K& k,
                                         const Chain<typename K::Elem>& c) {
  Chain<typename K::Elem> out;
  for (const auto& [p, coeff] : c) {
    if (p.size() < 2)
      throw std::invalid_argument("boundary needs degree >= 1");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0 && i + 1 < p.size() && p[i - 1] == p[i + 1]) continue;
      RegularPath face;
      face.reserve(p.size() - 1);
      for (std::size_t j = 0; j < p.size(); ++j)
        if (j != i) face.push_back(p[j]);
      chain_add(k, out, face, i % 2 == 0 ? coeff : k.neg(coeff));
    }
  }
  return out;
}

}  // namespace pathhom
