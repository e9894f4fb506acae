#include "pathhom/paths.hpp"

namespace pathhom {

std::string path_label(const DiGraph& g, const RegularPath& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '.';
    out += g.label(p[i]);
  }
  return out;
}

bool is_allowed(const DiGraph& g, const RegularPath& p) {
  if (p.empty()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return true;
}

std::vector<RegularPath> allowed_paths(const DiGraph& g, int n) {
  if (n < 0) throw std::invalid_argument("negative path degree");
  std::vector<RegularPath> out;
  RegularPath cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n + 1) {
      out.push_back(cur);
      return;
    }
    if (cur.empty()) {
      for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
        cur.push_back(v);
        self(self);
        cur.pop_back();
      }
    } else {
      for (int w : g.out(cur.back())) {
        cur.push_back(w);
        self(self);
        cur.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

}  // namespace pathhom
