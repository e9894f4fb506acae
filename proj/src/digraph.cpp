#include "pathhom/digraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace pathhom {

DiGraph::DiGraph(std::vector<std::string> vertices,
                 const std::vector<std::pair<std::string, std::string>>& edges,
                 std::vector<std::string>* warnings) {
  labels_ = std::move(vertices);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate vertex label: " + labels_[i]);
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [us, vs] : edges) {
    auto ui = index_.find(us), vi = index_.find(vs);
    if (ui == index_.end())
      throw std::invalid_argument("edge endpoint is not a vertex: " + us);
    if (vi == index_.end())
      throw std::invalid_argument("edge endpoint is not a vertex: " + vs);
    if (ui->second == vi->second) {
      if (warnings)
        warnings->push_back("dropped self-edge on vertex " + us);
      continue;
    }
    if (!seen.emplace(ui->second, vi->second).second) {
      if (warnings)
        warnings->push_back("collapsed duplicate edge " + us + " -> " + vs);
      continue;
    }
  }
  edges_.assign(seen.begin(), seen.end());
  out_.resize(labels_.size());
  in_.resize(labels_.size());
  for (auto [u, v] : edges_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& a : in_) std::sort(a.begin(), a.end());
}

std::optional<int> DiGraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool DiGraph::has_edge(int u, int v) const {
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<std::pair<std::string, std::string>> DiGraph::edge_labels() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edges_.size());
  for (auto [u, v] : edges_) out.emplace_back(labels_[u], labels_[v]);
  return out;
}

GraphMap::GraphMap(DiGraph domain, DiGraph codomain,
                   const std::map<std::string, std::string>& vertex_map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  map_.resize(domain_.num_vertices());
  for (std::size_t v = 0; v < domain_.num_vertices(); ++v) {
    auto it = vertex_map.find(domain_.label(v));
    if (it == vertex_map.end())
      throw std::invalid_argument("vertex map misses vertex " +
                                  domain_.label(v));
    auto w = codomain_.index_of(it->second);
    if (!w)
      throw std::invalid_argument("vertex map target is not a vertex: " +
                                  it->second);
    map_[v] = *w;
  }
  if (!valid_vertex_map(domain_, codomain_, map_))
    throw std::invalid_argument(
        "vertex map does not send edges to edges or equal vertices");
}

const std::string& GraphMap::apply_label(const std::string& v) const {
  auto i = domain_.index_of(v);
  if (!i) throw std::invalid_argument("not a domain vertex: " + v);
  return codomain_.label(map_[*i]);
}

GraphMap GraphMap::identity(const DiGraph& g) {
  std::map<std::string, std::string> m;
  for (const auto& l : g.labels()) m.emplace(l, l);
  return GraphMap(g, g, m);
}

GraphMap GraphMap::constant(const DiGraph& domain, const DiGraph& codomain,
                            const std::string& target) {
  std::map<std::string, std::string> m;
  for (const auto& l : domain.labels()) m.emplace(l, target);
  return GraphMap(domain, codomain, m);
}

bool valid_vertex_map(const DiGraph& domain, const DiGraph& codomain,
                      const std::vector<int>& map) {
  for (auto [u, v] : domain.edges()) {
    if (map[u] == map[v]) continue;
    if (!codomain.has_edge(map[u], map[v])) return false;
  }
  return true;
}

GraphMap compose(const GraphMap& g, const GraphMap& f) {
  std::map<std::string, std::string> m;
  for (const auto& l : f.domain().labels())
    m.emplace(l, g.apply_label(f.apply_label(l)));
  return GraphMap(f.domain(), g.codomain(), m);
}

VertexSubset::VertexSubset(DiGraph parent,
                           const std::vector<std::string>& members)
    : parent_(std::move(parent)) {
  member_mask_.assign(parent_.num_vertices(), false);
  for (const auto& l : members) {
    auto i = parent_.index_of(l);
    if (!i) throw std::invalid_argument("subset member is not a vertex: " + l);
    if (!member_mask_[*i]) {
      member_mask_[*i] = true;
      members_.push_back(*i);
    }
  }
  std::sort(members_.begin(), members_.end());
}

std::vector<std::string> VertexSubset::member_labels() const {
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (int v : members_) out.push_back(parent_.label(v));
  return out;
}

static DiGraph induced_on(const DiGraph& g, const std::vector<bool>& keep) {
  std::vector<std::string> verts;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (keep[v]) verts.push_back(g.label(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : g.edges())
    if (keep[u] && keep[v]) edges.emplace_back(g.label(u), g.label(v));
  return DiGraph(std::move(verts), edges);
}

DiGraph VertexSubset::induced() const { return induced_on(parent_, member_mask_); }

DiGraph VertexSubset::complement_graph() const {
  auto keep = member_mask_;
  keep.flip();
  return induced_on(parent_, keep);
}

DiGraph induced_subgraph(const DiGraph& x,
                         const std::vector<std::string>& members) {
  return VertexSubset(x, members).induced();
}

DiGraph complement(const DiGraph& x, const std::vector<std::string>& removed) {
  return VertexSubset(x, removed).complement_graph();
}

DiGraph gen_line(int n) {
  if (n < 0) throw std::invalid_argument("gen_line needs n >= 0");
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i <= n; ++i) verts.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    edges.emplace_back(std::to_string(i), std::to_string(i + 1));
  return DiGraph(std::move(verts), edges);
}

DiGraph gen_cycle(int n) {
  if (n < 1) throw std::invalid_argument("gen_cycle needs n >= 1");
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) verts.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    edges.emplace_back(std::to_string(i), std::to_string((i + 1) % n));
  return DiGraph(std::move(verts), edges);
}

DiGraph gen_alt_cycle(int two_k) {
  if (two_k < 2 || two_k % 2 != 0)
    throw std::invalid_argument("gen_alt_cycle needs an even order >= 2");
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < two_k; ++i) verts.push_back(std::to_string(i));
  for (int i = 0; i < two_k; i += 2) {
    edges.emplace_back(std::to_string(i), std::to_string((i + 1) % two_k));
    edges.emplace_back(std::to_string(i),
                       std::to_string((i + two_k - 1) % two_k));
  }
  return DiGraph(std::move(verts), edges);
}

DiGraph gen_mn_cycle(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1)
    throw std::invalid_argument("gen_mn_cycle needs m,n >= 0 and m+n >= 1");
  if (n == 0) return gen_cycle(m);
  if (m == 0) {
    auto c = gen_cycle(n);
    std::vector<std::pair<std::string, std::string>> rev;
    for (const auto& [u, v] : c.edge_labels()) rev.emplace_back(v, u);
    return DiGraph(c.labels(), rev);
  }
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  int total = m + n;
  for (int i = 0; i < total; ++i) verts.push_back(std::to_string(i));
  for (int i = 0; i < m; ++i)
    edges.emplace_back(std::to_string(i), std::to_string(i + 1));
  for (int i = m; i < total - 1; ++i)
    edges.emplace_back(std::to_string(i + 1), std::to_string(i));
  edges.emplace_back("0", std::to_string(total - 1));
  return DiGraph(std::move(verts), edges);
}

DiGraph gen_J() {
  return DiGraph({"-2", "-1", "0", "1", "2"},
                 {{"-1", "-2"}, {"-1", "0"}, {"1", "0"}, {"1", "2"}});
}

DiGraph gen_complete(const std::vector<std::string>& labels) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& u : labels)
    for (const auto& v : labels)
      if (u != v) edges.emplace_back(u, v);
  return DiGraph(labels, edges);
}

DiGraph gen_suspension_alt4() {
  std::vector<std::pair<std::string, std::string>> edges = {
      {"0", "1"}, {"2", "1"}, {"2", "3"}, {"0", "3"}};
  for (const auto& apex : {"a", "b"})
    for (int i = 0; i < 4; ++i)
      edges.emplace_back(apex, std::to_string(i));
  return DiGraph({"a", "0", "1", "2", "3", "b"}, edges);
}

DiGraph gen_punctured_cube() {
  auto i2 = gen_line(2);
  auto cube = box_product(box_product(i2, i2), i2);
  return complement(cube, {"((1,1),1)"});
}

DiGraph box_product(const DiGraph& x, const DiGraph& y) {
  auto name = [&](int xv, int yv) {
    return "(" + x.label(xv) + "," + y.label(yv) + ")";
  };
  std::vector<std::string> verts;
  for (std::size_t xv = 0; xv < x.num_vertices(); ++xv)
    for (std::size_t yv = 0; yv < y.num_vertices(); ++yv)
      verts.push_back(name(static_cast<int>(xv), static_cast<int>(yv)));
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : x.edges())
    for (std::size_t yv = 0; yv < y.num_vertices(); ++yv)
      edges.emplace_back(name(u, static_cast<int>(yv)),
                         name(v, static_cast<int>(yv)));
  for (std::size_t xv = 0; xv < x.num_vertices(); ++xv)
    for (auto [u, v] : y.edges())
      edges.emplace_back(name(static_cast<int>(xv), u),
                         name(static_cast<int>(xv), v));
  return DiGraph(std::move(verts), edges);
}

DiGraph disjoint_union(const DiGraph& x, const DiGraph& y) {
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& l : x.labels()) verts.push_back("L:" + l);
  for (const auto& l : y.labels()) verts.push_back("R:" + l);
  for (const auto& [u, v] : x.edge_labels())
    edges.emplace_back("L:" + u, "L:" + v);
  for (const auto& [u, v] : y.edge_labels())
    edges.emplace_back("R:" + u, "R:" + v);
  return DiGraph(std::move(verts), edges);
}

namespace {

struct IsoSearch {
  const DiGraph& x;
  const DiGraph& y;
  std::vector<int> map;      // x vertex -> y vertex or -1
  std::vector<bool> used;    // y vertex taken
  std::vector<int> order;    // x vertices, rarest profile first

  bool consistent(int xv, int yv) const {
    for (std::size_t u = 0; u < x.num_vertices(); ++u) {
      int w = map[u];
      if (w < 0) continue;
      if (x.has_edge(xv, static_cast<int>(u)) != y.has_edge(yv, w)) return false;
      if (x.has_edge(static_cast<int>(u), xv) != y.has_edge(w, yv)) return false;
    }
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == order.size()) return true;
    int xv = order[pos];
    for (std::size_t yv = 0; yv < y.num_vertices(); ++yv) {
      if (used[yv]) continue;
      if (y.out(static_cast<int>(yv)).size() != x.out(xv).size()) continue;
      if (y.in(static_cast<int>(yv)).size() != x.in(xv).size()) continue;
      if (!consistent(xv, static_cast<int>(yv))) continue;
      map[xv] = static_cast<int>(yv);
      used[yv] = true;
      if (extend(pos + 1)) return true;
      map[xv] = -1;
      used[yv] = false;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const DiGraph& x, const DiGraph& y) {
  if (x.num_vertices() != y.num_vertices() || x.num_edges() != y.num_edges())
    return false;
  auto profile = [](const DiGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> p;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      p.emplace_back(g.out(static_cast<int>(v)).size(),
                     g.in(static_cast<int>(v)).size());
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(x) != profile(y)) return false;

  IsoSearch s{x, y, std::vector<int>(x.num_vertices(), -1),
              std::vector<bool>(y.num_vertices(), false), {}};
  s.order.resize(x.num_vertices());
  for (std::size_t v = 0; v < x.num_vertices(); ++v)
    s.order[v] = static_cast<int>(v);
  /* high-degree vertices first: fewer candidates, earlier pruning */
  std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    auto da = x.out(a).size() + x.in(a).size();
    auto db = x.out(b).size() + x.in(b).size();
    if (da != db) return da > db;
    return a < b;
  });
  return s.extend(0);
}

Heights heights(const VertexSubset& a) {
  const DiGraph& x = a.parent();
  Heights out;
  out.h.assign(x.num_vertices(), std::nullopt);
  std::deque<int> queue;
  for (int v : a.members()) {
    out.h[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : x.in(v)) {
      if (out.h[u]) continue;
      out.h[u] = *out.h[v] + 1;
      queue.push_back(u);
    }
  }
  for (std::size_t v = 0; v < x.num_vertices(); ++v)
    if (out.h[v]) out.reaching.push_back(static_cast<int>(v));
  return out;
}

PushoutSquare pushout(const VertexSubset& a_in_x, const GraphMap& f) {
  const DiGraph& x = a_in_x.parent();
  const DiGraph& b = f.codomain();
  if (!(f.domain() == a_in_x.induced()))
    throw std::invalid_argument(
        "attaching map domain differs from the induced subgraph");

  auto xname = [&](int v) { return "X:" + x.label(v); };
  auto bname = [&](const std::string& l) { return "B:" + l; };
  /* image of an X vertex in Y, by label */
  auto yimage = [&](int v) {
    return a_in_x.contains(v) ? bname(f.apply_label(x.label(v))) : xname(v);
  };

  std::vector<std::string> verts;
  for (std::size_t v = 0; v < x.num_vertices(); ++v)
    if (!a_in_x.contains(static_cast<int>(v)))
      verts.push_back(xname(static_cast<int>(v)));
  for (const auto& l : b.labels()) verts.push_back(bname(l));
  std::sort(verts.begin(), verts.end());

  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : b.edge_labels())
    edges.emplace(bname(u), bname(v));
  for (auto [u, v] : x.edges()) {
    bool ua = a_in_x.contains(u), va = a_in_x.contains(v);
    if (ua && va) continue;  // already present through f and B's edges
    if (yimage(u) != yimage(v)) edges.emplace(yimage(u), yimage(v));
  }
  DiGraph y(verts, {edges.begin(), edges.end()});

  std::map<std::string, std::string> corner_b_map, corner_x_map;
  for (const auto& l : b.labels()) corner_b_map.emplace(l, bname(l));
  for (std::size_t v = 0; v < x.num_vertices(); ++v)
    corner_x_map.emplace(x.label(v), yimage(static_cast<int>(v)));

  return PushoutSquare{a_in_x, f, y, GraphMap(b, y, corner_b_map),
                       GraphMap(x, y, corner_x_map)};
}

}  // namespace pathhom
