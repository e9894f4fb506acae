#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pathhom {

/* Finite simple digraph: ordered vertex list, irreflexive edge set with at
   most one edge per ordered pair. Immutable after construction. */
class DiGraph {
 public:
  DiGraph() = default;

  /* Unknown endpoints and duplicate vertex labels throw. Self-edges are
     dropped and duplicate edges collapsed, each with a warning appended to
     *warnings when given. */
  DiGraph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges,
          std::vector<std::string>* warnings = nullptr);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  std::optional<int> index_of(const std::string& label) const;
  bool has_edge(int u, int v) const;
  /* Sorted by (source, target) vertex index. */
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& out(int u) const { return out_[u]; }
  const std::vector<int>& in(int v) const { return in_[v]; }

  std::vector<std::pair<std::string, std::string>> edge_labels() const;

  bool operator==(const DiGraph& o) const {
    return labels_ == o.labels_ && edges_ == o.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> out_, in_;
};

/* Vertex-total digraph map: every edge u->v satisfies f(u) = f(v) or
   f(u)->f(v) an edge of the codomain; enforced at construction. */
class GraphMap {
 public:
  GraphMap(DiGraph domain, DiGraph codomain,
           const std::map<std::string, std::string>& vertex_map);

  const DiGraph& domain() const { return domain_; }
  const DiGraph& codomain() const { return codomain_; }
  int apply(int v) const { return map_[v]; }
  const std::string& apply_label(const std::string& v) const;

  static GraphMap identity(const DiGraph& g);
  static GraphMap constant(const DiGraph& domain, const DiGraph& codomain,
                           const std::string& target);

 private:
  DiGraph domain_, codomain_;
  std::vector<int> map_;
};

/* True iff mapping each domain vertex i to codomain vertex map[i] satisfies
   the graph-map condition; used for rejection sampling before construction. */
bool valid_vertex_map(const DiGraph& domain, const DiGraph& codomain,
                      const std::vector<int>& map);

GraphMap compose(const GraphMap& g, const GraphMap& f);  // g after f

/* Members of an induced subgraph, with the ambient graph kept alongside. */
class VertexSubset {
 public:
  VertexSubset(DiGraph parent, const std::vector<std::string>& members);

  const DiGraph& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }  // sorted
  bool contains(int v) const { return member_mask_[v]; }
  std::vector<std::string> member_labels() const;

  DiGraph induced() const;
  DiGraph complement_graph() const;  // induced on parent minus members

 private:
  DiGraph parent_;
  std::vector<int> members_;
  std::vector<bool> member_mask_;
};

DiGraph gen_line(int n);
DiGraph gen_cycle(int n);
DiGraph gen_alt_cycle(int two_k);
DiGraph gen_mn_cycle(int m, int n);
DiGraph gen_J();
DiGraph gen_complete(const std::vector<std::string>& labels);
DiGraph gen_suspension_alt4();
DiGraph gen_punctured_cube();

/* Vertices X_V x Y_V labeled "(x,y)"; edges move along one axis. */
DiGraph box_product(const DiGraph& x, const DiGraph& y);

DiGraph induced_subgraph(const DiGraph& x, const std::vector<std::string>& members);
DiGraph complement(const DiGraph& x, const std::vector<std::string>& removed);

/* Coproduct with labels tagged "L:<x>" / "R:<y>". */
DiGraph disjoint_union(const DiGraph& x, const DiGraph& y);

/* Backtracking search with in/out-degree profile pruning; intended for
   graphs of at most ~30 vertices. */
bool is_isomorphic(const DiGraph& x, const DiGraph& y);

/* Heights with respect to an induced subgraph A: h(a) = 0 on A, else the
   length of a shortest directed path into A; unreachable is explicit. */
struct Heights {
  std::vector<std::optional<int>> h;  // indexed by parent vertex
  std::vector<int> reaching;          // X^A: finite-height vertices, sorted
};

Heights heights(const VertexSubset& a);

/* Pushout of X <- A -> B along the inclusion of an induced subgraph.
   Y keeps (X - A) + B with labels "X:<x>" / "B:<b>", sorted canonically. */
struct PushoutSquare {
  VertexSubset inclusion;  // A inside X
  GraphMap attaching;      // f : A -> B, domain equal to inclusion.induced()
  DiGraph result;          // Y
  GraphMap corner_b;       // B -> Y
  GraphMap corner_x;       // X -> Y
};

PushoutSquare pushout(const VertexSubset& a_in_x, const GraphMap& f);

}  // namespace pathhom
