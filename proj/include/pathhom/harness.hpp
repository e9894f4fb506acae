#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pathhom/cofib.hpp"
#include "pathhom/digraph.hpp"

namespace pathhom {

/* Shape of one randomized instance. max_degree is the homological cutoff
   used wherever the suite computes homology; graph size is controlled by
   vertex_budget and edge_density alone. */
struct InstanceSpec {
  std::uint64_t seed = 0;
  int vertex_budget = 6;
  double edge_density = 0.35;
  int max_degree = 4;
};

/* Splitmix64 finalizer over master and salt; child streams are decorrelated
   from the parent stream and from each other. */
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt);

/* Deterministic draws built on mt19937_64 raw bits only; std distributions
   are avoided because their outputs differ across standard libraries. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t bits() { return eng_(); }
  int below(int n);       // uniform in [0, n); requires n >= 1
  bool chance(double p);  // true with probability p in [0, 1]

 private:
  std::mt19937_64 eng_;
};

/* Erdos-Renyi-style digraph on the budget, self-pairs excluded, vertices
   labeled "0".."n-1". Throws on budget < 1. */
DiGraph random_digraph(const InstanceSpec& spec);

/* Connected tree on the budget with each edge oriented independently. */
DiGraph random_oriented_tree(const InstanceSpec& spec);

struct CofibInstance {
  DiGraph x;
  std::vector<std::string> a_members;
  CofibVerdict verdict;   // always a verified cofibration
  bool fallback = false;  // layered construction used after rejection failed
};

/* Rejection sampling: A is the forward closure of a random seed set inside a
   random digraph (successor-closed, hence no edges out), accepted iff
   check_cofibration passes; bounded retries, then the layered fallback.
   (X, empty) is a valid outcome. */
CofibInstance random_cofibration(const InstanceSpec& spec);

/* Random base graph plus layered fresh vertices, each attached by a single
   out-edge toward the current graph; single out-edges force unique closest
   vertices, so the pair is a cofibration by construction (still re-checked).
   The relative homology of such a pair vanishes; the axiom suite re-verifies
   that up to the cutoff when it needs acyclicity. */
CofibInstance random_layered_cofibration(const InstanceSpec& spec);

/* Pushout of a random cofibration along a random attaching map obtained by
   merging vertex classes of A and adjoining fresh vertices and edges. */
PushoutSquare random_pushout_square(const InstanceSpec& spec);

/* Square whose attaching map is a homology isomorphism by construction:
   identity, collapse of a tree base to a point, or the zigzag projection
   B box J -> B. Consumers re-verify the isomorphism at runtime rather than
   trusting the construction. */
struct ProperInstance {
  PushoutSquare square;
  std::string flavor;
};
ProperInstance random_proper_square(const InstanceSpec& spec);

/* Inner random cofibration presented as a retract of its box product with
   I1: section x -> (x,0), retraction (x,i) -> x. */
RetractDiagram random_retract(const InstanceSpec& spec);

struct AxiomCheck {
  std::string name;
  int attempted = 0;
  int passed = 0;
  bool ok = false;
  std::string note;
  std::vector<std::string> failures;  // one line per counterexample
};

struct AxiomReport {
  InstanceSpec spec;
  int instances = 0;
  std::vector<AxiomCheck> checks;
  bool ok = false;
};

/* Finite-instance checks of the cofibration-category axioms over exact
   rational coefficients, `instances` seeded instances per check, child seeds
   derived from spec.seed and the instance index. Homological claims are
   checked up to spec.max_degree, which every report records. */
AxiomReport axiom_suite(const InstanceSpec& spec, int instances);

}  // namespace pathhom
