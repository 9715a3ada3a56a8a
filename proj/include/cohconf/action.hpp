#pragma once

#include <vector>

#include "cohconf/algebra.hpp"
#include "cohconf/graph.hpp"
#include "cohconf/rational.hpp"

namespace cohconf {

// Image array over 0..m-1.
using Permutation = std::vector<int>;

Permutation identity_perm(int degree);
bool is_identity(const Permutation& p);
// (a after b): result[x] = a[b[x]].
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse_perm(const Permutation& p);
void validate_permutation(const Permutation& p);

class PermutationAction {
 public:
  PermutationAction(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

 private:
  int degree_;
  std::vector<Permutation> generators_;
};

// Orbits of the generated group; orbits listed by least element (seeds, when
// given, are expanded first in the given order), members sorted.
std::vector<std::vector<int>> orbit_partition(const PermutationAction& a,
                                              const std::vector<int>& seeds = {});

struct StabilizerData {
  int base_point = 0;
  std::vector<int> orbit;  // BFS discovery order, orbit[0] == base_point
  // transversal_words[v]: generator indices g_{i1},...,g_{ik} with the
  // composite g_{ik} o ... o g_{i1} mapping base_point to v; empty when v is
  // outside the orbit (check orbit membership via in_orbit).
  std::vector<std::vector<int>> transversal_words;
  std::vector<char> in_orbit;
  // Deduplicated Schreier generators; empty for the trivial stabilizer.
  std::vector<Permutation> stabilizer_generators;
};

StabilizerData stabilizer(const PermutationAction& a, int x0);

// Recomposes the stored transversal word at v.
Permutation transversal_perm(const PermutationAction& a, const StabilizerData& s, int v);

// Order of the generated group via a recursive orbit-stabilizer chain.
Integer group_order(const PermutationAction& a);

bool is_colour_preserving(const PermutationAction& a, const EdgeColouredGraph& g);

struct StrongTransitivityReport {
  bool transitive = false;
  std::size_t b_orbit_count = 0;
  std::size_t algebra_dim = 0;
  bool strongly_transitive = false;
};

// Requires a colour-preserving action; the B-orbit count is taken at base_point.
StrongTransitivityReport strong_transitivity_report(const EdgeColouredGraph& g,
                                                    const PermutationAction& a,
                                                    const AlgebraBasis& ab, int base_point = 0);

// Vertices are the group elements in BFS order from the identity; an edge of
// colour i joins x and s_i x. Generators must be distinct non-identity
// permutations, and involutions when involution_check is set.
EdgeColouredGraph cayley_graph(const std::vector<Permutation>& generators, bool involution_check);

}  // namespace cohconf
