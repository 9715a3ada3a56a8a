#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cohconf/action.hpp"
#include "cohconf/configuration.hpp"

namespace cohconf {

// Subset of configuration classes, bit k = class k.
using ClassSet = std::uint32_t;

// Support-level product: union over i in X, j in Y of {k : a_ijk > 0}.
ClassSet complex_product(const CoherentConfiguration& cc, ClassSet X, ClassSet Y);

// arcs[i] = classes forced into any complex-idempotent containing class i:
// the support of {i} (.) {i}, the transpose class, saturated by
// j in {i} (.) {k} whenever k is already forced.
std::vector<ClassSet> implication_graph(const CoherentConfiguration& cc);

// All nonzero X with X (.) X = X, sorted by (popcount, value). Enumeration runs
// over subsets containing class 0, transpose-closed and consistent with their
// implication closure; these filters are consequences of the subgroup
// correspondence.  Refuses more than 26 classes unless force is set.
std::vector<ClassSet> idempotents(const CoherentConfiguration& cc, bool force = false);

struct SubgroupDescriptor {
  ClassSet classes = 0;
  Rational index_in_g;          // |G| / |H| as a ratio of sphere-size sums
  std::vector<long> coset_sizes;  // sphere sizes of the involved classes
  std::optional<Integer> order;   // |B| x sum of involved sphere sizes
  std::vector<Permutation> generators;
};

struct SubgroupPoset {
  std::vector<SubgroupDescriptor> subgroups;      // aligned with the idempotent list
  std::vector<std::pair<int, int>> hasse;         // (lower, upper) cover pairs
};

// Orders and generators are filled in when the originating action and
// stabilizer data are supplied.
SubgroupPoset subgroup_poset(const CoherentConfiguration& cc, const std::vector<ClassSet>& idems,
                             const PermutationAction* action = nullptr,
                             const StabilizerData* stab = nullptr);

}  // namespace cohconf
