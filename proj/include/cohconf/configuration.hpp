#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cohconf/action.hpp"
#include "cohconf/algebra.hpp"
#include "cohconf/geometry.hpp"
#include "cohconf/graph.hpp"

namespace cohconf {

struct VerifyFailure {
  std::string check;    // e.g. "count != dim"
  std::string witness;  // e.g. "count 3 != dim 5"
};

class VerifyError : public Error {
 public:
  explicit VerifyError(std::vector<VerifyFailure> failures);
  const std::vector<VerifyFailure>& failures() const { return failures_; }
  bool has_check(const std::string& name) const;

 private:
  std::vector<VerifyFailure> failures_;
};

// A verified coherent configuration: 0/1 classes with A_0 = I summing to J,
// transpose-closed, with a nonnegative-integer intersection tensor, each
// class expressed over the adjacency algebra's monomial basis.
class CoherentConfiguration {
 public:
  std::size_t class_count() const { return classes_.size(); }
  std::size_t vertex_count() const { return n_; }
  const std::vector<RatMatrix>& classes() const { return classes_; }
  const RatMatrix& cls(std::size_t i) const { return classes_[i]; }

  long intersection(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * classes_.size() + j) * classes_.size() + k];
  }
  const std::vector<std::size_t>& transpose_perm() const { return transpose_perm_; }
  const std::vector<std::vector<Rational>>& expressions() const { return expressions_; }
  const std::vector<Word>& basis_words() const { return basis_words_; }
  const std::vector<long>& sphere_sizes() const { return sphere_sizes_; }

  // The unique i with (A_i)_{x,y} = 1.
  std::size_t class_of(int x, int y) const { return class_of_[x * n_ + y]; }

  std::string expression_text(std::size_t i) const;

  // Literal re-check of the configuration axioms.
  bool recheck_axioms() const;

  friend CoherentConfiguration verify_architecture(const EdgeColouredGraph& g,
                                                   const AlgebraBasis& ab,
                                                   std::vector<RatMatrix> candidates);

 private:
  CoherentConfiguration() = default;
  std::size_t n_ = 0;
  std::vector<RatMatrix> classes_;
  std::vector<long> tensor_;
  std::vector<std::size_t> transpose_perm_;
  std::vector<std::vector<Rational>> expressions_;
  std::vector<Word> basis_words_;
  std::vector<long> sphere_sizes_;
  std::vector<std::uint16_t> class_of_;
};

// Checks the architecture axioms on a candidate class list: 0/1 entries,
// supports partitioning J, identity present, membership in the algebra span,
// linear independence, count = dim, transpose closure. All failures are
// collected and reported by name with a witness.
CoherentConfiguration verify_architecture(const EdgeColouredGraph& g, const AlgebraBasis& ab,
                                          std::vector<RatMatrix> candidates);

// Classes built from the B-orbit structure of a strongly transitive action:
// the row of class k at vertex v is the image of the k-th B-orbit under the
// transversal element carrying the base point to v. Throws when the action is
// not strongly transitive. Class order: base-point orbit first, then by least
// orbit element.
CoherentConfiguration architecture_from_action(const EdgeColouredGraph& g,
                                               const PermutationAction& a, const AlgebraBasis& ab,
                                               int base_point = 0);

// Distance matrices submitted to verify_architecture; succeeds exactly for
// distance-regular graphs.
CoherentConfiguration distance_regular_architecture(const EdgeColouredGraph& g);

// Seven flag-pair relative positions of an affine plane, in the order
// I, T1, T2, T1T2, T2T1, T1T2T1, T2T1T2 - T1T2T1.
std::vector<RatMatrix> canonical_affine_architecture(const LineSpace& ls, const ChamberSystem& cs);

// Six flag-pair relative positions of a projective plane, in the order
// I, T1, T2, T1T2, T2T1, T1T2T1.
std::vector<RatMatrix> canonical_projective_architecture(const LineSpace& ls,
                                                         const ChamberSystem& cs);

// Seven ordered-pair relative positions of a clique plane, in the order
// I, T1, T2, T1T2, T2T1, T1T2T1, T2T1T2 - T1T2T1.
std::vector<RatMatrix> canonical_clique_architecture(const LineSpace& ls, const ChamberSystem& cs);

// The published monomial labelling of the Petersen chamber-system classes.
std::vector<RelationPolynomial> petersen_class_expressions();

// Candidates evaluated from petersen_class_expressions over the algebra.
std::vector<RatMatrix> canonical_petersen_architecture(const AlgebraBasis& ab);

// Counting interpretation of the intersection numbers: for (x, z) in class k,
// the number of y with (x, y) in class i and (y, z) in class j is a_{ijk}.
// Exhaustive up to exhaustive_limit vertices, then seeded sampling.
bool cross_check_intersection_tensor(const CoherentConfiguration& cc, std::uint64_t seed,
                                     int exhaustive_limit = 60, int samples_per_class = 50);

enum class LabelDirection { FromBase, ToBase };

struct SphereLabelling {
  int base;
  std::vector<std::size_t> labels;
};

SphereLabelling sphere_labels(const CoherentConfiguration& cc, int x0,
                              LabelDirection dir = LabelDirection::FromBase);

struct AffineMultiplicities {
  long n0, n1, n2, n3;
};

// Module multiplicities of the chamber system of an affine plane of order q,
// recovered from measured nullities; throws when the measurements are
// inconsistent with an affine plane.
AffineMultiplicities affine_multiplicities(const EdgeColouredGraph& g, long q);

struct SpectrumReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool all_ok = true;
};

// Annihilating polynomial and eigenvalue multiplicities of the uncoloured
// adjacency matrix T1 + T2 of an affine-plane chamber system of order q.
SpectrumReport affine_spectrum_certificate(const EdgeColouredGraph& g, long q);

}  // namespace cohconf
