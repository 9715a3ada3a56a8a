#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohconf/matrix.hpp"
#include "cohconf/span.hpp"
#include "cohconf/word.hpp"

namespace cohconf {

struct Term {
  Rational coeff;
  Word word;
};

// A noncommutative polynomial in the generators, stored as lhs - rhs of an
// identity. Terms are kept sorted by word, with no duplicates or zero
// coefficients.
class RelationPolynomial {
 public:
  RelationPolynomial() = default;
  explicit RelationPolynomial(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Word-reversal; matches matrix transposition because the generators are
  // symmetric matrices.
  RelationPolynomial transposed() const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

// The algebra generated by the adjacency operators, as an explicit monomial
// basis with an echelonized span.
class AlgebraBasis {
 public:
  // Breadth-first closure over words ordered by (length, lexicographic);
  // a word joins the basis iff its matrix is independent of all earlier ones.
  // Throws when the dimension exceeds dim_cap.
  static AlgebraBasis closure(std::vector<RatMatrix> generators, std::size_t dim_cap);

  std::size_t dim() const { return words_.size(); }
  std::size_t generator_count() const { return generators_.size(); }
  std::size_t ambient_size() const { return generators_.empty() ? 0 : generators_[0].rows(); }

  const std::vector<Word>& words() const { return words_; }
  const std::vector<RatMatrix>& basis_matrices() const { return matrices_; }
  const RatMatrix& generator(int colour) const;  // 1-based
  const EchelonSpan& span() const { return span_; }

  RatMatrix word_matrix(const Word& w) const;
  RatMatrix evaluate(const RelationPolynomial& p) const;

  // Coordinates over the monomial basis, or nullopt outside the span.
  std::optional<std::vector<Rational>> coordinates(const RatMatrix& m) const;

  // Every basis element times every generator stays in the span.
  bool closure_certificate() const;

 private:
  AlgebraBasis(std::vector<RatMatrix> generators, EchelonSpan span)
      : generators_(std::move(generators)), span_(std::move(span)) {}

  std::vector<RatMatrix> generators_;
  std::vector<Word> words_;
  std::vector<RatMatrix> matrices_;
  EchelonSpan span_;
};

// True iff the polynomial evaluates to the zero matrix.
bool check_relation(const AlgebraBasis& ab, const RelationPolynomial& rel);

// (T_i - q_i)(T_i + I) = 0 together with the braid relations of the Coxeter
// matrix; coxeter must be symmetric with unit diagonal and off-diagonal >= 2.
std::vector<RelationPolynomial> hecke_presentation(const std::vector<std::vector<int>>& coxeter,
                                                   const std::vector<long>& orders);
std::vector<RelationPolynomial> aff_presentation(long q);
std::vector<RelationPolynomial> circle_presentation(long q);
std::vector<RelationPolynomial> petersen_presentation();

// Nondegeneracy of the trace form Tr(B_i B_j) over the given basis.
bool gram_semisimple(const std::vector<RatMatrix>& basis);
bool gram_semisimple(const AlgebraBasis& ab);

// Deterministic rendering of a coordinate vector over basis words, e.g.
// "T2T1T2 - T1T2T1"; the zero vector renders as "0".
std::string pretty_word_combination(const std::vector<Word>& basis_words,
                                    const std::vector<Rational>& coords);
std::string pretty_word_combination(const AlgebraBasis& ab, const std::vector<Rational>& coords);

}  // namespace cohconf
