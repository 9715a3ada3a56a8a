#pragma once

#include <optional>
#include <vector>

#include "cohconf/matrix.hpp"

namespace cohconf {

// Linear span of matrices of a fixed shape, kept in reduced row-echelon form.
// Successfully inserted matrices are the "stored basis"; solve() returns
// coordinates with respect to them, in insertion order.
class EchelonSpan {
 public:
  EchelonSpan(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t ambient() const { return rows_ * cols_; }
  std::size_t dimension() const { return rref_.size(); }

  // True iff m enlarged the span; a dependent matrix leaves the span unchanged.
  bool insert(const RatMatrix& m);

  bool contains(const RatMatrix& m) const;

  // Coordinates of m over the stored basis, or nullopt when m is outside the span.
  std::optional<std::vector<Rational>> solve(const RatMatrix& m) const;

 private:
  void check_shape(const RatMatrix& m) const;
  // Reduces v in place; returns the combination over rref_ rows that was subtracted.
  std::vector<Rational> reduce(std::vector<Rational>& v) const;

  std::size_t rows_, cols_;
  std::vector<std::vector<Rational>> rref_;    // echelon rows, leading entry 1
  std::vector<std::size_t> pivots_;            // pivot column of each row, strictly sorted
  std::vector<std::vector<Rational>> combos_;  // rref_[r] as combination of stored basis
};

}  // namespace cohconf
