#pragma once

#include <cstddef>
#include <vector>

#include "cohconf/rational.hpp"

namespace cohconf {

// Dense matrix over exact rationals, row-major storage.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix all_ones(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const { return e_; }

  RatMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;
  bool is_zero_one() const;
  bool has_zero_diagonal() const;
  Rational row_sum(std::size_t i) const;
  Rational trace() const;

  bool operator==(const RatMatrix& o) const;
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> e_;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& c, const RatMatrix& m);

// Tr(a * b) without forming the product.
Rational trace_of_product(const RatMatrix& a, const RatMatrix& b);

std::size_t rank(RatMatrix m);
std::size_t nullity(const RatMatrix& m);

// Sum coeffs[k] * m^k by Horner's scheme; empty coefficient list gives zero.
RatMatrix poly_eval(const RatMatrix& m, const std::vector<Rational>& coeffs);

}  // namespace cohconf
