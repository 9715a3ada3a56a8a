#include "cohconf/matrix.hpp"

#include <string>

namespace cohconf {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::all_ones(std::size_t n) {
  RatMatrix m(n, n);
  for (auto& e : m.e_) e = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : e_)
    if (e != 0) return false;
  return true;
}

bool RatMatrix::is_zero_one() const {
  for (const auto& e : e_)
    if (e != 0 && e != 1) return false;
  return true;
}

bool RatMatrix::has_zero_diagonal() const {
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i)
    if (at(i, i) != 0) return false;
  return true;
}

Rational RatMatrix::row_sum(std::size_t i) const {
  Rational s = 0;
  for (std::size_t j = 0; j < cols_; ++j) s += at(i, j);
  return s;
}

Rational RatMatrix::trace() const {
  Rational s = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += at(i, i);
  return s;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k] != o.e_[k]) return false;
  return true;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    throw Error("mat_mul: dimension mismatch " + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                std::to_string(b.cols()));
  RatMatrix c(a.rows(), b.cols());
  // Row-oriented with zero skipping; the matrices here are mostly 0/1.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& f = a.at(i, k);
      if (f == 0) continue;
      if (f == 1) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
          const Rational& g = b.at(k, j);
          if (g != 0) c.at(i, j) += g;
        }
      } else {
        for (std::size_t j = 0; j < b.cols(); ++j) {
          const Rational& g = b.at(k, j);
          if (g != 0) c.at(i, j) += f * g;
        }
      }
    }
  }
  return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return mat_mul(a, b); }

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum: dimension mismatch");
  RatMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("matrix difference: dimension mismatch");
  RatMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

RatMatrix operator*(const Rational& c, const RatMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = c * m.at(i, j);
  return r;
}

Rational trace_of_product(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw Error("trace_of_product: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& f = a.at(i, k);
      if (f != 0) s += f * b.at(k, i);
    }
  return s;
}

std::size_t rank(RatMatrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    // First nonzero entry as pivot; exact arithmetic needs no magnitude heuristics.
    std::size_t piv = r;
    while (piv < rows && m.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = col; j < cols; ++j) swap(m.at(piv, j), m.at(r, j));
    const Rational inv = 1 / m.at(r, col);
    for (std::size_t j = col; j < cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Rational f = m.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t nullity(const RatMatrix& m) { return m.cols() - rank(m); }

RatMatrix poly_eval(const RatMatrix& m, const std::vector<Rational>& coeffs) {
  if (!m.is_square()) throw Error("poly_eval: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix acc(n, n);
  if (coeffs.empty()) return acc;
  for (std::size_t i = 0; i < n; ++i) acc.at(i, i) = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    acc = mat_mul(acc, m);
    for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += coeffs[k];
  }
  return acc;
}

}  // namespace cohconf
