#include "cohconf/span.hpp"

#include <algorithm>

namespace cohconf {

void EchelonSpan::check_shape(const RatMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_)
    throw Error("span: member shape mismatch, expected " + std::to_string(rows_) + "x" +
                std::to_string(cols_));
}

std::vector<Rational> EchelonSpan::reduce(std::vector<Rational>& v) const {
  std::vector<Rational> c(rref_.size());
  for (std::size_t r = 0; r < rref_.size(); ++r) {
    const Rational coeff = v[pivots_[r]];
    if (coeff == 0) continue;
    c[r] = coeff;
    const auto& row = rref_[r];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) v[j] -= coeff * row[j];
  }
  return c;
}

bool EchelonSpan::insert(const RatMatrix& m) {
  check_shape(m);
  std::vector<Rational> v = m.entries();
  const std::vector<Rational> c = reduce(v);

  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;

  const std::size_t k = rref_.size();  // index of the new stored basis element
  const Rational lead = v[p];
  for (auto& x : v) x /= lead;

  std::vector<Rational> combo(k + 1);
  combo[k] = 1;
  for (std::size_t r = 0; r < k; ++r)
    if (c[r] != 0)
      for (std::size_t t = 0; t < combos_[r].size(); ++t) combo[t] -= c[r] * combos_[r][t];
  for (auto& x : combo) x /= lead;
  for (auto& old : combos_) old.resize(k + 1);

  const std::size_t pos =
      std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  rref_.insert(rref_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  combos_.insert(combos_.begin() + pos, std::move(combo));

  // Clear the new pivot column in every other row to keep full RREF.
  const auto& nv = rref_[pos];
  const auto& nc = combos_[pos];
  for (std::size_t r = 0; r < rref_.size(); ++r) {
    if (r == pos) continue;
    const Rational f = rref_[r][p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < nv.size(); ++j)
      if (nv[j] != 0) rref_[r][j] -= f * nv[j];
    for (std::size_t t = 0; t < nc.size(); ++t) combos_[r][t] -= f * nc[t];
  }
  return true;
}

bool EchelonSpan::contains(const RatMatrix& m) const {
  check_shape(m);
  std::vector<Rational> v = m.entries();
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::optional<std::vector<Rational>> EchelonSpan::solve(const RatMatrix& m) const {
  check_shape(m);
  std::vector<Rational> v = m.entries();
  const std::vector<Rational> c = reduce(v);
  for (const auto& x : v)
    if (x != 0) return std::nullopt;
  std::vector<Rational> coords(rref_.size());
  for (std::size_t r = 0; r < rref_.size(); ++r)
    if (c[r] != 0)
      for (std::size_t t = 0; t < combos_[r].size(); ++t) coords[t] += c[r] * combos_[r][t];
  return coords;
}

}  // namespace cohconf
