#include "cohconf/algebra.hpp"

#include <algorithm>
#include <deque>

namespace cohconf {

RelationPolynomial::RelationPolynomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return word_less(a.word, b.word); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().word == t.word)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
  }
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.coeff == 0; }),
               terms_.end());
}

RelationPolynomial RelationPolynomial::transposed() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.coeff, reversed(t.word)});
  return RelationPolynomial(std::move(out));
}

std::string RelationPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const bool negatives : {false, true})
    for (const Term& t : terms_) {
      if ((t.coeff < 0) != negatives) continue;
      const Rational mag = negatives ? Rational(-t.coeff) : t.coeff;
      if (s.empty())
        s += negatives ? "-" : "";
      else
        s += negatives ? " - " : " + ";
      if (mag != 1) s += rational_to_string(mag) + "*";
      s += word_to_string(t.word);
    }
  return s;
}

AlgebraBasis AlgebraBasis::closure(std::vector<RatMatrix> generators, std::size_t dim_cap) {
  if (generators.empty()) throw Error("algebra closure: no generators");
  if (dim_cap < 1) throw Error("algebra closure: dimension cap must be >= 1");
  const std::size_t n = generators[0].rows();
  for (const auto& g : generators)
    if (!g.is_square() || g.rows() != n)
      throw Error("algebra closure: generators must be square matrices of one size");

  AlgebraBasis ab(std::move(generators), EchelonSpan(n, n));
  ab.words_.push_back({});
  ab.matrices_.push_back(RatMatrix::identity(n));
  ab.span_.insert(ab.matrices_[0]);

  // Extending basis words in insertion order, by each colour in turn, visits
  // candidate words exactly in (length, lexicographic) order.
  for (std::size_t head = 0; head < ab.words_.size(); ++head) {
    for (std::size_t c = 0; c < ab.generators_.size(); ++c) {
      RatMatrix m = mat_mul(ab.matrices_[head], ab.generators_[c]);
      if (!ab.span_.insert(m)) continue;
      if (ab.span_.dimension() > dim_cap)
        throw Error("algebra closure: dimension cap " + std::to_string(dim_cap) +
                    " exceeded (reached " + std::to_string(ab.span_.dimension()) + ")");
      Word w = ab.words_[head];
      w.push_back(static_cast<int>(c) + 1);
      ab.words_.push_back(std::move(w));
      ab.matrices_.push_back(std::move(m));
    }
  }
  return ab;
}

const RatMatrix& AlgebraBasis::generator(int colour) const {
  if (colour < 1 || static_cast<std::size_t>(colour) > generators_.size())
    throw Error("algebra: generator index " + std::to_string(colour) + " out of range");
  return generators_[colour - 1];
}

RatMatrix AlgebraBasis::word_matrix(const Word& w) const {
  RatMatrix m = RatMatrix::identity(ambient_size());
  for (int c : w) m = mat_mul(m, generator(c));
  return m;
}

RatMatrix AlgebraBasis::evaluate(const RelationPolynomial& p) const {
  RatMatrix acc(ambient_size(), ambient_size());
  for (const auto& t : p.terms()) acc = acc + t.coeff * word_matrix(t.word);
  return acc;
}

std::optional<std::vector<Rational>> AlgebraBasis::coordinates(const RatMatrix& m) const {
  return span_.solve(m);
}

bool AlgebraBasis::closure_certificate() const {
  for (const auto& b : matrices_)
    for (const auto& g : generators_)
      if (!span_.contains(mat_mul(b, g))) return false;
  return true;
}

bool check_relation(const AlgebraBasis& ab, const RelationPolynomial& rel) {
  return ab.evaluate(rel).is_zero();
}

namespace {

RelationPolynomial quadratic_relation(int colour, long order) {
  // (T - order*I)(T + I) = T^2 - (order-1) T - order I
  return RelationPolynomial({{Rational(1), Word{colour, colour}},
                             {Rational(-(order - 1)), Word{colour}},
                             {Rational(-order), Word{}}});
}

Word alternating(int first, int second, int length) {
  Word w;
  for (int k = 0; k < length; ++k) w.push_back(k % 2 == 0 ? first : second);
  return w;
}

}  // namespace

std::vector<RelationPolynomial> hecke_presentation(const std::vector<std::vector<int>>& coxeter,
                                                   const std::vector<long>& orders) {
  const std::size_t n = coxeter.size();
  if (n == 0 || orders.size() != n) throw Error("hecke: Coxeter matrix / orders size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (coxeter[i].size() != n) throw Error("hecke: Coxeter matrix not square");
    if (coxeter[i][i] != 1) throw Error("hecke: Coxeter matrix diagonal must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (coxeter[i][j] != coxeter[j][i]) throw Error("hecke: Coxeter matrix not symmetric");
      if (i != j && coxeter[i][j] < 2) throw Error("hecke: off-diagonal entries must be >= 2");
    }
  }
  std::vector<RelationPolynomial> rels;
  for (std::size_t i = 0; i < n; ++i)
    rels.push_back(quadratic_relation(static_cast<int>(i) + 1, orders[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int m = coxeter[i][j];
      const int a = static_cast<int>(i) + 1, b = static_cast<int>(j) + 1;
      rels.push_back(RelationPolynomial(
          {{Rational(1), alternating(a, b, m)}, {Rational(-1), alternating(b, a, m)}}));
    }
  return rels;
}

std::vector<RelationPolynomial> aff_presentation(long q) {
  RelationPolynomial quartic({{Rational(1), Word{1, 2, 1, 2}},
                              {Rational(-(q - 1)), Word{2, 1}},
                              {Rational(-(q - 1)), Word{2, 1, 2}},
                              {Rational(1), Word{1, 2, 1}}});
  return {quadratic_relation(1, q - 1), quadratic_relation(2, q), quartic, quartic.transposed()};
}

std::vector<RelationPolynomial> circle_presentation(long q) {
  RelationPolynomial quartic({{Rational(1), Word{2, 1, 2, 1}},
                              {Rational(-1), Word{1, 2}},
                              {Rational(-1), Word{2, 1, 2}},
                              {Rational(1), Word{1, 2, 1}}});
  return {quadratic_relation(1, 1), quadratic_relation(2, q), quartic, quartic.transposed()};
}

std::vector<RelationPolynomial> petersen_presentation() {
  RelationPolynomial sextic({{Rational(1), Word{1, 2, 1, 2, 1, 2}},
                             {Rational(-1), Word{2, 1, 2, 1}},
                             {Rational(-1), Word{2, 1, 2, 1, 2}},
                             {Rational(1), Word{1, 2, 1, 2, 1}}});
  return {quadratic_relation(1, 1), quadratic_relation(2, 2), sextic, sextic.transposed()};
}

bool gram_semisimple(const std::vector<RatMatrix>& basis) {
  const std::size_t d = basis.size();
  RatMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      gram.at(i, j) = trace_of_product(basis[i], basis[j]);
      gram.at(j, i) = gram.at(i, j);
    }
  return rank(gram) == d;
}

bool gram_semisimple(const AlgebraBasis& ab) { return gram_semisimple(ab.basis_matrices()); }

std::string pretty_word_combination(const std::vector<Word>& basis_words,
                                    const std::vector<Rational>& coords) {
  if (basis_words.size() != coords.size())
    throw Error("pretty_word_combination: coordinate length mismatch");
  // Positive terms first, then negative ones, each group in basis order.
  std::string s;
  for (const bool negatives : {false, true})
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == 0 || (coords[i] < 0) != negatives) continue;
      const Rational mag = negatives ? Rational(-coords[i]) : coords[i];
      if (s.empty())
        s += negatives ? "-" : "";
      else
        s += negatives ? " - " : " + ";
      if (mag != 1) s += rational_to_string(mag) + "*";
      s += word_to_string(basis_words[i]);
    }
  return s.empty() ? "0" : s;
}

std::string pretty_word_combination(const AlgebraBasis& ab, const std::vector<Rational>& coords) {
  return pretty_word_combination(ab.words(), coords);
}

}  // namespace cohconf
