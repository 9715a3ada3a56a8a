#include "cohconf/configuration.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "cohconf/span.hpp"

namespace cohconf {

namespace {

std::string format_failures(const std::vector<VerifyFailure>& failures) {
  std::string s = "architecture verification failed:";
  for (const auto& f : failures) s += "\n  [" + f.check + "] " + f.witness;
  return s;
}

}  // namespace

VerifyError::VerifyError(std::vector<VerifyFailure> failures)
    : Error(format_failures(failures)), failures_(std::move(failures)) {}

bool VerifyError::has_check(const std::string& name) const {
  for (const auto& f : failures_)
    if (f.check == name) return true;
  return false;
}

std::string CoherentConfiguration::expression_text(std::size_t i) const {
  return pretty_word_combination(basis_words_, expressions_[i]);
}

bool CoherentConfiguration::recheck_axioms() const {
  const std::size_t d1 = classes_.size();
  if (d1 == 0) return false;
  if (classes_[0] != RatMatrix::identity(n_)) return false;
  RatMatrix sum(n_, n_);
  for (const auto& a : classes_) {
    if (!a.is_zero_one()) return false;
    sum = sum + a;
  }
  if (sum != RatMatrix::all_ones(n_)) return false;
  for (std::size_t i = 0; i < d1; ++i) {
    if (transpose_perm_[i] >= d1) return false;
    if (classes_[transpose_perm_[i]] != classes_[i].transpose()) return false;
  }
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j) {
      RatMatrix expect(n_, n_);
      for (std::size_t k = 0; k < d1; ++k) {
        const long a = intersection(i, j, k);
        if (a < 0) return false;
        if (a != 0) expect = expect + Rational(a) * classes_[k];
      }
      if (mat_mul(classes_[i], classes_[j]) != expect) return false;
    }
  return true;
}

CoherentConfiguration verify_architecture(const EdgeColouredGraph& g, const AlgebraBasis& ab,
                                          std::vector<RatMatrix> candidates) {
  const std::size_t n = g.vertex_count();
  std::vector<VerifyFailure> failures;

  bool shapes_ok = true;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (candidates[i].rows() != n || candidates[i].cols() != n) {
      failures.push_back({"shape", "candidate " + std::to_string(i) + " is not " +
                                       std::to_string(n) + "x" + std::to_string(n)});
      shapes_ok = false;
    }
  if (!shapes_ok) throw VerifyError(std::move(failures));

  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (!candidates[i].is_zero_one()) {
      failures.push_back({"entries not 0/1", "candidate " + std::to_string(i)});
    }

  std::size_t identity_at = candidates.size();
  const RatMatrix eye = RatMatrix::identity(n);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (candidates[i] == eye) {
      identity_at = i;
      break;
    }
  if (identity_at == candidates.size())
    failures.push_back({"identity missing", "no candidate equals I"});

  {
    RatMatrix sum(n, n);
    for (const auto& c : candidates) sum = sum + c;
    bool partition = true;
    for (std::size_t x = 0; x < n && partition; ++x)
      for (std::size_t y = 0; y < n && partition; ++y)
        if (sum.at(x, y) != 1) {
          failures.push_back({"supports do not partition J",
                              "entry (" + std::to_string(x) + "," + std::to_string(y) +
                                  ") covered " + rational_to_string(sum.at(x, y)) + " times"});
          partition = false;
        }
  }

  if (candidates.size() != ab.dim())
    failures.push_back({"count != dim", "count " + std::to_string(candidates.size()) +
                                            " != dim " + std::to_string(ab.dim())});

  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (!ab.span().contains(candidates[i]))
      failures.push_back(
          {"candidate not in algebra span", "candidate " + std::to_string(i)});

  {
    EchelonSpan indep(n, n);
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (!indep.insert(candidates[i]))
        failures.push_back({"candidates not linearly independent",
                            "candidate " + std::to_string(i) + " depends on earlier ones"});
  }

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const RatMatrix t = candidates[i].transpose();
    if (std::find(candidates.begin(), candidates.end(), t) == candidates.end())
      failures.push_back(
          {"class set not transpose-closed", "transpose of candidate " + std::to_string(i)});
  }

  if (!failures.empty()) throw VerifyError(std::move(failures));

  if (identity_at != 0)
    std::rotate(candidates.begin(), candidates.begin() + identity_at,
                candidates.begin() + identity_at + 1);

  CoherentConfiguration cc;
  cc.n_ = n;
  cc.classes_ = std::move(candidates);
  const std::size_t d1 = cc.classes_.size();
  cc.basis_words_ = ab.words();

  for (const auto& a : cc.classes_) {
    auto coords = ab.coordinates(a);
    cc.expressions_.push_back(std::move(*coords));
  }

  cc.transpose_perm_.assign(d1, 0);
  for (std::size_t i = 0; i < d1; ++i) {
    const RatMatrix t = cc.classes_[i].transpose();
    const auto it = std::find(cc.classes_.begin(), cc.classes_.end(), t);
    cc.transpose_perm_[i] = static_cast<std::size_t>(it - cc.classes_.begin());
  }

  EchelonSpan class_span(n, n);
  for (const auto& a : cc.classes_) class_span.insert(a);
  cc.tensor_.assign(d1 * d1 * d1, 0);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j) {
      const auto coords = class_span.solve(mat_mul(cc.classes_[i], cc.classes_[j]));
      if (!coords)
        throw VerifyError({{"product outside class span",
                            "A" + std::to_string(i) + "*A" + std::to_string(j)}});
      for (std::size_t k = 0; k < d1; ++k) {
        const Rational& a = (*coords)[k];
        if (!is_integer(a) || a < 0)
          throw VerifyError({{"intersection number not a nonnegative integer",
                              "a(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + ") = " + rational_to_string(a)}});
        cc.tensor_[(i * d1 + j) * d1 + k] = rational_to_long(a);
      }
    }

  cc.sphere_sizes_.resize(d1);
  for (std::size_t k = 0; k < d1; ++k)
    cc.sphere_sizes_[k] = rational_to_long(cc.classes_[k].row_sum(0));

  cc.class_of_.assign(n * n, 0);
  for (std::size_t k = 0; k < d1; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (cc.classes_[k].at(x, y) == 1) cc.class_of_[x * n + y] = static_cast<std::uint16_t>(k);

  return cc;
}

CoherentConfiguration architecture_from_action(const EdgeColouredGraph& g,
                                               const PermutationAction& a, const AlgebraBasis& ab,
                                               int base_point) {
  const auto report = strong_transitivity_report(g, a, ab, base_point);
  if (!report.strongly_transitive)
    throw Error("architecture_from_action: the action is not strongly transitive (transitive=" +
                std::string(report.transitive ? "true" : "false") +
                ", B-orbits=" + std::to_string(report.b_orbit_count) +
                ", dim=" + std::to_string(report.algebra_dim) + ")");

  const int n = g.vertex_count();
  StabilizerData stab = stabilizer(a, base_point);
  std::vector<Permutation> bgens = stab.stabilizer_generators;
  if (bgens.empty()) bgens.push_back(identity_perm(n));
  auto orbits = orbit_partition(PermutationAction(n, bgens), {base_point});

  std::vector<RatMatrix> candidates;
  std::vector<Permutation> sigma(n);
  for (int v = 0; v < n; ++v) sigma[v] = transversal_perm(a, stab, v);
  for (const auto& orbit : orbits) {
    RatMatrix m(n, n);
    for (int v = 0; v < n; ++v)
      for (int y : orbit) m.at(v, sigma[v][y]) = 1;
    candidates.push_back(std::move(m));
  }
  return verify_architecture(g, ab, std::move(candidates));
}

CoherentConfiguration distance_regular_architecture(const EdgeColouredGraph& g) {
  std::vector<RatMatrix> dist = distance_matrices(g);
  AlgebraBasis ab = AlgebraBasis::closure({adjacency_operator(g, 1)}, g.vertex_count());
  return verify_architecture(g, ab, std::move(dist));
}

namespace {

// Unique intersection point of two distinct lines, or -1 if parallel.
int line_meet(const LineSpace& ls, int l1, int l2) {
  std::vector<int> common;
  std::set_intersection(ls.line(l1).begin(), ls.line(l1).end(), ls.line(l2).begin(),
                        ls.line(l2).end(), std::back_inserter(common));
  if (common.size() > 1) throw Error("line space is not linear: lines share two points");
  return common.empty() ? -1 : common[0];
}

std::vector<RatMatrix> classify_flag_pairs(const ChamberSystem& cs, int class_count,
                                           const std::function<int(const Flag&, const Flag&)>& f) {
  const int n = cs.graph.vertex_count();
  std::vector<RatMatrix> classes(class_count, RatMatrix(n, n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int k = f(cs.flags[x], cs.flags[y]);
      if (k < 0 || k >= class_count) throw Error("flag-pair classification out of range");
      classes[k].at(x, y) = 1;
    }
  return classes;
}

}  // namespace

std::vector<RatMatrix> canonical_affine_architecture(const LineSpace& ls,
                                                     const ChamberSystem& cs) {
  if (!is_affine_plane(ls)) throw Error("canonical affine architecture: not an affine plane");
  return classify_flag_pairs(cs, 7, [&](const Flag& x, const Flag& y) {
    if (x.p == y.p && x.l == y.l) return 0;
    if (x.l == y.l) return 1;
    if (x.p == y.p) return 2;
    if (ls.incident(y.p, x.l)) return 3;  // gallery of type (1,2)
    const int meet = line_meet(ls, x.l, y.l);
    if (meet == x.p) return 4;  // gallery of type (2,1)
    if (meet >= 0) return 5;    // lines meet away from x.p: type (1,2,1)
    return 6;                   // parallel lines: type (2,1,2) but not (1,2,1)
  });
}

std::vector<RatMatrix> canonical_projective_architecture(const LineSpace& ls,
                                                         const ChamberSystem& cs) {
  if (!is_projective_plane(ls))
    throw Error("canonical projective architecture: not a projective plane");
  return classify_flag_pairs(cs, 6, [&](const Flag& x, const Flag& y) {
    if (x.p == y.p && x.l == y.l) return 0;
    if (x.l == y.l) return 1;
    if (x.p == y.p) return 2;
    if (ls.incident(y.p, x.l)) return 3;  // y's point on x's line: type (1,2)
    if (ls.incident(x.p, y.l)) return 4;  // x's point on y's line: type (2,1)
    return 5;                             // generic position: type (1,2,1)
  });
}

std::vector<RatMatrix> canonical_clique_architecture(const LineSpace& ls,
                                                     const ChamberSystem& cs) {
  const int n = ls.point_count();
  if (ls.line_count() != n * (n - 1) / 2)
    throw Error("canonical clique architecture: not a clique plane");
  for (const auto& line : ls.lines())
    if (line.size() != 2) throw Error("canonical clique architecture: not a clique plane");
  // Flag (p, {p, r}) read as the ordered pair (p, r).
  auto other_end = [&](const Flag& f) {
    const auto& line = ls.line(f.l);
    return line[0] == f.p ? line[1] : line[0];
  };
  return classify_flag_pairs(cs, 7, [&](const Flag& x, const Flag& y) {
    const int i = x.p, j = other_end(x);
    const int k = y.p, l = other_end(y);
    if (k == i && l == j) return 0;
    if (k == j && l == i) return 1;
    if (k == i) return 2;
    if (k == j) return 3;
    if (l == i) return 4;
    if (l == j) return 5;
    return 6;
  });
}

std::vector<RelationPolynomial> petersen_class_expressions() {
  auto mono = [](Word w) { return RelationPolynomial({{Rational(1), std::move(w)}}); };
  return {mono({}),
          mono({1}),
          mono({2}),
          mono({2, 1}),
          mono({1, 2}),
          mono({1, 2, 1}),
          mono({2, 1, 2}),
          mono({1, 2, 1, 2}),
          mono({2, 1, 2, 1}),
          mono({1, 2, 1, 2, 1}),
          RelationPolynomial(
              {{Rational(1), {2, 1, 2, 1, 2}}, {Rational(-1), {1, 2, 1, 2, 1}}})};
}

std::vector<RatMatrix> canonical_petersen_architecture(const AlgebraBasis& ab) {
  std::vector<RatMatrix> out;
  for (const auto& e : petersen_class_expressions()) out.push_back(ab.evaluate(e));
  return out;
}

bool cross_check_intersection_tensor(const CoherentConfiguration& cc, std::uint64_t seed,
                                     int exhaustive_limit, int samples_per_class) {
  const int n = static_cast<int>(cc.vertex_count());
  const std::size_t d1 = cc.class_count();
  auto check_pair = [&](int x, int z) {
    const std::size_t k = cc.class_of(x, z);
    std::vector<long> count(d1 * d1, 0);
    for (int y = 0; y < n; ++y) ++count[cc.class_of(x, y) * d1 + cc.class_of(y, z)];
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j)
        if (count[i * d1 + j] != cc.intersection(i, j, k)) return false;
    return true;
  };
  if (n <= exhaustive_limit) {
    for (int x = 0; x < n; ++x)
      for (int z = 0; z < n; ++z)
        if (!check_pair(x, z)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_vertex(0, n - 1);
  for (std::size_t k = 0; k < d1; ++k)
    for (int s = 0; s < samples_per_class; ++s) {
      const int x = pick_vertex(rng);
      // z uniform over the sphere of class k at x.
      std::vector<int> sphere;
      for (int z = 0; z < n; ++z)
        if (cc.class_of(x, z) == k) sphere.push_back(z);
      std::uniform_int_distribution<std::size_t> pick(0, sphere.size() - 1);
      if (!check_pair(x, sphere[pick(rng)])) return false;
    }
  return true;
}

SphereLabelling sphere_labels(const CoherentConfiguration& cc, int x0, LabelDirection dir) {
  if (x0 < 0 || x0 >= static_cast<int>(cc.vertex_count()))
    throw Error("sphere_labels: base vertex out of range");
  SphereLabelling out;
  out.base = x0;
  out.labels.resize(cc.vertex_count());
  for (int y = 0; y < static_cast<int>(cc.vertex_count()); ++y)
    out.labels[y] = dir == LabelDirection::FromBase ? cc.class_of(x0, y) : cc.class_of(y, x0);
  return out;
}

AffineMultiplicities affine_multiplicities(const EdgeColouredGraph& g, long q) {
  if (g.colour_count() != 2) throw Error("affine_multiplicities: expected a 2-coloured graph");
  const long N = g.vertex_count();
  const RatMatrix t1 = adjacency_operator(g, 1);
  const RatMatrix t2 = adjacency_operator(g, 2);
  const RatMatrix eye = RatMatrix::identity(N);
  const RatMatrix t = t1 + t2;

  const long a = static_cast<long>(nullity(t2 - Rational(q) * eye));       // n0 + n3
  const long b = static_cast<long>(nullity(t2 + eye));                     // n0 + n1 + n2
  const long c = static_cast<long>(nullity(t1 - Rational(q - 1) * eye));   // n0 + n2 + n3
  const long d = static_cast<long>(nullity(t1 + eye));                     // n0 + n1
  const long n3 = static_cast<long>(nullity(t - Rational(2 * q - 1) * eye));

  AffineMultiplicities m{a - n3, 0, 0, n3};
  m.n1 = d - m.n0;
  m.n2 = c - m.n0 - m.n3;
  // The measured system is overdetermined; the remaining equations must agree.
  const bool ok = m.n0 >= 0 && m.n1 >= 0 && m.n2 >= 0 && m.n3 >= 0 &&
                  m.n0 + m.n1 + m.n2 == b && 2 * m.n0 + m.n1 + m.n2 + m.n3 == N &&
                  N == q * q * (q + 1);
  if (!ok)
    throw Error("affine_multiplicities: measured nullities are inconsistent with an "
                "affine-plane chamber system of order " +
                std::to_string(q));
  return m;
}

SpectrumReport affine_spectrum_certificate(const EdgeColouredGraph& g, long q) {
  if (g.colour_count() != 2)
    throw Error("affine_spectrum_certificate: expected a 2-coloured graph");
  const std::size_t N = g.vertex_count();
  const RatMatrix t = adjacency_operator(g, 1) + adjacency_operator(g, 2);
  const RatMatrix eye = RatMatrix::identity(N);

  const RatMatrix lin1 = t + Rational(2) * eye;
  const RatMatrix lin2 = t - Rational(q - 2) * eye;
  const RatMatrix lin3 = t - Rational(2 * q - 1) * eye;
  const RatMatrix quad =
      mat_mul(t, t) - Rational(2 * q - 3) * t + Rational(q * q - 4 * q + 2) * eye;

  SpectrumReport r;
  auto add = [&r](std::string name, bool ok) {
    r.all_ok = r.all_ok && ok;
    r.checks.emplace_back(std::move(name), ok);
  };
  add("annihilating polynomial (x+2)(x-(q-2))(x-(2q-1))(x^2-(2q-3)x+(q^2-4q+2)) vanishes",
      mat_mul(mat_mul(lin1, lin2), mat_mul(lin3, quad)).is_zero());
  add("multiplicity of -2 equals (q-1)^2(q+1)",
      nullity(lin1) == static_cast<std::size_t>((q - 1) * (q - 1) * (q + 1)));
  add("multiplicity of q-2 equals q", nullity(lin2) == static_cast<std::size_t>(q));
  add("multiplicity of 2q-1 equals 1", nullity(lin3) == 1);
  add("quadratic factor kernel has dimension 2(q^2-1)",
      nullity(quad) == static_cast<std::size_t>(2 * (q * q - 1)));
  return r;
}

}  // namespace cohconf
