#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cohconf/action.hpp"
#include "cohconf/graph.hpp"

namespace cohconf {

// F_p[x]/(f) with f the first irreducible monic polynomial in the
// deterministic search order; elements are 0..q-1 encoded as base-p digit
// vectors of polynomial coefficients.
class FiniteField {
 public:
  static FiniteField make(long q);

  long q() const { return q_; }
  long p() const { return p_; }
  int degree() const { return a_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;

  // Multiplicative generator (1 when q = 2).
  int generator() const { return generator_; }

 private:
  FiniteField() = default;
  long p_ = 0, q_ = 0;
  int a_ = 0;
  std::vector<int> modulus_;  // c_0..c_{a-1} of x^a + sum c_i x^i
  std::vector<int> add_, mul_, neg_;
  int generator_ = 1;
};

// Points 0..m-1 with lines as point sets; lines are stored sorted and
// deduplicated, in lexicographic order.
class LineSpace {
 public:
  LineSpace(int point_count, std::vector<std::vector<int>> lines);

  int point_count() const { return point_count_; }
  int line_count() const { return static_cast<int>(lines_.size()); }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  const std::vector<int>& line(int l) const { return lines_[l]; }
  const std::vector<int>& lines_through(int p) const { return through_[p]; }
  bool incident(int p, int l) const;
  int line_index(const std::vector<int>& sorted_points) const;  // -1 when absent

 private:
  int point_count_;
  std::vector<std::vector<int>> lines_;
  std::vector<std::vector<int>> through_;
  std::map<std::vector<int>, int> index_;
};

bool is_linear_space(const LineSpace& ls);
bool is_projective_plane(const LineSpace& ls);
bool is_affine_plane(const LineSpace& ls);

struct Flag {
  int p, l;
};

// Chamber system of a line space: vertices are flags ordered lexicographically
// by (point, line); colour 1 joins flags sharing a line, colour 2 flags
// sharing a point.
struct ChamberSystem {
  EdgeColouredGraph graph;
  std::vector<Flag> flags;
  std::map<std::pair<int, int>, int> index;

  int flag_index(int p, int l) const;
};

ChamberSystem chamber_system(const LineSpace& ls);

LineSpace projective_plane(long q);
LineSpace affine_plane(long q);
LineSpace clique_plane(long q);
LineSpace petersen_linespace();

// Flag permutations induced by point permutations that preserve the line set.
PermutationAction induced_flag_action(const LineSpace& ls, const ChamberSystem& cs,
                                      const std::vector<Permutation>& point_perms);

// Translations by e1, e2 plus a generating set of GL_2(F_q), on the flags of
// affine_plane(q).
PermutationAction affine_symmetries(long q);
// A generating set of GL_3(F_q) on the flags of projective_plane(q).
PermutationAction projective_symmetries(long q);
// S_{q+2} via a transposition and the full cycle, on the flags of clique_plane(q).
PermutationAction clique_symmetries(long q);
// S_5 via (1 2) and (1 2 3 4 5), on the flags of petersen_linespace().
PermutationAction petersen_symmetries();

}  // namespace cohconf
