#include "cohconf/geometry.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace cohconf {

namespace {

constexpr long kMaxFieldSize = 32;

// Little-endian base-p digits, length a.
std::vector<int> digits(long v, long p, int a) {
  std::vector<int> d(a);
  for (int i = 0; i < a; ++i) {
    d[i] = static_cast<int>(v % p);
    v /= p;
  }
  return d;
}

// Polynomial remainder of u mod v over F_p; v is monic of positive degree.
std::vector<int> poly_mod(std::vector<int> u, const std::vector<int>& v, long p) {
  const int dv = static_cast<int>(v.size()) - 1;
  for (int du = static_cast<int>(u.size()) - 1; du >= dv; --du) {
    const int f = u[du];
    if (f == 0) continue;
    for (int k = 0; k <= dv; ++k) {
      long t = u[du - dv + k] - static_cast<long>(f) * v[k];
      u[du - dv + k] = static_cast<int>(((t % p) + p) % p);
    }
  }
  u.resize(std::max(dv, 1));
  return u;
}

bool poly_is_zero(const std::vector<int>& u) {
  return std::all_of(u.begin(), u.end(), [](int c) { return c == 0; });
}

}  // namespace

FiniteField FiniteField::make(long q) {
  if (q < 2 || q > kMaxFieldSize)
    throw Error("finite field: order " + std::to_string(q) + " out of supported range 2.." +
                std::to_string(kMaxFieldSize));
  long p = 0;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  int a = 0;
  long t = q;
  while (t > 1) {
    if (t % p != 0) throw Error("finite field: " + std::to_string(q) + " is not a prime power");
    t /= p;
    ++a;
  }

  FiniteField F;
  F.p_ = p;
  F.q_ = q;
  F.a_ = a;

  if (a == 1) {
    F.modulus_ = {0};  // plain F_p; modulus unused
  } else {
    // First monic irreducible x^a + sum c_i x^i in the deterministic digit
    // order, irreducibility by trial division against lower-degree monics.
    for (long v = 0; v < q; ++v) {
      std::vector<int> mod = digits(v, p, a);
      mod.push_back(1);  // monic of degree a
      bool irreducible = true;
      for (int db = 1; db < a && irreducible; ++db) {
        long nb = 1;
        for (int i = 0; i < db; ++i) nb *= p;
        for (long w = 0; w < nb && irreducible; ++w) {
          std::vector<int> b = digits(w, p, db);
          b.push_back(1);
          if (poly_is_zero(poly_mod(mod, b, p))) irreducible = false;
        }
      }
      if (irreducible) {
        mod.pop_back();
        F.modulus_ = std::move(mod);
        break;
      }
    }
    if (F.modulus_.empty()) throw Error("finite field: no irreducible modulus found");
  }

  F.add_.resize(q * q);
  F.mul_.resize(q * q);
  F.neg_.resize(q);
  for (long x = 0; x < q; ++x) {
    const std::vector<int> dx = digits(x, p, a);
    {
      std::vector<int> dn(a);
      long enc = 0, w = 1;
      for (int i = 0; i < a; ++i) {
        dn[i] = (p - dx[i]) % p;
        enc += dn[i] * w;
        w *= p;
      }
      F.neg_[x] = static_cast<int>(enc);
    }
    for (long y = 0; y < q; ++y) {
      const std::vector<int> dy = digits(y, p, a);
      long enc = 0, w = 1;
      for (int i = 0; i < a; ++i) {
        enc += ((dx[i] + dy[i]) % p) * w;
        w *= p;
      }
      F.add_[x * q + y] = static_cast<int>(enc);
      std::vector<int> prod(2 * a - 1, 0);
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
          prod[i + j] = static_cast<int>((prod[i + j] + static_cast<long>(dx[i]) * dy[j]) % p);
      std::vector<int> red;
      if (a == 1) {
        red = prod;
      } else {
        std::vector<int> mod = F.modulus_;
        mod.push_back(1);
        red = poly_mod(prod, mod, p);
        red.resize(a);
      }
      enc = 0;
      w = 1;
      for (int i = 0; i < a && i < static_cast<int>(red.size()); ++i) {
        enc += red[i] * w;
        w *= p;
      }
      F.mul_[x * q + y] = static_cast<int>(enc);
    }
  }

  F.generator_ = 1;
  for (long g = 2; g < q; ++g) {
    long ord = 1;
    int e = static_cast<int>(g);
    while (e != 1) {
      e = F.mul(e, static_cast<int>(g));
      ++ord;
    }
    if (ord == q - 1) {
      F.generator_ = static_cast<int>(g);
      break;
    }
  }
  return F;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw Error("finite field: division by zero");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw Error("finite field: inverse not found");
}

LineSpace::LineSpace(int point_count, std::vector<std::vector<int>> lines)
    : point_count_(point_count) {
  if (point_count_ < 0) throw Error("line space: negative point count");
  for (auto& line : lines) {
    std::sort(line.begin(), line.end());
    line.erase(std::unique(line.begin(), line.end()), line.end());
    if (line.size() < 2) throw Error("line space: line with fewer than 2 points");
    if (line.front() < 0 || line.back() >= point_count_)
      throw Error("line space: point index out of range");
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  lines_ = std::move(lines);
  through_.assign(point_count_, {});
  for (int l = 0; l < line_count(); ++l) {
    index_[lines_[l]] = l;
    for (int p : lines_[l]) through_[p].push_back(l);
  }
}

bool LineSpace::incident(int p, int l) const {
  const auto& pts = lines_[l];
  return std::binary_search(pts.begin(), pts.end(), p);
}

int LineSpace::line_index(const std::vector<int>& sorted_points) const {
  auto it = index_.find(sorted_points);
  return it == index_.end() ? -1 : it->second;
}

bool is_linear_space(const LineSpace& ls) {
  for (int p = 0; p < ls.point_count(); ++p)
    for (int r = p + 1; r < ls.point_count(); ++r) {
      int joining = 0;
      for (int l : ls.lines_through(p))
        if (ls.incident(r, l)) ++joining;
      if (joining != 1) return false;
    }
  return true;
}

bool is_projective_plane(const LineSpace& ls) {
  if (!is_linear_space(ls)) return false;
  for (int l = 0; l < ls.line_count(); ++l) {
    if (ls.line(l).size() < 3) return false;
    for (int m = l + 1; m < ls.line_count(); ++m) {
      std::vector<int> common;
      std::set_intersection(ls.line(l).begin(), ls.line(l).end(), ls.line(m).begin(),
                            ls.line(m).end(), std::back_inserter(common));
      if (common.size() != 1) return false;
    }
  }
  for (int p = 0; p < ls.point_count(); ++p)
    if (ls.lines_through(p).size() < 3) return false;
  return true;
}

bool is_affine_plane(const LineSpace& ls) {
  if (!is_linear_space(ls)) return false;
  for (int p = 0; p < ls.point_count(); ++p)
    if (ls.lines_through(p).size() < 2) return false;
  for (int l = 0; l < ls.line_count(); ++l) {
    if (ls.line(l).size() < 2) return false;
    for (int p = 0; p < ls.point_count(); ++p) {
      if (ls.incident(p, l)) continue;
      // Exactly one line through p disjoint from l.
      int parallels = 0;
      for (int m : ls.lines_through(p)) {
        std::vector<int> common;
        std::set_intersection(ls.line(l).begin(), ls.line(l).end(), ls.line(m).begin(),
                              ls.line(m).end(), std::back_inserter(common));
        if (common.empty()) ++parallels;
      }
      if (parallels != 1) return false;
    }
  }
  return true;
}

int ChamberSystem::flag_index(int p, int l) const {
  auto it = index.find({p, l});
  if (it == index.end()) throw Error("chamber system: no such flag");
  return it->second;
}

ChamberSystem chamber_system(const LineSpace& ls) {
  std::vector<Flag> flags;
  for (int p = 0; p < ls.point_count(); ++p)
    for (int l : ls.lines_through(p)) flags.push_back({p, l});
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < flags.size(); ++i) index[{flags[i].p, flags[i].l}] = i;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < flags.size(); ++i)
    for (std::size_t j = i + 1; j < flags.size(); ++j) {
      if (flags[i].l == flags[j].l)
        edges.push_back({static_cast<int>(i), static_cast<int>(j), 1});
      else if (flags[i].p == flags[j].p)
        edges.push_back({static_cast<int>(i), static_cast<int>(j), 2});
    }
  return ChamberSystem{EdgeColouredGraph(static_cast<int>(flags.size()), 2, std::move(edges)),
                       std::move(flags), std::move(index)};
}

LineSpace projective_plane(long q) {
  const FiniteField F = FiniteField::make(q);
  // Normalized representatives of 1-dimensional subspaces of F_q^3.
  std::vector<std::array<int, 3>> points;
  for (int b = 0; b < q; ++b)
    for (int c = 0; c < q; ++c) points.push_back({1, b, c});
  for (int c = 0; c < q; ++c) points.push_back({0, 1, c});
  points.push_back({0, 0, 1});
  std::map<std::array<int, 3>, int> pindex;
  for (std::size_t i = 0; i < points.size(); ++i) pindex[points[i]] = i;

  std::vector<std::vector<int>> lines;
  // 2-dimensional subspaces as kernels of the normalized functionals.
  std::vector<std::array<int, 3>> functionals = points;
  for (const auto& f : functionals) {
    std::vector<int> line;
    for (std::size_t i = 0; i < points.size(); ++i) {
      int s = F.add(F.add(F.mul(f[0], points[i][0]), F.mul(f[1], points[i][1])),
                    F.mul(f[2], points[i][2]));
      if (s == 0) line.push_back(static_cast<int>(i));
    }
    lines.push_back(std::move(line));
  }
  return LineSpace(static_cast<int>(points.size()), std::move(lines));
}

LineSpace affine_plane(long q) {
  const FiniteField F = FiniteField::make(q);
  auto pidx = [&](int x, int y) { return static_cast<int>(x * q + y); };
  std::vector<std::vector<int>> lines;
  for (int c = 0; c < q; ++c) {
    std::vector<int> vertical;
    for (int y = 0; y < q; ++y) vertical.push_back(pidx(c, y));
    lines.push_back(std::move(vertical));
  }
  for (int m = 0; m < q; ++m)
    for (int c = 0; c < q; ++c) {
      std::vector<int> line;
      for (int x = 0; x < q; ++x) line.push_back(pidx(x, F.add(F.mul(m, x), c)));
      lines.push_back(std::move(line));
    }
  return LineSpace(static_cast<int>(q * q), std::move(lines));
}

LineSpace clique_plane(long q) {
  if (q < 2) throw Error("clique plane: order must be >= 2");
  const int n = static_cast<int>(q) + 2;
  std::vector<std::vector<int>> lines;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) lines.push_back({i, j});
  return LineSpace(n, std::move(lines));
}

namespace {

std::vector<std::pair<int, int>> kneser_pairs() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
  return pairs;
}

}  // namespace

LineSpace petersen_linespace() {
  const auto pairs = kneser_pairs();
  std::vector<std::vector<int>> lines;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto& a = pairs[i];
      const auto& b = pairs[j];
      const bool disjoint = a.first != b.first && a.first != b.second && a.second != b.first &&
                            a.second != b.second;
      if (disjoint) lines.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  return LineSpace(static_cast<int>(pairs.size()), std::move(lines));
}

PermutationAction induced_flag_action(const LineSpace& ls, const ChamberSystem& cs,
                                      const std::vector<Permutation>& point_perms) {
  std::vector<Permutation> flag_perms;
  for (const auto& pi : point_perms) {
    if (static_cast<int>(pi.size()) != ls.point_count())
      throw Error("induced_flag_action: point permutation degree mismatch");
    if (is_identity(pi)) continue;
    std::vector<int> line_image(ls.line_count());
    for (int l = 0; l < ls.line_count(); ++l) {
      std::vector<int> img;
      for (int p : ls.line(l)) img.push_back(pi[p]);
      std::sort(img.begin(), img.end());
      const int li = ls.line_index(img);
      if (li < 0) throw Error("induced_flag_action: permutation does not preserve lines");
      line_image[l] = li;
    }
    Permutation fp(cs.flags.size());
    for (std::size_t i = 0; i < cs.flags.size(); ++i)
      fp[i] = cs.flag_index(pi[cs.flags[i].p], line_image[cs.flags[i].l]);
    flag_perms.push_back(std::move(fp));
  }
  if (flag_perms.empty()) flag_perms.push_back(identity_perm(static_cast<int>(cs.flags.size())));
  return PermutationAction(static_cast<int>(cs.flags.size()), std::move(flag_perms));
}

PermutationAction affine_symmetries(long q) {
  const FiniteField F = FiniteField::make(q);
  const LineSpace ls = affine_plane(q);
  const ChamberSystem cs = chamber_system(ls);
  auto pidx = [&](int x, int y) { return static_cast<int>(x * q + y); };
  std::vector<Permutation> point_perms;
  auto add_map = [&](auto&& f) {
    Permutation pi(ls.point_count());
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) {
        auto [nx, ny] = f(x, y);
        pi[pidx(x, y)] = pidx(nx, ny);
      }
    point_perms.push_back(std::move(pi));
  };
  add_map([&](int x, int y) { return std::pair(F.add(x, 1), y); });
  add_map([&](int x, int y) { return std::pair(x, F.add(y, 1)); });
  // Transvections and a diagonal scaling generate GL_2(F_q).
  add_map([&](int x, int y) { return std::pair(F.add(x, y), y); });
  add_map([&](int x, int y) { return std::pair(x, F.add(y, x)); });
  const int g = F.generator();
  add_map([&](int x, int y) { return std::pair(F.mul(g, x), y); });
  return induced_flag_action(ls, cs, point_perms);
}

PermutationAction projective_symmetries(long q) {
  const FiniteField F = FiniteField::make(q);
  const LineSpace ls = projective_plane(q);
  const ChamberSystem cs = chamber_system(ls);
  // Re-enumerate the normalized point representatives the same way the
  // constructor does.
  std::vector<std::array<int, 3>> points;
  for (int b = 0; b < q; ++b)
    for (int c = 0; c < q; ++c) points.push_back({1, b, c});
  for (int c = 0; c < q; ++c) points.push_back({0, 1, c});
  points.push_back({0, 0, 1});
  std::map<std::array<int, 3>, int> pindex;
  for (std::size_t i = 0; i < points.size(); ++i) pindex[points[i]] = i;
  auto normalize = [&](std::array<int, 3> v) {
    int lead = 0;
    for (int k = 0; k < 3; ++k)
      if (v[k] != 0) {
        lead = v[k];
        break;
      }
    const int s = F.inv(lead);
    for (int k = 0; k < 3; ++k) v[k] = F.mul(s, v[k]);
    return v;
  };
  std::vector<Permutation> point_perms;
  auto add_matrix = [&](const std::array<std::array<int, 3>, 3>& A) {
    Permutation pi(ls.point_count());
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::array<int, 3> w{};
      for (int r = 0; r < 3; ++r) {
        int s = 0;
        for (int c = 0; c < 3; ++c) s = F.add(s, F.mul(A[r][c], points[i][c]));
        w[r] = s;
      }
      pi[i] = pindex.at(normalize(w));
    }
    point_perms.push_back(std::move(pi));
  };
  add_matrix({{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}});  // transvection
  add_matrix({{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}});  // coordinate 3-cycle
  const int g = F.generator();
  add_matrix({{{g, 0, 0}, {0, 1, 0}, {0, 0, 1}}});  // diagonal scaling
  return induced_flag_action(ls, cs, point_perms);
}

PermutationAction clique_symmetries(long q) {
  const LineSpace ls = clique_plane(q);
  const int n = static_cast<int>(q) + 2;
  Permutation swap01 = identity_perm(n);
  std::swap(swap01[0], swap01[1]);
  Permutation cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return induced_flag_action(ls, chamber_system(ls), {swap01, cycle});
}

PermutationAction petersen_symmetries() {
  const LineSpace ls = petersen_linespace();
  const auto pairs = kneser_pairs();
  std::map<std::pair<int, int>, int> pair_index;
  for (std::size_t i = 0; i < pairs.size(); ++i) pair_index[pairs[i]] = i;
  auto induced_on_pairs = [&](const Permutation& ground) {
    Permutation pi(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      int a = ground[pairs[i].first], b = ground[pairs[i].second];
      if (a > b) std::swap(a, b);
      pi[i] = pair_index.at({a, b});
    }
    return pi;
  };
  Permutation swap01 = identity_perm(5);
  std::swap(swap01[0], swap01[1]);
  Permutation cycle(5);
  for (int i = 0; i < 5; ++i) cycle[i] = (i + 1) % 5;
  return induced_flag_action(ls, chamber_system(ls),
                             {induced_on_pairs(swap01), induced_on_pairs(cycle)});
}

}  // namespace cohconf
