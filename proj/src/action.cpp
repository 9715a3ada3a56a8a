#include "cohconf/action.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace cohconf {

Permutation identity_perm(int degree) {
  Permutation p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error("permutation compose: degree mismatch");
  Permutation c(a.size());
  for (std::size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
  return c;
}

Permutation inverse_perm(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) inv[p[x]] = static_cast<int>(x);
  return inv;
}

void validate_permutation(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (int img : p) {
    if (img < 0 || img >= static_cast<int>(p.size()) || seen[img])
      throw Error("not a permutation");
    seen[img] = 1;
  }
}

PermutationAction::PermutationAction(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ < 0) throw Error("action: negative degree");
  if (generators_.empty()) throw Error("action: empty generator list");
  for (const auto& g : generators_) {
    if (static_cast<int>(g.size()) != degree_) throw Error("action: generator degree mismatch");
    validate_permutation(g);
  }
}

std::vector<std::vector<int>> orbit_partition(const PermutationAction& a,
                                              const std::vector<int>& seeds) {
  std::vector<char> done(a.degree(), 0);
  std::vector<std::vector<int>> orbits;
  auto expand = [&](int s) {
    if (s < 0 || s >= a.degree()) throw Error("orbit_partition: seed out of range");
    if (done[s]) return;
    std::vector<int> orbit;
    std::queue<int> q;
    q.push(s);
    done[s] = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      orbit.push_back(u);
      for (const auto& g : a.generators()) {
        const int v = g[u];
        if (!done[v]) {
          done[v] = 1;
          q.push(v);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  };
  for (int s : seeds) expand(s);
  for (int s = 0; s < a.degree(); ++s) expand(s);
  return orbits;
}

StabilizerData stabilizer(const PermutationAction& a, int x0) {
  if (x0 < 0 || x0 >= a.degree()) throw Error("stabilizer: base point out of range");
  StabilizerData s;
  s.base_point = x0;
  s.transversal_words.assign(a.degree(), {});
  s.in_orbit.assign(a.degree(), 0);
  s.in_orbit[x0] = 1;
  s.orbit.push_back(x0);
  std::vector<Permutation> transversal(a.degree());
  transversal[x0] = identity_perm(a.degree());
  for (std::size_t head = 0; head < s.orbit.size(); ++head) {
    const int u = s.orbit[head];
    for (std::size_t gi = 0; gi < a.generators().size(); ++gi) {
      const auto& g = a.generators()[gi];
      const int v = g[u];
      if (!s.in_orbit[v]) {
        s.in_orbit[v] = 1;
        s.orbit.push_back(v);
        s.transversal_words[v] = s.transversal_words[u];
        s.transversal_words[v].push_back(static_cast<int>(gi));
        transversal[v] = compose(g, transversal[u]);
      }
    }
  }
  std::set<Permutation> dedup;
  for (int u : s.orbit)
    for (const auto& g : a.generators()) {
      // Schreier generator at (u, g); it fixes x0 by construction.
      Permutation sg = compose(inverse_perm(transversal[g[u]]), compose(g, transversal[u]));
      if (!is_identity(sg) && dedup.insert(sg).second)
        s.stabilizer_generators.push_back(std::move(sg));
    }
  return s;
}

Permutation transversal_perm(const PermutationAction& a, const StabilizerData& s, int v) {
  if (v < 0 || v >= a.degree() || !s.in_orbit[v])
    throw Error("transversal_perm: vertex outside the orbit");
  Permutation p = identity_perm(a.degree());
  for (int gi : s.transversal_words[v]) p = compose(a.generators()[gi], p);
  return p;
}

namespace {

Integer group_order_impl(std::vector<Permutation> gens, int degree) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), is_identity), gens.end());
  if (gens.empty()) return 1;
  std::set<Permutation> dedup(gens.begin(), gens.end());
  gens.assign(dedup.begin(), dedup.end());
  int moved = -1;
  for (int x = 0; x < degree && moved < 0; ++x)
    for (const auto& g : gens)
      if (g[x] != x) {
        moved = x;
        break;
      }
  PermutationAction act(degree, gens);
  StabilizerData s = stabilizer(act, moved);
  return Integer(static_cast<long>(s.orbit.size())) *
         group_order_impl(std::move(s.stabilizer_generators), degree);
}

}  // namespace

Integer group_order(const PermutationAction& a) {
  return group_order_impl(a.generators(), a.degree());
}

bool is_colour_preserving(const PermutationAction& a, const EdgeColouredGraph& g) {
  if (a.degree() != g.vertex_count())
    throw Error("is_colour_preserving: degree does not match vertex count");
  for (const auto& p : a.generators())
    for (const auto& e : g.edges())
      if (g.edge_colour(p[e.u], p[e.v]) != e.colour) return false;
  return true;
}

StrongTransitivityReport strong_transitivity_report(const EdgeColouredGraph& g,
                                                    const PermutationAction& a,
                                                    const AlgebraBasis& ab, int base_point) {
  if (!is_colour_preserving(a, g))
    throw Error("strong_transitivity_report: action is not colour-preserving");
  StrongTransitivityReport r;
  r.transitive = orbit_partition(a).size() == 1;
  StabilizerData s = stabilizer(a, base_point);
  std::vector<Permutation> bgens = s.stabilizer_generators;
  if (bgens.empty()) bgens.push_back(identity_perm(a.degree()));
  r.b_orbit_count = orbit_partition(PermutationAction(a.degree(), bgens)).size();
  r.algebra_dim = ab.dim();
  r.strongly_transitive = r.transitive && r.b_orbit_count == r.algebra_dim;
  return r;
}

EdgeColouredGraph cayley_graph(const std::vector<Permutation>& generators, bool involution_check) {
  if (generators.empty()) throw Error("cayley_graph: no generators");
  const std::size_t degree = generators[0].size();
  std::set<Permutation> distinct;
  for (const auto& g : generators) {
    if (g.size() != degree) throw Error("cayley_graph: generator degree mismatch");
    validate_permutation(g);
    if (is_identity(g)) throw Error("cayley_graph: identity generator");
    if (!distinct.insert(g).second) throw Error("cayley_graph: duplicate generator");
    if (involution_check && !is_identity(compose(g, g)))
      throw Error("cayley_graph: generator is not an involution");
  }
  std::vector<Permutation> elements{identity_perm(static_cast<int>(degree))};
  std::map<Permutation, int> index{{elements[0], 0}};
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen_pairs;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    const Permutation x = elements[head];
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      Permutation y = compose(generators[gi], x);
      auto it = index.find(y);
      int yi;
      if (it == index.end()) {
        yi = static_cast<int>(elements.size());
        index.emplace(y, yi);
        elements.push_back(std::move(y));
      } else {
        yi = it->second;
      }
      const int a = std::min(static_cast<int>(head), yi), b = std::max(static_cast<int>(head), yi);
      if (seen_pairs.insert({a, b}).second)
        edges.push_back({a, b, static_cast<int>(gi) + 1});
    }
  }
  return EdgeColouredGraph(static_cast<int>(elements.size()),
                           static_cast<int>(generators.size()), std::move(edges));
}

}  // namespace cohconf
