#include <set>

#include "cohconf/action.hpp"
#include "cohconf/configuration.hpp"
#include "cohconf/geometry.hpp"
#include "doctest.h"

using namespace cohconf;

namespace {

AlgebraBasis chamber_algebra(const EdgeColouredGraph& g) {
  std::vector<RatMatrix> gens;
  for (int c = 1; c <= g.colour_count(); ++c) gens.push_back(adjacency_operator(g, c));
  const std::size_t n = g.vertex_count();
  return AlgebraBasis::closure(std::move(gens), n * n);
}

PermutationAction stabilizer_action(const PermutationAction& a, int x0) {
  StabilizerData s = stabilizer(a, x0);
  if (s.stabilizer_generators.empty())
    return PermutationAction(a.degree(), {identity_perm(a.degree())});
  return PermutationAction(a.degree(), s.stabilizer_generators);
}

}  // namespace

TEST_CASE("permutation primitives") {
  const Permutation p = {1, 2, 0};
  CHECK(compose(p, inverse_perm(p)) == identity_perm(3));
  CHECK_THROWS_AS(validate_permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(PermutationAction(3, {}), Error);
  CHECK_THROWS_AS(PermutationAction(3, {{0, 1}}), Error);
}

TEST_CASE("orbit partition") {
  const PermutationAction transitive = petersen_symmetries();
  const auto orbits = orbit_partition(transitive);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].size() == 30);

  // B-orbits at the base flag: 11 of them.
  CHECK(orbit_partition(stabilizer_action(transitive, 0)).size() == 11);

  // AGL_2(F_2)-stabilizer orbits on the 12 flags: 7 of them.
  CHECK(orbit_partition(stabilizer_action(affine_symmetries(2), 0)).size() == 7);
}

TEST_CASE("stabilizer data") {
  const PermutationAction pet = petersen_symmetries();
  const StabilizerData s = stabilizer(pet, 0);
  CHECK(s.orbit.size() == 30);
  for (const auto& g : s.stabilizer_generators) CHECK(g[0] == 0);
  const PermutationAction b = stabilizer_action(pet, 0);
  CHECK(group_order(b) == 4);
  // B is elementary abelian of exponent 2.
  for (const auto& g : b.generators()) CHECK(is_identity(compose(g, g)));

  // Transversal elements reach their vertex.
  for (int v : {0, 7, 29}) CHECK(transversal_perm(pet, s, v)[0] == v);

  // Trivial group: no Schreier generators survive.
  const PermutationAction trivial(5, {identity_perm(5)});
  CHECK(stabilizer(trivial, 2).stabilizer_generators.empty());
  CHECK(stabilizer(trivial, 2).orbit == std::vector<int>{2});
}

TEST_CASE("group order") {
  CHECK(group_order(petersen_symmetries()) == 120);
  CHECK(group_order(affine_symmetries(2)) == 24);
  CHECK(group_order(PermutationAction(4, {identity_perm(4)})) == 1);
  // Orbit-stabilizer: |orbit| * |stabilizer| = |G|.
  const PermutationAction cl = clique_symmetries(2);
  CHECK(group_order(cl) == 24);
  CHECK(group_order(stabilizer_action(cl, 0)) * 12 == 24);
}

TEST_CASE("colour preservation") {
  const ChamberSystem cs = chamber_system(clique_plane(2));
  CHECK(is_colour_preserving(clique_symmetries(2), cs.graph));

  // A transposition of two flags that breaks an edge.
  Permutation bad = identity_perm(12);
  std::swap(bad[0], bad[5]);
  CHECK_FALSE(is_colour_preserving(PermutationAction(12, {bad}), cs.graph));

  // The order-2 automorphism of the no-architecture graph.
  const EdgeColouredGraph noarch(3, 2, {{0, 1, 1}, {0, 2, 1}, {1, 2, 2}});
  CHECK(is_colour_preserving(PermutationAction(3, {{0, 2, 1}}), noarch));
  CHECK_THROWS_AS(is_colour_preserving(PermutationAction(4, {identity_perm(4)}), noarch),
                  Error);
}

TEST_CASE("strong transitivity reports") {
  const ChamberSystem pet = chamber_system(petersen_linespace());
  const AlgebraBasis pet_ab = chamber_algebra(pet.graph);
  const auto pr = strong_transitivity_report(pet.graph, petersen_symmetries(), pet_ab);
  CHECK(pr.transitive);
  CHECK(pr.b_orbit_count == 11);
  CHECK(pr.algebra_dim == 11);
  CHECK(pr.strongly_transitive);

  for (long q : {2L, 3L}) {
    const ChamberSystem ag = chamber_system(affine_plane(q));
    const auto r =
        strong_transitivity_report(ag.graph, affine_symmetries(q), chamber_algebra(ag.graph));
    CHECK(r.b_orbit_count == 7);
    CHECK(r.strongly_transitive);
  }

  // A cyclic subgroup of S_4 on the clique-plane flags: transitive it is not.
  const ChamberSystem cl = chamber_system(clique_plane(2));
  const LineSpace ls = clique_plane(2);
  const ChamberSystem cs = chamber_system(ls);
  const Permutation cycle4 = {1, 2, 3, 0};
  const PermutationAction c4 = induced_flag_action(ls, cs, {cycle4});
  const auto cr = strong_transitivity_report(cl.graph, c4, chamber_algebra(cl.graph));
  CHECK_FALSE(cr.transitive);
  CHECK_FALSE(cr.strongly_transitive);
  CHECK(cr.b_orbit_count != cr.algebra_dim);
}

TEST_CASE("b-orbit count is base-point independent") {
  const ChamberSystem pet = chamber_system(petersen_linespace());
  const AlgebraBasis ab = chamber_algebra(pet.graph);
  const PermutationAction a = petersen_symmetries();
  for (int base : {0, 11, 29})
    CHECK(strong_transitivity_report(pet.graph, a, ab, base).b_orbit_count == 11);
}

TEST_CASE("cayley graph of S3 is the alternating hexagon") {
  const Permutation s1 = {1, 0, 2}, s2 = {0, 2, 1};
  const EdgeColouredGraph g = cayley_graph({s1, s2}, true);
  CHECK(g.vertex_count() == 6);
  CHECK(g.colour_count() == 2);
  const auto orders = regularity_orders(g);
  REQUIRE(orders);
  CHECK(*orders == std::vector<int>{1, 1});
  CHECK(g.is_connected());
  const AlgebraBasis ab = chamber_algebra(g);
  CHECK(ab.dim() == 6);
  for (const auto& rel : hecke_presentation({{1, 3}, {3, 1}}, {1, 1}))
    CHECK(check_relation(ab, rel));
}

TEST_CASE("cayley graph edge cases") {
  CHECK(cayley_graph({{1, 0}}, true).vertex_count() == 2);  // C_2 gives K_2
  CHECK_THROWS_AS(cayley_graph({{1, 2, 0}}, true), Error);  // not an involution
  CHECK(cayley_graph({{1, 2, 0}}, false).vertex_count() == 3);
  CHECK_THROWS_AS(cayley_graph({identity_perm(3)}, false), Error);
  CHECK_THROWS_AS(cayley_graph({{1, 0}, {1, 0}}, true), Error);  // duplicate generator
}

TEST_CASE("cayley graph of C2 x C2 equals the product of two K2") {
  // Generators chosen so that BFS enumeration lines up with pair indexing.
  const Permutation g1 = {2, 3, 0, 1}, g2 = {1, 0, 3, 2};
  const EdgeColouredGraph cay = cayley_graph({g1, g2}, true);
  const EdgeColouredGraph prod = graph_product(complete_graph(2), complete_graph(2));
  REQUIRE(cay.vertex_count() == 4);
  // BFS order is id, g1, g2, g1g2, matching pair indices (a,b) -> 2a + b
  // under id->(0,0), g1->(1,0)... the relabelling [0,2,1,3].
  const std::vector<int> relabel = {0, 2, 1, 3};
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      CHECK(cay.edge_colour(u, v) == prod.edge_colour(relabel[u], relabel[v]));
  const AlgebraBasis ab = chamber_algebra(cay);
  CHECK(ab.dim() == 4);
  const RelationPolynomial commute({{Rational(1), {1, 2}}, {Rational(-1), {2, 1}}});
  CHECK(check_relation(ab, commute));
}

TEST_CASE("orbit partition honours seed ordering") {
  // Two 3-cycles on disjoint supports.
  const PermutationAction a(6, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}});
  const auto plain = orbit_partition(a);
  REQUIRE(plain.size() == 2);
  CHECK(plain[0] == std::vector<int>{0, 1, 2});
  const auto seeded = orbit_partition(a, {4});
  CHECK(seeded[0] == std::vector<int>{3, 4, 5});
  CHECK(seeded[1] == std::vector<int>{0, 1, 2});
}
