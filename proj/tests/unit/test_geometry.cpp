#include <set>

#include "cohconf/geometry.hpp"
#include "doctest.h"

using namespace cohconf;

TEST_CASE("finite fields") {
  const FiniteField f4 = FiniteField::make(4);
  CHECK(f4.p() == 2);
  CHECK(f4.degree() == 2);
  CHECK(f4.modulus() == std::vector<int>{1, 1});  // x^2 + x + 1
  const FiniteField f8 = FiniteField::make(8);
  CHECK(f8.modulus() == std::vector<int>{1, 1, 0});  // x^3 + x + 1

  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
    const FiniteField f = FiniteField::make(q);
    for (int a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    for (int a = 0; a < q; ++a) CHECK(f.add(a, f.neg(a)) == 0);
    // Multiplicative generator has full order.
    int e = f.generator();
    int ord = 1;
    while (e != 1) {
      e = f.mul(e, f.generator());
      ++ord;
    }
    CHECK(ord == q - 1);
  }
  CHECK_THROWS_AS(FiniteField::make(6), Error);
  CHECK_THROWS_AS(FiniteField::make(1), Error);
}

TEST_CASE("projective planes") {
  const LineSpace fano = projective_plane(2);
  CHECK(fano.point_count() == 7);
  CHECK(fano.line_count() == 7);
  for (const auto& l : fano.lines()) CHECK(l.size() == 3);
  CHECK(is_projective_plane(fano));

  const LineSpace pg3 = projective_plane(3);
  CHECK(pg3.point_count() == 13);
  CHECK(pg3.line_count() == 13);
  for (const auto& l : pg3.lines()) CHECK(l.size() == 4);
  CHECK(is_projective_plane(pg3));
  CHECK_FALSE(is_affine_plane(pg3));

  CHECK_THROWS_AS(projective_plane(6), Error);
}

TEST_CASE("affine planes") {
  const LineSpace ag2 = affine_plane(2);
  CHECK(ag2.point_count() == 4);
  CHECK(ag2.line_count() == 6);
  for (const auto& l : ag2.lines()) CHECK(l.size() == 2);
  CHECK(is_affine_plane(ag2));

  const LineSpace ag3 = affine_plane(3);
  CHECK(ag3.point_count() == 9);
  CHECK(ag3.line_count() == 12);
  for (const auto& l : ag3.lines()) CHECK(l.size() == 3);
  CHECK(is_affine_plane(ag3));
  CHECK(is_affine_plane(affine_plane(4)));
  CHECK_FALSE(is_projective_plane(ag3));

  CHECK_THROWS_AS(affine_plane(6), Error);
}

TEST_CASE("clique planes and the Petersen line space") {
  const LineSpace c2 = clique_plane(2);
  CHECK(c2.point_count() == 4);
  CHECK(c2.line_count() == 6);
  const LineSpace c3 = clique_plane(3);
  CHECK(c3.point_count() == 5);
  CHECK(c3.line_count() == 10);
  CHECK_THROWS_AS(clique_plane(1), Error);

  const LineSpace pet = petersen_linespace();
  CHECK(pet.point_count() == 10);
  CHECK(pet.line_count() == 15);
  for (const auto& l : pet.lines()) CHECK(l.size() == 2);
  // As a plain graph: 3-regular.
  for (int p = 0; p < 10; ++p) CHECK(pet.lines_through(p).size() == 3);
}

TEST_CASE("chamber systems of the builtin geometries") {
  const ChamberSystem pg2 = chamber_system(projective_plane(2));
  CHECK(pg2.graph.vertex_count() == 21);
  const ChamberSystem ag2 = chamber_system(affine_plane(2));
  CHECK(ag2.graph.vertex_count() == 12);
  const ChamberSystem pet = chamber_system(petersen_linespace());
  CHECK(pet.graph.vertex_count() == 30);
  const ChamberSystem cl2 = chamber_system(clique_plane(2));
  CHECK(cl2.graph.vertex_count() == 12);

  for (const EdgeColouredGraph* g : {&pg2.graph, &ag2.graph, &pet.graph, &cl2.graph}) {
    CHECK(is_chamber_system(*g));
    CHECK(g->is_connected());
  }

  const auto pet_orders = regularity_orders(pet.graph);
  REQUIRE(pet_orders);
  CHECK(*pet_orders == std::vector<int>{1, 2});
  const auto cl_orders = regularity_orders(cl2.graph);
  REQUIRE(cl_orders);
  CHECK(*cl_orders == std::vector<int>{1, 2});

  // Flag order is lexicographic by (point, line).
  for (std::size_t i = 1; i < ag2.flags.size(); ++i) {
    const Flag &a = ag2.flags[i - 1], &b = ag2.flags[i];
    CHECK((a.p < b.p || (a.p == b.p && a.l < b.l)));
  }
}

TEST_CASE("chamber system rejects a line space where a colour never occurs") {
  // A single line: no two lines through a common point, so colour 2 is empty.
  const LineSpace single(3, {{0, 1, 2}});
  CHECK_THROWS_AS(chamber_system(single), Error);
}

TEST_CASE("line spaces canonicalize and validate") {
  const LineSpace ls(4, {{1, 0}, {0, 1}, {2, 3}});  // duplicate after sorting
  CHECK(ls.line_count() == 2);
  CHECK_THROWS_AS(LineSpace(3, {{1}}), Error);
  CHECK_THROWS_AS(LineSpace(3, {{0, 5}}), Error);
  CHECK(ls.incident(0, 0));
  CHECK(ls.line_index({2, 3}) == 1);
  CHECK(ls.line_index({0, 2}) == -1);
}

TEST_CASE("symmetry actions preserve colours and have the right orders") {
  struct Case {
    PermutationAction action;
    const EdgeColouredGraph* graph;
    long order;
  };
  const ChamberSystem pet = chamber_system(petersen_linespace());
  const ChamberSystem ag2 = chamber_system(affine_plane(2));
  const ChamberSystem cl2 = chamber_system(clique_plane(2));
  const ChamberSystem pg2 = chamber_system(projective_plane(2));

  const Case cases[] = {
      {petersen_symmetries(), &pet.graph, 120},     // S_5
      {affine_symmetries(2), &ag2.graph, 24},       // F_2^2 : GL_2(F_2)
      {clique_symmetries(2), &cl2.graph, 24},       // S_4
      {projective_symmetries(2), &pg2.graph, 168},  // PGL_3(F_2) = GL_3(F_2)
  };
  for (const auto& c : cases) {
    CHECK(is_colour_preserving(c.action, *c.graph));
    CHECK(group_order(c.action) == c.order);
    CHECK(orbit_partition(c.action).size() == 1);
  }
}

TEST_CASE("larger symmetry groups") {
  CHECK(group_order(affine_symmetries(3)) == 9 * 48);  // AGL_2(F_3)
  CHECK(group_order(projective_symmetries(3)) == 5616);  // PGL_3(F_3): scalars act trivially
  CHECK(orbit_partition(projective_symmetries(3)).size() == 1);
  CHECK(projective_symmetries(3).degree() == 52);
  CHECK(group_order(clique_symmetries(3)) == 120);       // S_5
  CHECK(group_order(affine_symmetries(4)) == 16 * 180);  // AGL_2(F_4)
}
