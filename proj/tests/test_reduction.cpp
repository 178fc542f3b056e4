#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latlas/degree_reduction.hpp"
#include "support/groups.hpp"

using latlas::Homomorphism;
using latlas::Perm;
using latlas::PermGroup;
using latlas::Point;
using testgroups::cyc;

TEST_CASE("minimal block system of D8 on the square") {
  PermGroup d8(4, {cyc("(1,2,3,4)", 4), cyc("(1,3)", 4)});
  // 0 with its antipode 2: the two diagonals
  auto blocks = latlas::minimal_block_system(d8, 0, 2);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<Point>{0, 2});
  CHECK(blocks[1] == std::vector<Point>{1, 3});
  // 0 with a neighbour: adjacent points force everything together
  CHECK(latlas::minimal_block_system(d8, 0, 1).size() == 1);
}

TEST_CASE("primitive groups have no nontrivial blocks") {
  PermGroup s5 = testgroups::symmetric(5);
  for (Point b = 1; b < 5; ++b)
    CHECK(latlas::minimal_block_system(s5, 0, b).size() == 1);
}

TEST_CASE("block action of D8 on its diagonals is S2") {
  PermGroup d8(4, {cyc("(1,2,3,4)", 4), cyc("(1,3)", 4)});
  auto blocks = latlas::minimal_block_system(d8, 0, 2);
  Homomorphism act = latlas::block_action(d8, blocks);
  CHECK(act.image().degree() == 2);
  CHECK(act.image().order() == 2);
  CHECK(act.kernel().order() == 4);
}

TEST_CASE("orbit restriction drops a redundant orbit") {
  // S3 acting on {1,2,3} and diagonally on {4,5,6}: either orbit is faithful
  PermGroup g(6, {cyc("(1,2)(4,5)", 6), cyc("(1,2,3)(4,5,6)", 6)});
  Homomorphism r = latlas::reduce_degree(g);
  CHECK(r.image().degree() == 3);
  CHECK(r.is_isomorphism());
  CHECK(r.image().order() == 6);
}

TEST_CASE("orbit restriction keeps orbits that are jointly needed") {
  // C2 x C2 where each factor acts on its own pair: both orbits needed
  PermGroup g = testgroups::elementary_abelian_2(2);
  Homomorphism r = latlas::reduce_degree(g);
  CHECK(r.is_isomorphism());
  CHECK(r.image().degree() == 4);
}

TEST_CASE("regular S4 reduces to a faithful action of degree at most 8") {
  PermGroup reg = testgroups::s4_regular();
  Homomorphism r = latlas::reduce_degree(reg);
  CHECK(r.is_isomorphism());
  CHECK(r.image().order() == 24);
  CHECK(r.image().degree() <= 8);
  // mapping round-trips
  for (const auto& g : reg.generators())
    CHECK(r.apply(r.preimage(r.apply(g))) == r.apply(g));
}

TEST_CASE("reduction of an already-minimal action is the identity map") {
  PermGroup m11 = testgroups::m11();
  Homomorphism r = latlas::reduce_degree(m11);
  CHECK(r.is_isomorphism());
  CHECK(r.image().degree() == 11);
}

TEST_CASE("reduction result is deterministic") {
  PermGroup reg = testgroups::s4_regular();
  Homomorphism a = latlas::reduce_degree(reg);
  Homomorphism b = latlas::reduce_degree(reg);
  CHECK(a.image().degree() == b.image().degree());
  for (size_t i = 0; i < a.generator_images().size(); ++i)
    CHECK(a.generator_images()[i] == b.generator_images()[i]);
}

TEST_CASE("compose chains two homomorphisms") {
  PermGroup s4 = testgroups::symmetric(4);
  Homomorphism sgn =
      Homomorphism::from_gen_images(s4, 2, {cyc("(1,2)", 2), cyc("(1,2)", 2)});
  Homomorphism idm = Homomorphism::identity(sgn.image());
  Homomorphism c = latlas::compose(sgn, idm);
  CHECK(c.image().order() == 2);
  CHECK(c.kernel_order() == 12);
}
