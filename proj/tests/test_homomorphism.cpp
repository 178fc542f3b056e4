#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latlas/homomorphism.hpp"
#include "support/groups.hpp"

using latlas::Homomorphism;
using latlas::Perm;
using latlas::PermGroup;
using latlas::Point;
using testgroups::cyc;

TEST_CASE("identity homomorphism") {
  PermGroup s4 = testgroups::symmetric(4);
  Homomorphism id = Homomorphism::identity(s4);
  CHECK(id.is_isomorphism());
  CHECK(id.kernel().is_trivial());
  Perm p = cyc("(1,3,2)", 4);
  CHECK(id.apply(p) == p);
  CHECK(id.preimage(p) == p);
}

TEST_CASE("sign map S4 -> S2: apply, kernel, preimage") {
  PermGroup s4 = testgroups::symmetric(4);
  // (1,2) -> (1,2), 4-cycle -> (1,2)  (odd permutations swap)
  Homomorphism sgn =
      Homomorphism::from_gen_images(s4, 2, {cyc("(1,2)", 2), cyc("(1,2)", 2)});
  CHECK(sgn.image().order() == 2);
  CHECK(sgn.kernel_order() == 12);
  CHECK(sgn.kernel().order() == 12);

  for (const auto& e : s4.elements(100)) {
    bool even = sgn.apply(e).is_identity();
    // parity from fixed-point count: sign = (-1)^(n - #cycles)
    std::vector<bool> seen(4, false);
    int ncyc = 0;
    for (Point i = 0; i < 4; ++i) {
      if (seen[i]) continue;
      ++ncyc;
      for (Point j = i; !seen[j]; j = e[j]) seen[j] = true;
    }
    bool even0 = ((4 - ncyc) % 2) == 0;
    CHECK(even == even0);
  }

  // preimage of the nontrivial image element is odd and maps back
  Perm pre = sgn.preimage(cyc("(1,2)", 2));
  CHECK(sgn.apply(pre) == cyc("(1,2)", 2));
  CHECK(s4.contains(pre));

  // kernel is exactly A4
  PermGroup a4 = testgroups::alternating(4);
  CHECK(sgn.kernel().is_subgroup_of(a4));

  // full preimage of the whole image is the source
  CHECK(sgn.preimage_group(sgn.image()).order() == 24);
}

TEST_CASE("inconsistent generator images are rejected") {
  PermGroup s4 = testgroups::symmetric(4);
  // (1,2) has order 2 but its image would have order 3
  CHECK_THROWS_AS(Homomorphism::from_gen_images(
                      s4, 3, {cyc("(1,2,3)", 3), cyc("(1,2)", 3)}),
                  latlas::error);
  CHECK_THROWS_AS(Homomorphism::from_gen_images(s4, 3, {cyc("(1,2)", 3)}),
                  latlas::error);
}

TEST_CASE("apply is multiplicative and rejects outsiders") {
  PermGroup a4 = testgroups::alternating(4);
  // A4 -> C3 = A4 / V4; (1,2,3)(2,3,4) lies in V4, so the images are inverse
  Homomorphism f = Homomorphism::from_gen_images(
      a4, 3, {cyc("(1,2,3)", 3), cyc("(1,3,2)", 3)});
  auto elems = a4.elements(100);
  for (const auto& a : elems)
    for (const auto& b : elems) CHECK(f.apply(a * b) == f.apply(a) * f.apply(b));
  CHECK_THROWS_AS(f.apply(cyc("(1,2)", 4)), latlas::error);
  CHECK(f.kernel().order() == 4);
  for (const auto& k : f.kernel().generators())
    CHECK(f.apply(k).is_identity());
}

TEST_CASE("coset action on a point stabilizer recovers the natural action") {
  PermGroup s4 = testgroups::symmetric(4);
  PermGroup stab(4, {cyc("(2,3)", 4), cyc("(2,3,4)", 4)});  // Stab(1)
  Homomorphism act = latlas::coset_action(s4, stab);
  CHECK(act.image().degree() == 4);
  CHECK(act.image().order() == 24);
  CHECK(act.is_isomorphism());
}

TEST_CASE("coset action kernel is the largest normal subgroup inside H") {
  PermGroup s4 = testgroups::symmetric(4);
  PermGroup d8(4, {cyc("(1,2,3,4)", 4), cyc("(1,3)", 4)});
  Homomorphism act = latlas::coset_action(s4, d8);
  CHECK(act.image().degree() == 3);  // index 3
  CHECK(act.image().order() == 6);   // S3
  CHECK(act.kernel().order() == 4);  // the normal Klein four group
  CHECK(latlas::is_normal_in(s4, act.kernel()));
  CHECK(act.kernel().is_subgroup_of(d8));
}

TEST_CASE("coset action is multiplicative on an intransitive group") {
  // Frobenius group of order 20 inside M11 with orbits {1,4,6,7,10},
  // {2,5,8,9,11} and a fixed point; a right-multiplication table here is only
  // an anti-homomorphism under (p*q)(i) = p(q(i))
  PermGroup f20(11, {cyc("(4,7,10,6)(5,9,8,11)", 11),
                     cyc("(1,4,6,7,10)(2,5,11,9,8)", 11)});
  REQUIRE(f20.order() == 20);
  PermGroup c4(11, {cyc("(4,7,10,6)(5,9,8,11)", 11)});
  Homomorphism act = latlas::coset_action(f20, c4);
  CHECK(act.image().degree() == 5);
  auto elems = f20.elements(100);
  for (const auto& a : elems)
    for (const auto& b : elems)
      CHECK(act.apply(a * b) == act.apply(a) * act.apply(b));
}

TEST_CASE("quotient map") {
  PermGroup s4 = testgroups::symmetric(4);
  PermGroup v4(4, {cyc("(1,2)(3,4)", 4), cyc("(1,3)(2,4)", 4)});
  Homomorphism q = latlas::quotient_map(s4, v4);
  CHECK(q.image().order() == 6);
  CHECK(q.kernel().order() == 4);
  CHECK_THROWS_AS(latlas::quotient_map(s4, PermGroup(4, {cyc("(1,2)", 4)})),
                  latlas::error);
}

TEST_CASE("coset index cap is enforced") {
  latlas::Config cfg;
  cfg.coset_index_cap = 5;
  PermGroup s4 = testgroups::symmetric(4);
  CHECK_THROWS_AS(
      latlas::coset_action(s4, PermGroup(4, {cyc("(1,2)", 4)}), cfg),
      latlas::cap_exceeded);
}

TEST_CASE("regular S4 regains a faithful action of small degree via cosets") {
  PermGroup reg = testgroups::s4_regular();
  CHECK(reg.degree() == 24);
  CHECK(reg.order() == 24);
  // coset action on a cyclic subgroup of order 4 is faithful of degree 6
  Perm four;
  bool found = false;
  for (const auto& g : reg.generators())
    if (g.order() == 4) {
      four = g;
      found = true;
      break;
    }
  if (!found)
    for (const auto& e : reg.elements(100))
      if (e.order() == 4) {
        four = e;
        found = true;
        break;
      }
  REQUIRE(found);
  Homomorphism act = latlas::coset_action(reg, PermGroup(24, {four}));
  CHECK(act.image().degree() == 6);
  CHECK(act.is_isomorphism());
  CHECK(act.image().order() == 24);
}

TEST_CASE("preimage_group pulls subgroups back through a quotient") {
  PermGroup s4 = testgroups::symmetric(4);
  PermGroup v4(4, {cyc("(1,2)(3,4)", 4), cyc("(1,3)(2,4)", 4)});
  Homomorphism q = latlas::quotient_map(s4, v4);
  // a subgroup of order 2 in the image pulls back to order 8
  PermGroup small(q.image().degree(), {q.generator_images()[0]});
  if (small.order() == 2) {
    PermGroup back = q.preimage_group(small);
    CHECK(back.order() == 8);
    CHECK(back.is_subgroup_of(s4));
    CHECK(v4.is_subgroup_of(back));
  }
  PermGroup whole = q.preimage_group(q.image());
  CHECK(whole.order() == 24);
}
