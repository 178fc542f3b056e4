#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "latlas/group.hpp"
#include "support/brute.hpp"
#include "support/groups.hpp"

using latlas::BigInt;
using latlas::Perm;
using latlas::PermGroup;
using latlas::Point;
using testgroups::cyc;

TEST_CASE("empty generating set gives the trivial group") {
  PermGroup g = PermGroup::trivial(5);
  CHECK(g.order() == 1);
  CHECK(g.contains(Perm::identity(5)));
  CHECK_FALSE(g.contains(cyc("(1,2)", 5)));
}

TEST_CASE("S4 from two generators has order 24") {
  PermGroup g(4, {cyc("(1,2)", 4), cyc("(1,2,3,4)", 4)});
  CHECK(g.order() == 24);
  auto closure = brute::closure(4, g.generators());
  CHECK(closure.size() == 24);
  for (const auto& e : closure) CHECK(g.contains(e));
}

TEST_CASE("order equals product of basic orbit lengths") {
  PermGroup g = testgroups::m11();
  BigInt prod = 1;
  for (auto len : g.basic_orbit_lengths()) prod *= len;
  CHECK(prod == g.order());
}

TEST_CASE("M11 has order 7920") {
  CHECK(testgroups::m11().order() == 7920);
}

TEST_CASE("membership") {
  PermGroup s4(4, {cyc("(1,2)", 4), cyc("(1,2,3,4)", 4)});
  CHECK(s4.contains(cyc("(1,3)", 4)));
  PermGroup c3(3, {cyc("(1,2,3)", 3)});
  CHECK_FALSE(c3.contains(cyc("(1,2)", 3)));
  CHECK_THROWS_AS(c3.contains(cyc("(1,2)", 4)), latlas::error);
}

TEST_CASE("every generator passes its own chain's membership test") {
  for (const PermGroup& g :
       {testgroups::m11(), testgroups::symmetric(6), testgroups::quaternion8(),
        testgroups::dihedral(40)}) {
    for (const auto& p : g.generators()) CHECK(g.contains(p));
  }
}

TEST_CASE("orbits") {
  PermGroup t = PermGroup::trivial(5);
  CHECK(t.orbits().size() == 5);

  PermGroup g(5, {cyc("(1,2,3)(4,5)", 5)});
  auto orbs = g.orbits();
  REQUIRE(orbs.size() == 2);
  CHECK(orbs[0] == std::vector<Point>{0, 1, 2});
  CHECK(orbs[1] == std::vector<Point>{3, 4});

  PermGroup s4(4, {cyc("(1,2)", 4), cyc("(1,2,3,4)", 4)});
  CHECK(s4.orbits().size() == 1);
}

TEST_CASE("orbit partition is invariant under generators") {
  PermGroup g = testgroups::s3_times_s3();
  auto ids = g.orbit_ids();
  for (const auto& gen : g.generators())
    for (Point x = 0; x < g.degree(); ++x) CHECK(ids[gen[x]] == ids[x]);
}

TEST_CASE("element enumeration") {
  CHECK(PermGroup::trivial(3).elements(10).size() == 1);
  PermGroup c4(4, {cyc("(1,2,3,4)", 4)});
  CHECK(c4.elements(10).size() == 4);

  PermGroup s3 = testgroups::symmetric(3);
  auto elems = s3.elements(10);
  REQUIRE(elems.size() == 6);
  auto hist = brute::order_histogram(elems);
  CHECK(hist == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}, {3, 2}});

  CHECK_THROWS_AS(testgroups::m11().elements(100), latlas::cap_exceeded);
}

TEST_CASE("chain agrees with brute-force closure on groups up to 5000") {
  for (const PermGroup& g :
       {testgroups::symmetric(5), testgroups::alternating(5),
        testgroups::dihedral(40), testgroups::quaternion8(),
        testgroups::s3_times_s3(), testgroups::elementary_abelian_2(5)}) {
    auto closure = brute::closure(g.degree(), g.generators());
    CHECK(BigInt(closure.size()) == g.order());
    for (const auto& e : closure) CHECK(g.contains(e));
  }
}

TEST_CASE("extended") {
  PermGroup c2(4, {cyc("(1,2)", 4)});
  PermGroup s4 = c2.extended({cyc("(1,2,3,4)", 4)});
  CHECK(s4.order() == 24);
  CHECK(c2.order() == 2);  // original untouched
}

TEST_CASE("small generating set regenerates the group") {
  PermGroup g = testgroups::s3_times_s3();
  auto small = g.small_generating_set();
  CHECK(small.size() <= g.generators().size());
  CHECK(PermGroup(g.degree(), small).order() == g.order());
}

TEST_CASE("base hints are honored") {
  PermGroup g(6, {cyc("(4,5)", 6), cyc("(1,2,3)", 6)}, {4, 3, 5, 0, 1, 2});
  auto base = g.base();
  REQUIRE(!base.empty());
  CHECK(base[0] == 4);  // first hinted point moved by a generator
  CHECK(g.order() == 6);
}
