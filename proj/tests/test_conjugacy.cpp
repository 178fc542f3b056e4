#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latlas/conjugacy.hpp"
#include "support/brute.hpp"
#include "support/groups.hpp"

using latlas::Perm;
using latlas::PermGroup;
using latlas::SubFp;
using testgroups::cyc;

namespace {

PermGroup sub(const PermGroup& amb, std::initializer_list<const char*> cycles) {
  std::vector<Perm> gens;
  for (const char* c : cycles) gens.push_back(cyc(c, amb.degree()));
  return PermGroup(amb.degree(), gens);
}

// Scan oracles over full element lists.
PermGroup scan_normalizer(const PermGroup& g, const PermGroup& h) {
  auto helems = h.elements(100000);
  std::vector<Perm> out;
  for (const auto& e : g.elements(100000)) {
    bool keep = true;
    for (const auto& x : h.generators())
      if (!h.contains(x.conjugated_by(e))) {
        keep = false;
        break;
      }
    if (keep) out.push_back(e);
  }
  return PermGroup(g.degree(), out);
}

PermGroup scan_centralizer(const PermGroup& g, const PermGroup& h) {
  std::vector<Perm> out;
  for (const auto& e : g.elements(100000)) {
    bool keep = true;
    for (const auto& x : h.generators())
      if (!(e * x == x * e)) {
        keep = false;
        break;
      }
    if (keep) out.push_back(e);
  }
  return PermGroup(g.degree(), out);
}

}  // namespace

TEST_CASE("fingerprints separate distinct subgroups and match equal ones") {
  PermGroup s4 = testgroups::symmetric(4);
  PermGroup a(4, {cyc("(1,2)", 4)});
  PermGroup b(4, {cyc("(3,4)", 4)});
  PermGroup a2(4, {cyc("(1,2)", 4), cyc("(1,2)", 4)});
  latlas::Config cfg;
  CHECK(latlas::fingerprint(a, 100) == latlas::fingerprint(a2, 100));
  CHECK_FALSE(latlas::fingerprint(a, 100) == latlas::fingerprint(b, 100));

  // conjugated fingerprint == fingerprint of the conjugate group
  Perm g = cyc("(1,3)(2,4)", 4);
  auto elems = a.elements(100);
  std::vector<Perm> conj;
  for (const auto& e : elems) conj.push_back(e.conjugated_by(g));
  CHECK(latlas::fingerprint_conjugated(elems, g) ==
        latlas::fingerprint_elements(conj));
}

TEST_CASE("abelian / normal / derived / perfect / center basics") {
  PermGroup s4 = testgroups::symmetric(4);
  PermGroup a4 = testgroups::alternating(4);
  CHECK_FALSE(latlas::is_abelian(s4));
  CHECK(latlas::is_abelian(testgroups::cyclic(12)));
  CHECK(latlas::is_normal_in(s4, a4));
  CHECK_FALSE(latlas::is_normal_in(s4, sub(s4, {"(1,2)"})));

  CHECK(latlas::derived_subgroup(s4).order() == 12);   // A4
  CHECK(latlas::derived_subgroup(a4).order() == 4);    // V4
  CHECK(latlas::is_perfect(testgroups::alternating(5)));
  CHECK_FALSE(latlas::is_perfect(s4));

  CHECK(latlas::center(s4, 100).order() == 1);
  CHECK(latlas::center(testgroups::quaternion8(), 100).order() == 2);
  CHECK(latlas::center(testgroups::cyclic(9), 100).order() == 9);
}

TEST_CASE("normal closure of a transposition in S4 is S4") {
  PermGroup s4 = testgroups::symmetric(4);
  CHECK(latlas::normal_closure(s4, {cyc("(1,2)", 4)}).order() == 24);
  CHECK(latlas::normal_closure(s4, {cyc("(1,2)(3,4)", 4)}).order() == 4);
}

TEST_CASE("normalizer: pinned values in S4") {
  PermGroup s4 = testgroups::symmetric(4);
  CHECK(latlas::normalizer(s4, sub(s4, {"(1,2)"})).order() == 4);
  CHECK(latlas::normalizer(s4, sub(s4, {"(1,2)(3,4)", "(1,3)(2,4)"})).order() ==
        24);
  CHECK(latlas::normalizer(s4, sub(s4, {"(1,2,3)"})).order() == 6);
}

TEST_CASE("centralizer: pinned values in S4") {
  PermGroup s4 = testgroups::symmetric(4);
  CHECK(latlas::centralizer(s4, sub(s4, {"(1,2,3)"})).order() == 3);
  CHECK(latlas::centralizer(s4, sub(s4, {"(1,2)(3,4)", "(1,3)(2,4)"})).order() ==
        4);
  PermGroup c12 = testgroups::cyclic(12);
  CHECK(latlas::centralizer(c12, sub(c12, {"(1,5,9)(2,6,10)(3,7,11)(4,8,12)"}))
            .order() == 12);
}

TEST_CASE("normalizer and centralizer agree with full-scan oracles") {
  struct Case {
    PermGroup g, h;
  };
  PermGroup s4 = testgroups::symmetric(4);
  PermGroup s5 = testgroups::symmetric(5);
  PermGroup d40 = testgroups::dihedral(40);
  PermGroup q8 = testgroups::quaternion8();
  std::vector<Case> cases{
      {s4, sub(s4, {"(1,2)"})},
      {s4, sub(s4, {"(1,2,3,4)"})},
      {s5, sub(s5, {"(1,2,3)"})},
      {s5, sub(s5, {"(1,2)", "(3,4,5)"})},
      {d40, sub(d40, {"(1,5,9,13,17)(2,6,10,14,18)(3,7,11,15,19)"
                      "(4,8,12,16,20)"})},
      {q8, sub(q8, {"(1,2,3,4)(5,6,7,8)"})},
  };
  for (const auto& c : cases) {
    PermGroup n = latlas::normalizer(c.g, c.h);
    PermGroup n0 = scan_normalizer(c.g, c.h);
    CHECK(n.order() == n0.order());
    CHECK(n.is_subgroup_of(n0));

    PermGroup z = latlas::centralizer(c.g, c.h);
    PermGroup z0 = scan_centralizer(c.g, c.h);
    CHECK(z.order() == z0.order());
    CHECK(z.is_subgroup_of(z0));
  }
}

TEST_CASE("conjugate subgroups come with a witness") {
  PermGroup s4 = testgroups::symmetric(4);
  PermGroup h = sub(s4, {"(1,2)"});
  PermGroup k = sub(s4, {"(3,4)"});
  auto w = latlas::is_conjugate_subgroup(s4, h, k);
  REQUIRE(w.has_value());
  // H^w = K elementwise
  for (const auto& e : h.elements(100)) CHECK(k.contains(e.conjugated_by(*w)));
}

TEST_CASE("non-conjugate subgroups of equal order are rejected") {
  PermGroup s4 = testgroups::symmetric(4);
  CHECK_FALSE(latlas::is_conjugate_subgroup(s4, sub(s4, {"(1,2)"}),
                                            sub(s4, {"(1,2)(3,4)"})));
  // normal Klein four vs a conjugate-free comparison with non-normal C2xC2
  CHECK_FALSE(latlas::is_conjugate_subgroup(
      s4, sub(s4, {"(1,2)(3,4)", "(1,3)(2,4)"}), sub(s4, {"(1,2)", "(3,4)"})));
}

TEST_CASE("conjugation orbit size equals index of the normalizer") {
  PermGroup s4 = testgroups::symmetric(4);
  latlas::Config cfg;
  PermGroup h = sub(s4, {"(1,2)"});
  auto orb = latlas::subgroup_conjugation_orbit(s4, h, cfg);
  CHECK(orb.fps.size() == 6);
  CHECK(latlas::BigInt(orb.fps.size()) * latlas::normalizer(s4, h).order() ==
        s4.order());
  // transversal entries really carry conjugates
  auto elems = h.elements(100);
  for (size_t i = 0; i < orb.fps.size(); ++i)
    CHECK(latlas::fingerprint_conjugated(elems, orb.transversal[i]) ==
          orb.fps[i]);
}
