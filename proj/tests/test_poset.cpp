#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "latlas/poset.hpp"
#include "support/brute.hpp"
#include "support/groups.hpp"

using latlas::BigInt;
using latlas::PermGroup;
using latlas::SubgroupPoset;
using testgroups::cyc;

namespace {

// sorted element-index sets of every poset node, in brute's indexing
std::set<std::vector<int>> as_element_sets(const SubgroupPoset& ps,
                                           const std::vector<latlas::Perm>& elems) {
  std::map<std::vector<latlas::Point>, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    index[elems[i].images()] = i;
  std::set<std::vector<int>> out;
  for (size_t i = 0; i < ps.size(); ++i) {
    std::vector<int> members;
    for (const auto& e : ps.node(i).group.elements(100000))
      members.push_back(index.at(e.images()));
    std::sort(members.begin(), members.end());
    out.insert(std::move(members));
  }
  return out;
}

}  // namespace

TEST_CASE("subgroup counts of small groups") {
  latlas::Config cfg;
  CHECK(SubgroupPoset::all_subgroups(testgroups::cyclic(6), cfg).size() == 4);
  CHECK(SubgroupPoset::all_subgroups(testgroups::alternating(4), cfg).size() ==
        10);
  CHECK(SubgroupPoset::all_subgroups(testgroups::symmetric(4), cfg).size() ==
        30);
  CHECK(SubgroupPoset::all_subgroups(testgroups::alternating(5), cfg).size() ==
        59);
}

TEST_CASE("poset nodes match the brute-force subgroup oracle") {
  for (const PermGroup& g :
       {testgroups::symmetric(4), testgroups::alternating(4),
        testgroups::dihedral(40), testgroups::quaternion8(),
        testgroups::s3_times_s3()}) {
    auto elems = g.elements(100000);
    auto want = brute::all_subgroups(elems);
    SubgroupPoset ps = SubgroupPoset::all_subgroups(g);
    CHECK(ps.size() == want.size());
    auto got = as_element_sets(ps, elems);
    CHECK(got == std::set<std::vector<int>>(want.begin(), want.end()));
  }
}

TEST_CASE("top node is the whole group") {
  PermGroup s4 = testgroups::symmetric(4);
  SubgroupPoset ps = SubgroupPoset::all_subgroups(s4);
  CHECK(ps.node(ps.top()).order == 24);
  for (size_t i = 0; i < ps.size(); ++i) CHECK(ps.leq(i, ps.top()));
}

TEST_CASE("leq is the subgroup relation") {
  PermGroup s4 = testgroups::symmetric(4);
  SubgroupPoset ps = SubgroupPoset::all_subgroups(s4);
  for (size_t a = 0; a < ps.size(); ++a)
    for (size_t b = 0; b < ps.size(); ++b) {
      bool want = true;
      for (const auto& g : ps.node(a).group.generators())
        if (!ps.node(b).group.contains(g)) want = false;
      CHECK(ps.leq(a, b) == want);
    }
}

TEST_CASE("maximal subgroups of S4: A4, three D8, four S3") {
  SubgroupPoset ps = SubgroupPoset::all_subgroups(testgroups::symmetric(4));
  auto max = ps.maximal_subgroups();
  REQUIRE(max.size() == 8);
  std::map<int, int> by_order;
  for (size_t i : max) ++by_order[ps.node(i).order.convert_to<int>()];
  CHECK(by_order == std::map<int, int>{{12, 1}, {8, 3}, {6, 4}});
}

TEST_CASE("maximal subgroups of a cyclic group are its prime-index subgroups") {
  SubgroupPoset ps = SubgroupPoset::all_subgroups(testgroups::cyclic(12));
  auto max = ps.maximal_subgroups();
  std::multiset<int> orders;
  for (size_t i : max) orders.insert(ps.node(i).order.convert_to<int>());
  CHECK(orders == std::multiset<int>{4, 6});
}

TEST_CASE("cyclic seeds precede joined subgroups of equal order") {
  // in D40 the cyclic subgroup of order 20 must be discovered before the
  // dihedral ones of order 20
  SubgroupPoset ps = SubgroupPoset::all_subgroups(testgroups::dihedral(40));
  bool first_20_seen = false;
  for (size_t i = 0; i < ps.size(); ++i)
    if (ps.node(i).order == 20 && !first_20_seen) {
      first_20_seen = true;
      CHECK(latlas::is_abelian(ps.node(i).group));
    }
  CHECK(first_20_seen);
}

TEST_CASE("mobius: defining identity and mu(1, S3) = 3") {
  SubgroupPoset ps = SubgroupPoset::all_subgroups(testgroups::symmetric(3));
  auto mu = mobius(ps);
  CHECK(mu[ps.top()] == 1);
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i == ps.top()) continue;
    BigInt s = 0;
    for (size_t j = 0; j < ps.size(); ++j)
      if (ps.leq(i, j)) s += mu[j];
    CHECK(s == 0);
    if (ps.node(i).order == 1) CHECK(mu[i] == 3);
  }
}

TEST_CASE("mobius of maximal subgroups is -1") {
  SubgroupPoset ps = SubgroupPoset::all_subgroups(testgroups::symmetric(4));
  auto mu = mobius(ps);
  for (size_t i : ps.maximal_subgroups()) CHECK(mu[i] == -1);
}
