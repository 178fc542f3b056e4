#pragma once

// Small standard groups used across the test suites.

#include <string>
#include <vector>

#include "latlas/group.hpp"
#include "latlas/perm.hpp"

namespace testgroups {

using latlas::Perm;
using latlas::PermGroup;
using latlas::Point;

inline Perm cyc(const std::string& s, Point deg) {
  return Perm::parse_cycles(s, deg);
}

inline PermGroup symmetric(Point n) {
  if (n < 2) return PermGroup::trivial(n);
  std::vector<Perm> gens{cyc("(1,2)", n)};
  if (n > 2) {
    std::string big = "(1";
    for (Point i = 2; i <= n; ++i) big += "," + std::to_string(i);
    big += ")";
    gens.push_back(cyc(big, n));
  }
  return PermGroup(n, gens);
}

inline PermGroup alternating(Point n) {
  if (n < 3) return PermGroup::trivial(n);
  std::vector<Perm> gens{cyc("(1,2,3)", n)};
  if (n > 3) {
    std::string big = n % 2 ? "(1" : "(2";
    for (Point i = (n % 2 ? 2 : 3); i <= n; ++i) big += "," + std::to_string(i);
    big += ")";
    gens.push_back(cyc(big, n));
  }
  return PermGroup(n, gens);
}

inline PermGroup cyclic(Point n) {
  if (n == 1) return PermGroup::trivial(1);
  std::string c = "(1";
  for (Point i = 2; i <= n; ++i) c += "," + std::to_string(i);
  c += ")";
  return PermGroup(n, {cyc(c, n)});
}

/// Dihedral group of order n (n even, n >= 6), acting on n/2 points.
inline PermGroup dihedral(Point order) {
  Point m = order / 2;
  std::string rot = "(1";
  for (Point i = 2; i <= m; ++i) rot += "," + std::to_string(i);
  rot += ")";
  std::string refl;
  for (Point i = 1; 2 * i <= m; ++i)
    if (i != m + 1 - i)
      refl += "(" + std::to_string(i) + "," + std::to_string(m + 1 - i) + ")";
  return PermGroup(m, {cyc(rot, m), cyc(refl, m)});
}

inline PermGroup quaternion8() {
  return PermGroup(8, {cyc("(1,2,3,4)(5,6,7,8)", 8), cyc("(1,5,3,7)(2,8,4,6)", 8)});
}

inline PermGroup klein4() {
  return PermGroup(4, {cyc("(1,2)(3,4)", 4), cyc("(1,3)(2,4)", 4)});
}

inline PermGroup elementary_abelian_2(Point k) {
  std::vector<Perm> gens;
  Point deg = 2 * k;
  for (Point i = 0; i < k; ++i)
    gens.push_back(cyc("(" + std::to_string(2 * i + 1) + "," +
                           std::to_string(2 * i + 2) + ")",
                       deg));
  return PermGroup(deg, gens);
}

inline PermGroup s3_times_s3() {
  return PermGroup(6, {cyc("(1,2)", 6), cyc("(1,2,3)", 6), cyc("(4,5)", 6),
                       cyc("(4,5,6)", 6)});
}

inline PermGroup m11() {
  return PermGroup(11, {cyc("(1,2,3,4,5,6,7,8,9,10,11)", 11),
                        cyc("(3,7,11,8)(4,10,5,6)", 11)});
}

/// S4 in its regular action on 24 points (right multiplication on itself).
inline PermGroup s4_regular() {
  PermGroup s4 = symmetric(4);
  auto elems = s4.elements(1000);
  std::vector<Perm> gens;
  for (const auto& g : s4.generators()) {
    std::vector<Point> img(elems.size());
    for (Point i = 0; i < elems.size(); ++i) {
      Perm prod = elems[i] * g;
      for (Point j = 0; j < elems.size(); ++j)
        if (elems[j] == prod) {
          img[i] = j;
          break;
        }
    }
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(static_cast<Point>(elems.size()), gens);
}

}  // namespace testgroups
