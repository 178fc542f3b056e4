#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latlas/errors.hpp"
#include "latlas/group.hpp"
#include "latlas/perm.hpp"

namespace latlas {

/// Constructors for the standard small groups used by the recognizers and
/// the catalog.  All act on the natural point sets.

inline PermGroup cyclic_group(Point n) {
  if (n == 0) throw error("cyclic group of order 0");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return PermGroup(n, {Perm(std::move(img))});
}

inline PermGroup symmetric_group(Point n) {
  if (n < 2) return PermGroup::trivial(n ? n : 1);
  std::vector<Point> swap01(n), cyc(n);
  for (Point i = 0; i < n; ++i) {
    swap01[i] = i;
    cyc[i] = (i + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  std::vector<Perm> gens{Perm(std::move(swap01))};
  if (n > 2) gens.push_back(Perm(std::move(cyc)));
  return PermGroup(n, gens);
}

inline PermGroup alternating_group(Point n) {
  if (n < 3) return PermGroup::trivial(n ? n : 1);
  std::vector<Point> three(n);
  std::iota(three.begin(), three.end(), Point{0});
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<Perm> gens{Perm(std::move(three))};
  if (n > 3) {
    // an n-cycle (n odd) or an (n-1)-cycle on {2..n} (n even); both are even
    std::vector<Point> big(n);
    std::iota(big.begin(), big.end(), Point{0});
    Point lo = n % 2 ? 0 : 1;
    for (Point i = lo; i < n; ++i) big[i] = (i + 1 < n) ? i + 1 : lo;
    gens.push_back(Perm(std::move(big)));
  }
  return PermGroup(n, gens);
}

/// Dihedral group of the given order (even, >= 2), on order/2 points when
/// that is faithful (order >= 6); the order-4 case is the Klein four group
/// on 4 points and order 2 is a single transposition.
inline PermGroup dihedral_group(Point order) {
  if (order < 2 || order % 2) throw error("dihedral order must be even");
  if (order == 2) return cyclic_group(2);
  if (order == 4)
    return PermGroup(4, {Perm::parse_cycles("(1,2)(3,4)", 4),
                         Perm::parse_cycles("(1,3)(2,4)", 4)});
  Point m = order / 2;
  std::vector<Point> rot(m), refl(m);
  for (Point i = 0; i < m; ++i) {
    rot[i] = (i + 1) % m;
    refl[i] = (m - i) % m;
  }
  return PermGroup(m, {Perm(std::move(rot)), Perm(std::move(refl))});
}

inline PermGroup quaternion_group() {
  return PermGroup(8, {Perm::parse_cycles("(1,2,3,4)(5,6,7,8)", 8),
                       Perm::parse_cycles("(1,5,3,7)(2,8,4,6)", 8)});
}

/// Direct product on the disjoint union of the two point sets.
inline PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  Point deg = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> img(deg);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point i = 0; i < a.degree(); ++i) img[i] = g[i];
    gens.push_back(Perm(std::move(img)));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> img(deg);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point i = 0; i < b.degree(); ++i) img[a.degree() + i] = a.degree() + g[i];
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(deg, gens);
}

inline PermGroup elementary_abelian_group(Point p, Point k) {
  PermGroup g = PermGroup::trivial(1);
  for (Point i = 0; i < k; ++i)
    g = (i == 0) ? cyclic_group(p) : direct_product(g, cyclic_group(p));
  return g;
}

}  // namespace latlas
