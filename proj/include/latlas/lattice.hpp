#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latlas/config.hpp"
#include "latlas/conjugacy.hpp"
#include "latlas/group.hpp"
#include "latlas/poset.hpp"

namespace latlas {

/// One conjugacy class of subgroups.
struct ClassNode {
  PermGroup representative;
  BigInt order;
  BigInt class_length;
  std::string name;  // structure name, filled by the naming layer
  size_t id = 0;
};

/// a covers b in the class order (a is the larger class); n_ab = number of
/// class-b subgroups inside one class-a subgroup, n_ba = number of class-a
/// subgroups containing one class-b subgroup.
struct CoverEdge {
  size_t a = 0, b = 0;
  BigInt n_ab, n_ba;
};

/// Conjugacy classes of subgroups with class lengths and weighted covering
/// edges.  Classes are ordered by (order desc, discovery asc); class 0 is the
/// ambient group and the last class is the trivial subgroup.
struct WeightedLattice {
  PermGroup ambient;
  std::vector<ClassNode> classes;
  std::vector<CoverEdge> covers;
};

namespace detail {

/// Derives covering edges and weights from the full containment-count matrix
/// cnt[a][b] = number of class-b subgroups below the class-a representative.
inline std::vector<CoverEdge> covers_from_counts(
    const std::vector<ClassNode>& classes,
    const std::vector<std::vector<BigInt>>& cnt) {
  const size_t nc = classes.size();
  std::vector<std::vector<bool>> rel(nc, std::vector<bool>(nc, false));
  for (size_t a = 0; a < nc; ++a)
    for (size_t b = 0; b < nc; ++b)
      if (a != b && cnt[a][b] > 0) rel[a][b] = true;
  std::vector<CoverEdge> covers;
  for (size_t a = 0; a < nc; ++a)
    for (size_t b = 0; b < nc; ++b) {
      if (!rel[a][b]) continue;
      bool is_cover = true;
      for (size_t z = 0; z < nc && is_cover; ++z)
        if (z != a && z != b && rel[a][z] && rel[z][b]) is_cover = false;
      if (!is_cover) continue;
      CoverEdge e;
      e.a = a;
      e.b = b;
      e.n_ab = cnt[a][b];
      BigInt lhs = classes[a].class_length * e.n_ab;
      if (lhs % classes[b].class_length != 0)
        throw error("internal: weight identity violated");
      e.n_ba = lhs / classes[b].class_length;
      covers.push_back(std::move(e));
    }
  return covers;
}

}  // namespace detail

/// Fuses a complete subgroup poset into the weighted lattice of conjugacy
/// classes of its top group.
inline WeightedLattice fuse_into_classes(const SubgroupPoset& ps,
                                         const Config& cfg = {}) {
  const PermGroup& ambient = ps.node(ps.top()).group;
  std::vector<int> class_of(ps.size(), -1);
  std::vector<size_t> rep_node;

  for (size_t i : ps.by_order_desc()) {
    if (class_of[i] >= 0) continue;
    int cid = static_cast<int>(rep_node.size());
    rep_node.push_back(i);
    auto orb = subgroup_conjugation_orbit(ambient, ps.node(i).group, cfg);
    for (const auto& fp : orb.fps) {
      auto j = ps.find(fp);
      if (!j || (class_of[*j] >= 0 && class_of[*j] != cid))
        throw error("internal: conjugacy fusion inconsistent with poset");
      class_of[*j] = cid;
    }
  }

  WeightedLattice lat;
  lat.ambient = ambient;
  const size_t nc = rep_node.size();
  std::vector<BigInt> length(nc, 0);
  for (size_t i = 0; i < ps.size(); ++i) length[class_of[i]] += 1;
  for (size_t c = 0; c < nc; ++c) {
    ClassNode node;
    node.representative = ps.node(rep_node[c]).group;
    node.order = ps.node(rep_node[c]).order;
    node.class_length = length[c];
    node.id = c;
    lat.classes.push_back(std::move(node));
  }

  std::vector<std::vector<BigInt>> cnt(nc, std::vector<BigInt>(nc, 0));
  for (size_t c = 0; c < nc; ++c)
    for (size_t j : ps.below(rep_node[c])) cnt[c][class_of[j]] += 1;
  lat.covers = detail::covers_from_counts(lat.classes, cnt);
  return lat;
}

/// Number of subgroups of `a` that are ambient-conjugate to `b`.  Works at
/// oracle scale (enumerates the subgroups of `a`).
inline BigInt containment_count(const PermGroup& ambient, const PermGroup& a,
                                const PermGroup& b, const Config& cfg = {}) {
  auto borb = subgroup_conjugation_orbit(ambient, b, cfg);
  std::unordered_map<SubFp, bool, SubFpHash> in_class;
  for (const auto& fp : borb.fps) in_class[fp] = true;
  SubgroupPoset ps = SubgroupPoset::all_subgroups(a, cfg);
  BigInt n = 0;
  for (size_t i = 0; i < ps.size(); ++i)
    if (in_class.count(ps.node(i).fp)) n += 1;
  return n;
}

/// Recomputes (n_AB, n_BA) for a covering pair from the representatives.
/// Errors when (a, b) is not a covering edge of the lattice.
inline std::pair<BigInt, BigInt> compute_weights(const WeightedLattice& lat,
                                                 size_t a, size_t b,
                                                 const Config& cfg = {}) {
  bool is_cover = false;
  for (const auto& e : lat.covers)
    if (e.a == a && e.b == b) is_cover = true;
  if (!is_cover)
    throw error("compute_weights: classes " + std::to_string(a) + " and " +
                std::to_string(b) + " are not a covering pair");
  BigInt n_ab = containment_count(lat.ambient, lat.classes[a].representative,
                                  lat.classes[b].representative, cfg);
  BigInt lhs = lat.classes[a].class_length * n_ab;
  if (lhs % lat.classes[b].class_length != 0)
    throw error("internal: weight identity violated");
  return {n_ab, lhs / lat.classes[b].class_length};
}

/// Mobius values mu(H, G) per class (all members of a class share the value).
/// Uses m_BA = number of class-A subgroups containing the class-B
/// representative, found by walking A's conjugation orbit.
inline std::vector<BigInt> mobius(const WeightedLattice& lat,
                                  const Config& cfg = {}) {
  const size_t nc = lat.classes.size();
  // conjugation-orbit transversals per class
  std::vector<std::vector<Perm>> trans(nc);
  for (size_t c = 0; c < nc; ++c)
    trans[c] = subgroup_conjugation_orbit(lat.ambient,
                                          lat.classes[c].representative, cfg)
                   .transversal;
  std::vector<BigInt> mu(nc, 0);
  mu[0] = 1;  // classes are sorted by decreasing order; class 0 is the top
  for (size_t b = 1; b < nc; ++b) {
    const auto& bgens = lat.classes[b].representative.generators();
    BigInt s = 0;
    for (size_t a = 0; a < b; ++a) {
      if (lat.classes[a].order <= lat.classes[b].order) continue;
      if (lat.classes[a].order % lat.classes[b].order != 0) continue;
      const PermGroup& arep = lat.classes[a].representative;
      BigInt m_ba = 0;
      for (const auto& t : trans[a]) {
        // rep(b) <= t^-1 A t  iff  t rep(b) t^-1 <= A
        Perm tinv = t.inverse();
        bool inside = true;
        for (const auto& x : bgens)
          if (!arep.contains(x.conjugated_by(tinv))) {
            inside = false;
            break;
          }
        if (inside) m_ba += 1;
      }
      s += m_ba * mu[a];
    }
    mu[b] = -s;
  }
  return mu;
}

/// True when the two lattices are isomorphic as weighted labeled posets:
/// there is a class bijection preserving order, class length, and every
/// weighted covering edge.  Label refinement first, then backtracking.
inline bool lattice_equivalent(const WeightedLattice& x,
                               const WeightedLattice& y) {
  const size_t nc = x.classes.size();
  if (y.classes.size() != nc || y.covers.size() != x.covers.size())
    return false;

  auto label_hash = [](const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return h;
  };
  auto initial = [&](const WeightedLattice& l) {
    std::vector<std::uint64_t> lab(l.classes.size());
    for (size_t i = 0; i < l.classes.size(); ++i)
      lab[i] = label_hash(l.classes[i].order.str() + "/" +
                          l.classes[i].class_length.str());
    return lab;
  };
  auto refine = [&](const WeightedLattice& l, std::vector<std::uint64_t> lab) {
    for (size_t round = 0; round < l.classes.size(); ++round) {
      std::vector<std::vector<std::uint64_t>> nb(l.classes.size());
      for (const auto& e : l.covers) {
        nb[e.a].push_back(splitmix64(label_hash("d" + e.n_ab.str() + "/" +
                                                e.n_ba.str()) ^
                                     lab[e.b]));
        nb[e.b].push_back(splitmix64(label_hash("u" + e.n_ab.str() + "/" +
                                                e.n_ba.str()) ^
                                     lab[e.a]));
      }
      for (size_t i = 0; i < lab.size(); ++i) {
        std::sort(nb[i].begin(), nb[i].end());
        std::uint64_t h = lab[i];
        for (auto v : nb[i]) h = splitmix64(h ^ v);
        lab[i] = h;
      }
    }
    return lab;
  };
  auto lx = refine(x, initial(x)), ly = refine(y, initial(y));
  {
    auto sx = lx, sy = ly;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return false;
  }

  // adjacency with weights for exact matching
  auto edge_map = [](const WeightedLattice& l) {
    std::map<std::pair<size_t, size_t>, std::pair<BigInt, BigInt>> m;
    for (const auto& e : l.covers) m[{e.a, e.b}] = {e.n_ab, e.n_ba};
    return m;
  };
  auto ex = edge_map(x), ey = edge_map(y);

  std::vector<int> match(nc, -1), used(nc, 0);
  auto consistent = [&](size_t i, size_t j) {
    if (lx[i] != ly[j]) return false;
    if (x.classes[i].order != y.classes[j].order) return false;
    if (x.classes[i].class_length != y.classes[j].class_length) return false;
    for (const auto& [key, w] : ex) {
      auto [a, b] = key;
      int ma = (a == i) ? static_cast<int>(j) : match[a];
      int mb = (b == i) ? static_cast<int>(j) : match[b];
      if (a != i && b != i) continue;
      if (ma < 0 || mb < 0) continue;
      auto it = ey.find({static_cast<size_t>(ma), static_cast<size_t>(mb)});
      if (it == ey.end() || it->second != w) return false;
    }
    return true;
  };
  std::function<bool(size_t)> go = [&](size_t i) -> bool {
    if (i == nc) return true;
    for (size_t j = 0; j < nc; ++j) {
      if (used[j] || !consistent(i, j)) continue;
      match[i] = static_cast<int>(j);
      used[j] = 1;
      if (go(i + 1)) return true;
      match[i] = -1;
      used[j] = 0;
    }
    return false;
  };
  return go(0);
}

}  // namespace latlas
