#pragma once

#include <numeric>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "latlas/config.hpp"
#include "latlas/conjugacy.hpp"
#include "latlas/group.hpp"
#include "latlas/perm.hpp"

namespace latlas {

/// One conjugacy class of subgroups of a fixed ambient group, with the
/// fingerprints and conjugating elements of every member (member i equals
/// transversal[i]^-1 * rep * transversal[i]).
struct SubgroupClass {
  PermGroup rep;
  BigInt order;
  BigInt length;
  std::vector<SubFp> fps;
  std::vector<Perm> transversal;
};

/// All subgroups of one group, grouped into conjugacy classes.  Discovery
/// order is deterministic: the trivial class first, then the classes of
/// cyclic subgroups in element-enumeration order, then join-produced classes.
struct SubgroupClasses {
  PermGroup ambient;
  std::vector<SubgroupClass> classes;
  /// fingerprint -> (class index, member index)
  std::unordered_map<SubFp, std::pair<std::uint32_t, std::uint32_t>, SubFpHash>
      locate;
  size_t top_class = 0;

  BigInt total_subgroups() const {
    BigInt n = 0;
    for (const auto& c : classes) n += c.length;
    return n;
  }
};

/// Enumerates the conjugacy classes of all subgroups bottom-up: every cyclic
/// subgroup seeds a class, and class representatives are repeatedly joined
/// with the cyclic seeds until no new class appears.  Any subgroup <H, x> is
/// conjugate to <rep(H), x'> for some conjugate seed x', so closing over
/// representatives only is complete.
inline SubgroupClasses enumerate_subgroup_classes(const PermGroup& g,
                                                  const Config& cfg = {}) {
  const BigInt top_order = g.order();
  if (top_order > cfg.oracle_cap)
    throw cap_exceeded("bottom-up subgroup enumeration: order " +
                       top_order.str() + " exceeds cap " +
                       std::to_string(cfg.oracle_cap));
  SubgroupClasses cs;
  cs.ambient = g;

  auto reg = [&](const PermGroup& grp) -> size_t {
    PermGroup rep(g.degree(), grp.small_generating_set());
    auto orb = subgroup_conjugation_orbit(g, rep, cfg);
    SubgroupClass c;
    c.order = rep.order();
    c.length = BigInt(orb.fps.size());
    c.rep = std::move(rep);
    size_t id = cs.classes.size();
    for (size_t i = 0; i < orb.fps.size(); ++i)
      cs.locate[orb.fps[i]] = {static_cast<std::uint32_t>(id),
                               static_cast<std::uint32_t>(i)};
    c.fps = std::move(orb.fps);
    c.transversal = std::move(orb.transversal);
    cs.classes.push_back(std::move(c));
    return id;
  };

  reg(PermGroup::trivial(g.degree()));
  bool top_seen = top_order == 1;
  if (top_seen) return cs;

  auto elems = g.elements(cfg.enumeration_cap);

  // one generator per distinct cyclic subgroup, in element order
  std::vector<Perm> seeds;
  {
    std::unordered_set<SubFp, SubFpHash> seen;
    for (const auto& e : elems) {
      if (e.is_identity()) continue;
      std::vector<Perm> powers{Perm::identity(g.degree())};
      for (Perm p = e; !p.is_identity(); p = p * e) powers.push_back(p);
      SubFp fp = fingerprint_elements(powers);
      if (!seen.insert(fp).second) continue;
      seeds.push_back(e);
      if (!cs.locate.count(fp)) {
        size_t id = reg(PermGroup(g.degree(), {e}));
        if (cs.classes[id].order == top_order) {
          cs.top_class = id;
          top_seen = true;
        }
      }
    }
  }

  // join closure over class representatives
  for (size_t ci = 0; ci < cs.classes.size(); ++ci) {
    if (cs.classes[ci].order == top_order) continue;
    const PermGroup H = cs.classes[ci].rep;  // copy: classes vector may grow
    for (const auto& x : seeds) {
      if (H.contains(x)) continue;
      PermGroup j = H.extended({x});
      if (j.order() == top_order) {
        if (!top_seen) {
          cs.top_class = reg(g);
          top_seen = true;
        }
        continue;
      }
      SubFp fp = fingerprint(j, cfg.enumeration_cap);
      if (!cs.locate.count(fp)) reg(j);
    }
  }
  if (!top_seen) throw error("internal: ambient group not reached by joins");
  return cs;
}

/// Class indices whose members are maximal subgroups of the ambient group,
/// in (order desc, discovery asc) order.
inline std::vector<size_t> maximal_classes(const SubgroupClasses& cs) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < cs.classes.size(); ++i)
    if (i != cs.top_class) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (cs.classes[a].order != cs.classes[b].order)
      return cs.classes[a].order > cs.classes[b].order;
    return a < b;
  });
  std::vector<size_t> out;
  for (size_t a : idx) {
    const auto& agens = cs.classes[a].rep.generators();
    bool covered = false;
    for (size_t b : idx) {
      if (covered || b == a) continue;
      if (cs.classes[b].order <= cs.classes[a].order) break;  // sorted desc
      if (cs.classes[b].order % cs.classes[a].order != 0) continue;
      for (const auto& t : cs.classes[b].transversal) {
        // rep(a) <= t^-1 B t  iff  t rep(a) t^-1 <= B
        Perm tinv = t.inverse();
        bool inside = true;
        for (const auto& x : agens)
          if (!cs.classes[b].rep.contains(x.conjugated_by(tinv))) {
            inside = false;
            break;
          }
        if (inside) {
          covered = true;
          break;
        }
      }
    }
    if (!covered) out.push_back(a);
  }
  return out;
}

struct PosetNode {
  PermGroup group;
  SubFp fp;
  BigInt order;
};

/// The full set of subgroups of one group with the inclusion relation,
/// materialized from the class enumeration (classes in discovery order, each
/// class expanded representative-first along its conjugation orbit).
class SubgroupPoset {
 public:
  static SubgroupPoset all_subgroups(const PermGroup& g, const Config& cfg = {}) {
    return from_classes(enumerate_subgroup_classes(g, cfg));
  }

  static SubgroupPoset from_classes(const SubgroupClasses& cs) {
    SubgroupPoset ps;
    ps.ambient_degree_ = cs.ambient.degree();
    for (size_t c = 0; c < cs.classes.size(); ++c) {
      const auto& cls = cs.classes[c];
      for (size_t i = 0; i < cls.fps.size(); ++i) {
        std::vector<Perm> gens;
        for (const auto& gg : cls.rep.generators())
          gens.push_back(gg.conjugated_by(cls.transversal[i]));
        if (c == cs.top_class && i == 0) ps.top_ = ps.nodes_.size();
        ps.push(PosetNode{PermGroup(ps.ambient_degree_, std::move(gens)),
                          cls.fps[i], cls.order});
      }
    }
    return ps;
  }

  size_t size() const { return nodes_.size(); }
  const PosetNode& node(size_t i) const { return nodes_[i]; }
  size_t top() const { return top_; }

  std::optional<size_t> find(const SubFp& fp) const {
    auto it = where_.find(fp);
    if (it == where_.end()) return std::nullopt;
    return it->second;
  }

  /// a <= b in the subgroup order.
  bool leq(size_t a, size_t b) const {
    if (a == b) return true;
    if (nodes_[b].order % nodes_[a].order != 0) return false;
    for (const auto& g : nodes_[a].group.generators())
      if (!nodes_[b].group.contains(g)) return false;
    return true;
  }

  /// Node indices sorted by (order desc, discovery asc).
  std::vector<size_t> by_order_desc() const {
    std::vector<size_t> idx(nodes_.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      if (nodes_[a].order != nodes_[b].order)
        return nodes_[a].order > nodes_[b].order;
      return a < b;
    });
    return idx;
  }

  /// Maximal proper subgroups of the top, in (order desc, discovery asc) order.
  std::vector<size_t> maximal_subgroups() const {
    auto idx = by_order_desc();
    std::vector<size_t> out;
    for (size_t i : idx) {
      if (i == top_) continue;
      bool covered = false;
      for (size_t j : idx) {
        if (j == top_ || j == i) continue;
        if (nodes_[j].order <= nodes_[i].order) break;  // sorted descending
        if (leq(i, j)) {
          covered = true;
          break;
        }
      }
      if (!covered) out.push_back(i);
    }
    return out;
  }

  /// All nodes below node `of` (inclusive).
  std::vector<size_t> below(size_t of) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < nodes_.size(); ++i)
      if (leq(i, of)) out.push_back(i);
    return out;
  }

 private:
  void push(PosetNode n) {
    where_[n.fp] = nodes_.size();
    nodes_.push_back(std::move(n));
  }

  Point ambient_degree_ = 0;
  std::vector<PosetNode> nodes_;
  std::unordered_map<SubFp, size_t, SubFpHash> where_;
  size_t top_ = 0;
};

inline SubgroupPoset all_subgroups_bottom_up(const PermGroup& g,
                                             const Config& cfg = {}) {
  return SubgroupPoset::all_subgroups(g, cfg);
}

/// Mobius function mu(H, G) on the full subgroup poset, indexed by node:
/// mu(G, G) = 1 and the sum over every interval [H, G] vanishes.
inline std::vector<BigInt> mobius(const SubgroupPoset& ps) {
  std::vector<BigInt> mu(ps.size(), 0);
  auto idx = ps.by_order_desc();
  mu[ps.top()] = 1;
  for (size_t a : idx) {
    if (a == ps.top()) continue;
    BigInt s = 0;
    for (size_t b : idx) {
      if (b == a) continue;
      if (ps.node(b).order <= ps.node(a).order) break;
      if (ps.leq(a, b)) s += mu[b];
    }
    mu[a] = -s;
  }
  return mu;
}

}  // namespace latlas
