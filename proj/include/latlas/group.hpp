#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latlas/config.hpp"
#include "latlas/errors.hpp"
#include "latlas/perm.hpp"

namespace latlas {

using BigInt = boost::multiprecision::cpp_int;

inline std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > BigInt(UINT64_MAX))
    throw error("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<std::uint64_t>();
}

/// A permutation group given by generators, with a stabilizer chain built by
/// a deterministic Schreier-Sims.  Immutable after construction; extending
/// with new generators produces a fresh group.
class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup trivial(Point degree) {
    return PermGroup(degree, {});
  }

  /// Builds the chain.  `base_hint` biases base-point selection: when a new
  /// base point is needed, the first hinted point moved by the offending
  /// element is preferred.
  PermGroup(Point degree, std::vector<Perm> gens,
            std::vector<Point> base_hint = {})
      : degree_(degree), base_hint_(std::move(base_hint)) {
    for (auto& g : gens) {
      if (g.degree() != degree_)
        throw error("generator degree " + std::to_string(g.degree()) +
                    " does not match group degree " + std::to_string(degree_));
      if (!g.is_identity()) gens_.push_back(std::move(g));
    }
    for (const auto& g : gens_) place_new_generator(g);
    sims(0);
    recompute_order();
  }

  Point degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    b.reserve(levels_.size());
    for (const auto& L : levels_) b.push_back(L.base);
    return b;
  }

  /// Sizes of the basic orbits, aligned with base().
  std::vector<std::uint64_t> basic_orbit_lengths() const {
    std::vector<std::uint64_t> r;
    for (const auto& L : levels_) r.push_back(L.orbit.size());
    return r;
  }

  bool contains(const Perm& p) const {
    if (p.degree() != degree_)
      throw error("membership test with mismatched degree");
    auto [res, lvl] = sift_from(p, 0);
    return lvl == levels_.size() && res.is_identity();
  }

  /// Residual after stripping through the chain; identity iff contained.
  Perm sift(const Perm& p) const { return sift_from(p, 0).first; }

  /// Orbit partition of {0..degree-1}; orbits sorted internally and listed
  /// by smallest element.
  std::vector<std::vector<Point>> orbits() const {
    std::vector<int> id(degree_, -1);
    std::vector<std::vector<Point>> out;
    for (Point s = 0; s < degree_; ++s) {
      if (id[s] >= 0) continue;
      std::vector<Point> orb{s};
      id[s] = static_cast<int>(out.size());
      for (size_t k = 0; k < orb.size(); ++k)
        for (const auto& g : gens_) {
          Point t = g[orb[k]];
          if (id[t] < 0) {
            id[t] = id[s];
            orb.push_back(t);
          }
        }
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  }

  /// Orbit id per point, numbered by smallest orbit element.
  std::vector<Point> orbit_ids() const {
    auto orbs = orbits();
    std::vector<Point> id(degree_, 0);
    for (Point k = 0; k < orbs.size(); ++k)
      for (Point x : orbs[k]) id[x] = k;
    return id;
  }

  /// All elements, by transversal products along the chain, in a fixed order.
  std::vector<Perm> elements(std::uint64_t cap) const {
    if (order_ > cap)
      throw cap_exceeded("element enumeration: order " + order_.str() +
                         " exceeds cap " + std::to_string(cap));
    std::vector<Perm> acc{Perm::identity(degree_)};
    for (size_t i = levels_.size(); i-- > 0;) {
      std::vector<Perm> next;
      next.reserve(acc.size() * levels_[i].orbit.size());
      for (Point p : levels_[i].orbit) {
        Perm u = transversal(i, p);
        for (const auto& e : acc) next.push_back(u * e);
      }
      acc = std::move(next);
    }
    return acc;
  }

  /// New group generated by this group's generators plus `extra`.
  PermGroup extended(const std::vector<Perm>& extra) const {
    PermGroup g(*this);
    bool changed = false;
    for (const auto& p : extra) {
      if (p.degree() != degree_) throw error("extension degree mismatch");
      if (p.is_identity() || g.contains(p)) continue;
      g.gens_.push_back(p);
      g.place_new_generator(p);
      g.sims(0);
      changed = true;
    }
    if (changed) g.recompute_order();
    return g;
  }

  bool is_subgroup_of(const PermGroup& big) const {
    if (degree_ != big.degree()) return false;
    for (const auto& g : gens_)
      if (!big.contains(g)) return false;
    return true;
  }

  /// Stabilizer of the first `k` base points, as its own group.
  PermGroup stabilizer_prefix(size_t k) const {
    std::vector<Perm> gens;
    for (size_t i = k; i < levels_.size(); ++i)
      for (const auto& g : levels_[i].gens) gens.push_back(g);
    return PermGroup(degree_, std::move(gens));
  }

  /// Greedy small generating set extracted from the strong generators.
  std::vector<Perm> small_generating_set() const {
    std::vector<Perm> picked;
    if (order_ == 1) return picked;
    PermGroup cur = trivial(degree_);
    auto try_add = [&](const Perm& g) {
      if (cur.order() == order_) return;
      if (cur.contains(g)) return;
      cur = cur.extended({g});
      picked.push_back(g);
    };
    for (const auto& g : gens_) try_add(g);
    for (const auto& L : levels_)
      for (const auto& g : L.gens) try_add(g);
    return picked;
  }

 private:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens, gen_invs;
    std::vector<Point> orbit;          // discovery order; orbit[0] == base
    std::vector<std::int32_t> where;   // point -> index into orbit, or -1
    std::vector<std::int32_t> parent_gen;
    std::vector<Point> parent_pt;
  };

  // Appends a level for `g` if it moves a point no existing level fixes,
  // then records g at every level whose earlier bases it fixes.
  void place_new_generator(const Perm& g) {
    size_t lvl = 0;
    while (lvl < levels_.size() && g[levels_[lvl].base] == levels_[lvl].base)
      ++lvl;
    if (lvl == levels_.size()) append_level(g);
    for (size_t k = 0; k <= lvl && k < levels_.size(); ++k) add_gen(k, g);
  }

  void append_level(const Perm& mover) {
    Level L;
    L.base = choose_base(mover);
    L.where.assign(degree_, -1);
    L.parent_gen.assign(degree_, -1);
    L.parent_pt.assign(degree_, 0);
    levels_.push_back(std::move(L));
  }

  Point choose_base(const Perm& mover) const {
    for (Point h : base_hint_)
      if (mover[h] != h) return h;
    return mover.first_moved();
  }

  void add_gen(size_t lvl, const Perm& g) {
    for (const auto& have : levels_[lvl].gens)
      if (have == g) return;
    levels_[lvl].gens.push_back(g);
    levels_[lvl].gen_invs.push_back(g.inverse());
  }

  void rebuild_orbit(size_t lvl) {
    Level& L = levels_[lvl];
    std::fill(L.where.begin(), L.where.end(), -1);
    L.orbit.assign(1, L.base);
    L.where[L.base] = 0;
    for (size_t k = 0; k < L.orbit.size(); ++k) {
      Point p = L.orbit[k];
      for (size_t gi = 0; gi < L.gens.size(); ++gi) {
        Point t = L.gens[gi][p];
        if (L.where[t] < 0) {
          L.where[t] = static_cast<std::int32_t>(L.orbit.size());
          L.parent_gen[t] = static_cast<std::int32_t>(gi);
          L.parent_pt[t] = p;
          L.orbit.push_back(t);
        }
      }
    }
  }

  /// Transversal element u with u(base) = p, composed along the Schreier tree.
  Perm transversal(size_t lvl, Point p) const {
    const Level& L = levels_[lvl];
    Perm u = Perm::identity(degree_);
    while (p != L.base) {
      u = u * L.gens[L.parent_gen[p]];  // u_p = g_edge * u_parent
      p = L.parent_pt[p];
    }
    return u;
  }

  /// Strips p through levels starting at `from`; returns the residual and
  /// the level at which stripping stopped (== levels_.size() on success).
  std::pair<Perm, size_t> sift_from(Perm p, size_t from) const {
    for (size_t lvl = from; lvl < levels_.size(); ++lvl) {
      const Level& L = levels_[lvl];
      Point t = p[L.base];
      if (t == L.base) continue;
      if (L.where[t] < 0) return {std::move(p), lvl};
      while (t != L.base) {
        p = L.gen_invs[L.parent_gen[t]] * p;
        t = L.parent_pt[t];
      }
    }
    return {std::move(p), levels_.size()};
  }

  /// Makes levels `i`.. satisfy the strong-generation property.
  void sims(size_t i) {
    if (i >= levels_.size()) return;
    rebuild_orbit(i);
    // levels_ may grow (and reallocate) inside the loop; index, don't alias.
    for (size_t oi = 0; oi < levels_[i].orbit.size(); ++oi) {
      Point p = levels_[i].orbit[oi];
      Perm up = transversal(i, p);
      for (size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
        Perm s = levels_[i].gens[gi] * up;
        // strip u_{g(p)}^{-1} on the left
        {
          Point t = s[levels_[i].base];
          while (t != levels_[i].base) {
            s = levels_[i].gen_invs[levels_[i].parent_gen[t]] * s;
            t = levels_[i].parent_pt[t];
          }
        }
        if (s.is_identity()) continue;
        auto [res, j] = sift_from(s, i + 1);
        if (res.is_identity()) continue;
        if (j == levels_.size()) append_level(res);
        for (size_t k = i + 1; k <= j && k < levels_.size(); ++k)
          add_gen(k, res);
        for (size_t k = std::min(j, levels_.size() - 1); k > i; --k) sims(k);
      }
    }
  }

  void recompute_order() {
    order_ = 1;
    for (const auto& L : levels_) order_ *= BigInt(L.orbit.size());
  }

  Point degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  std::vector<Point> base_hint_;
  BigInt order_ = 1;
};

/// Convenience builder matching the spec's schreier_sims operation.
inline PermGroup schreier_sims(Point degree, std::vector<Perm> gens,
                               std::vector<Point> base_hint = {}) {
  return PermGroup(degree, std::move(gens), std::move(base_hint));
}

}  // namespace latlas
