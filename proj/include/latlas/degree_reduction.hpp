#pragma once

#include <optional>
#include <vector>

#include "latlas/blocks.hpp"
#include "latlas/config.hpp"
#include "latlas/conjugacy.hpp"
#include "latlas/group.hpp"
#include "latlas/homomorphism.hpp"
#include "latlas/perm.hpp"

namespace latlas {

/// g after f, as a single homomorphism from f's source.
inline Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  std::vector<Perm> images;
  for (const auto& im : f.generator_images()) images.push_back(g.apply(im));
  return Homomorphism::from_gen_images(f.source(), g.image().degree(),
                                       std::move(images));
}

/// Restriction of G to the points of the selected orbits (renumbered in
/// increasing order).  Faithful iff no nontrivial element fixes them all.
inline Homomorphism orbit_restriction(const PermGroup& g,
                                      const std::vector<Point>& points) {
  std::vector<int> newidx(g.degree(), -1);
  for (size_t i = 0; i < points.size(); ++i) newidx[points[i]] = static_cast<int>(i);
  std::vector<Perm> images;
  for (const auto& gen : g.generators()) {
    std::vector<Point> img(points.size());
    for (size_t i = 0; i < points.size(); ++i)
      img[i] = static_cast<Point>(newidx[gen[points[i]]]);
    images.push_back(Perm(std::move(img)));
  }
  return Homomorphism::from_gen_images(g, static_cast<Point>(points.size()),
                                       std::move(images));
}

namespace detail {

/// Greedily drops orbits (largest first) while the remaining action stays
/// faithful; returns the restriction when it shrinks the degree.
inline std::optional<Homomorphism> try_orbit_drop(const PermGroup& g) {
  auto orbs = g.orbits();
  if (orbs.size() <= 1) return std::nullopt;
  std::vector<size_t> idx(orbs.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (orbs[a].size() != orbs[b].size()) return orbs[a].size() > orbs[b].size();
    return orbs[a][0] < orbs[b][0];
  });
  std::vector<bool> kept(orbs.size(), true);
  auto kept_points = [&]() {
    std::vector<Point> pts;
    for (size_t k = 0; k < orbs.size(); ++k)
      if (kept[k]) pts.insert(pts.end(), orbs[k].begin(), orbs[k].end());
    std::sort(pts.begin(), pts.end());
    return pts;
  };
  for (size_t k : idx) {
    size_t still = 0;
    for (bool b : kept) still += b;
    if (still == 1) break;
    kept[k] = false;
    Homomorphism r = orbit_restriction(g, kept_points());
    if (!r.is_isomorphism()) kept[k] = true;
  }
  auto pts = kept_points();
  if (pts.size() == g.degree()) return std::nullopt;
  return orbit_restriction(g, pts);
}

inline std::optional<Homomorphism> try_blocks(const PermGroup& g) {
  std::optional<Homomorphism> best;
  for (const auto& orb : g.orbits()) {
    if (orb.size() < 2) continue;
    for (size_t bi = 1; bi < orb.size(); ++bi) {
      auto blocks = minimal_block_system(g, orb[0], orb[bi]);
      if (blocks.size() <= 1 || blocks.size() == orb.size()) continue;
      Homomorphism act = block_action(g, blocks);
      if (!act.is_isomorphism()) continue;
      if (!best || act.image().degree() < best->image().degree()) best = act;
    }
  }
  if (best && best->image().degree() < g.degree()) return best;
  return std::nullopt;
}

/// Candidate subgroups for faithful coset actions: the first point
/// stabilizer, cyclic groups from generators and short products, and — for
/// small groups — greedily grown maximal p-subgroups.
inline std::vector<PermGroup> coset_candidates(const PermGroup& g,
                                               const Config& cfg) {
  std::vector<PermGroup> cands;
  cands.push_back(g.stabilizer_prefix(1));
  const auto& gens = g.generators();
  for (const auto& a : gens) cands.push_back(PermGroup(g.degree(), {a}));
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j)
      if (i != j) cands.push_back(PermGroup(g.degree(), {gens[i] * gens[j]}));
  if (g.order() <= cfg.coset_index_cap) {
    auto elems = g.elements(cfg.coset_index_cap);
    std::uint64_t order = to_u64(g.order());
    for (std::uint64_t p = 2; p <= order; ++p) {
      if (order % p) continue;
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) {
          prime = false;
          break;
        }
      if (!prime) continue;
      // grow a maximal p-subgroup; maximal p-subgroups are Sylow
      PermGroup syl = PermGroup::trivial(g.degree());
      for (const auto& e : elems) {
        std::uint64_t eo = e.order();
        bool ppow = eo > 0;
        while (eo > 1 && eo % p == 0) eo /= p;
        if (!ppow || eo != 1 || syl.contains(e)) continue;
        PermGroup ext = syl.extended({e});
        std::uint64_t xo = to_u64(ext.order());
        while (xo > 1 && xo % p == 0) xo /= p;
        if (xo == 1) syl = ext;
      }
      if (!syl.is_trivial()) cands.push_back(syl);
    }
  }
  return cands;
}

inline std::optional<Homomorphism> try_cosets(const PermGroup& g,
                                              const Config& cfg) {
  std::optional<Homomorphism> best;
  for (const auto& h : coset_candidates(g, cfg)) {
    if (h.is_trivial() || h.order() == g.order()) continue;
    BigInt index = g.order() / h.order();
    if (index >= g.degree() || index > cfg.coset_index_cap) continue;
    if (best && index >= best->image().degree()) continue;
    Homomorphism act = coset_action(g, h, cfg);
    if (act.is_isomorphism()) best = act;
  }
  return best;
}

inline std::optional<Homomorphism> reduce_step(const PermGroup& g,
                                               const Config& cfg) {
  std::optional<Homomorphism> best;
  auto consider = [&](std::optional<Homomorphism> h) {
    if (!h) return;
    if (!best || h->image().degree() < best->image().degree())
      best = std::move(h);
  };
  consider(try_orbit_drop(g));
  consider(try_blocks(g));
  consider(try_cosets(g, cfg));
  if (best && best->image().degree() < g.degree()) return best;
  return std::nullopt;
}

}  // namespace detail

/// A faithful action of G of the smallest degree the candidate search finds
/// (orbit drop, block actions, coset actions), iterated to a fixed point.
/// Falls back to the identity when nothing helps.
inline Homomorphism reduce_degree(const PermGroup& g, const Config& cfg = {}) {
  Homomorphism best = Homomorphism::identity(g);
  while (true) {
    auto step = detail::reduce_step(best.image(), cfg);
    if (!step) break;
    best = compose(best, *step);
  }
  return best;
}

}  // namespace latlas
