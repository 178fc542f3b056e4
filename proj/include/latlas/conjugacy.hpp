#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "latlas/config.hpp"
#include "latlas/errors.hpp"
#include "latlas/group.hpp"
#include "latlas/perm.hpp"

namespace latlas {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Order-independent fingerprint of a subgroup's element set.  Two subgroups
/// of the same ambient group collide only if they are equal (up to hash
/// collisions over 128 bits, which the callers treat as negligible after an
/// order check).
struct SubFp {
  std::uint64_t order = 0;
  std::uint64_t h1 = 0, h2 = 0;
  bool operator==(const SubFp&) const = default;
};

struct SubFpHash {
  size_t operator()(const SubFp& f) const {
    return splitmix64(f.h1 ^ splitmix64(f.h2 + f.order));
  }
};

inline SubFp fingerprint_elements(const std::vector<Perm>& elems) {
  SubFp f;
  f.order = elems.size();
  for (const auto& e : elems) {
    std::uint64_t h = e.hash();
    f.h1 += splitmix64(h);
    f.h2 += splitmix64(h ^ 0x5bf03635f0a429c2ull);
  }
  return f;
}

inline SubFp fingerprint(const PermGroup& h, std::uint64_t cap) {
  return fingerprint_elements(h.elements(cap));
}

/// Fingerprint of g^-1 H g computed from H's element list without building
/// the conjugate group.
inline SubFp fingerprint_conjugated(const std::vector<Perm>& elems,
                                    const Perm& g) {
  Point n = g.degree();
  std::vector<Point> ginv(n);
  for (Point i = 0; i < n; ++i) ginv[g[i]] = i;
  SubFp f;
  f.order = elems.size();
  std::vector<Point> buf(n);
  for (const auto& e : elems) {
    for (Point i = 0; i < n; ++i) buf[ginv[i]] = ginv[e[i]];
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : buf) {
      h ^= x;
      h *= 1099511628211ull;
    }
    f.h1 += splitmix64(h);
    f.h2 += splitmix64(h ^ 0x5bf03635f0a429c2ull);
  }
  return f;
}

inline std::map<std::uint64_t, std::uint64_t> element_order_histogram(
    const PermGroup& g, std::uint64_t cap) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (const auto& e : g.elements(cap)) ++h[e.order()];
  return h;
}

inline std::vector<std::uint64_t> orbit_size_multiset(const PermGroup& g) {
  std::vector<std::uint64_t> sizes;
  for (const auto& o : g.orbits()) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

inline bool is_normal_in(const PermGroup& g, const PermGroup& h) {
  for (const auto& hg : h.generators())
    for (const auto& gg : g.generators())
      if (!h.contains(hg.conjugated_by(gg))) return false;
  return true;
}

/// Smallest normal subgroup of g containing `seed`.
inline PermGroup normal_closure(const PermGroup& g,
                                const std::vector<Perm>& seed) {
  PermGroup cur(g.degree(), seed);
  std::vector<Perm> work = cur.generators();
  for (size_t i = 0; i < work.size(); ++i)
    for (const auto& gg : g.generators()) {
      Perm c = work[i].conjugated_by(gg);
      if (!cur.contains(c)) {
        cur = cur.extended({c});
        work.push_back(c);
      }
    }
  return cur;
}

inline PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) comms.push_back(c);
    }
  return normal_closure(g, comms);
}

inline bool is_perfect(const PermGroup& g) {
  return derived_subgroup(g).order() == g.order();
}

/// Elements of g commuting with every element of g (needs enumeration).
inline PermGroup center(const PermGroup& g, std::uint64_t cap) {
  std::vector<Perm> z;
  for (const auto& e : g.elements(cap)) {
    bool central = true;
    for (const auto& gg : g.generators())
      if (!(e * gg == gg * e)) {
        central = false;
        break;
      }
    if (central && !e.is_identity()) z.push_back(e);
  }
  return PermGroup(g.degree(), z);
}

/// Conjugation orbit of a subgroup under the ambient group's generators.
/// Fingerprints identify members; the transversal element t for member i
/// satisfies member_i = t^-1 H t.
struct SubgroupOrbit {
  std::vector<SubFp> fps;
  std::vector<Perm> transversal;
  std::optional<size_t> hit;  // index whose fp matched `stop_at`
};

inline SubgroupOrbit subgroup_conjugation_orbit(
    const PermGroup& ambient, const PermGroup& h, const Config& cfg,
    const SubFp* stop_at = nullptr, std::vector<Perm>* schreier_out = nullptr) {
  auto elems = h.elements(cfg.enumeration_cap);
  SubgroupOrbit orb;
  std::unordered_map<SubFp, size_t, SubFpHash> where;
  orb.fps.push_back(fingerprint_elements(elems));
  orb.transversal.push_back(Perm::identity(ambient.degree()));
  where[orb.fps[0]] = 0;
  if (stop_at && orb.fps[0] == *stop_at) {
    orb.hit = 0;
    if (!schreier_out) return orb;
  }
  std::uint64_t cap = cfg.enumeration_cap;
  for (size_t i = 0; i < orb.fps.size(); ++i) {
    for (const auto& g : ambient.generators()) {
      Perm t = orb.transversal[i] * g;
      SubFp fp = fingerprint_conjugated(elems, t);
      auto it = where.find(fp);
      if (it == where.end()) {
        if (orb.fps.size() >= cap)
          throw cap_exceeded("subgroup conjugation orbit exceeds cap");
        where[fp] = orb.fps.size();
        orb.fps.push_back(fp);
        orb.transversal.push_back(t);
        if (stop_at && fp == *stop_at) {
          orb.hit = orb.fps.size() - 1;
          if (!schreier_out) return orb;
        }
      } else if (schreier_out) {
        Perm s = t * orb.transversal[it->second].inverse();
        if (!s.is_identity()) schreier_out->push_back(s);
      }
    }
  }
  return orb;
}

inline void require_subgroup(const PermGroup& g, const PermGroup& h,
                             const char* who) {
  if (!h.is_subgroup_of(g))
    throw error(std::string(who) + ": H is not a subgroup of G");
}

/// N_G(H) via orbit-stabilizer on the conjugation action.
inline PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                            const Config& cfg = {}) {
  require_subgroup(g, h, "normalizer");
  std::vector<Perm> schreier;
  auto orb = subgroup_conjugation_orbit(g, h, cfg, nullptr, &schreier);
  PermGroup n = h;
  for (const auto& s : schreier)
    if (!n.contains(s)) n = n.extended({s});
  return n;
}

/// C_G(H) via orbit-stabilizer on conjugation of H's generator tuple.
inline PermGroup centralizer(const PermGroup& g, const PermGroup& h,
                             const Config& cfg = {}) {
  require_subgroup(g, h, "centralizer");
  std::vector<Perm> hgens = h.generators();
  if (hgens.empty()) return g;

  auto tuple_fp = [&](const Perm& t) {
    SubFp f;
    f.order = hgens.size();
    for (const auto& x : hgens) {
      std::uint64_t h = x.conjugated_by(t).hash();
      f.h1 = splitmix64(f.h1 ^ h);
      f.h2 = splitmix64(f.h2 ^ splitmix64(h));
    }
    return f;
  };

  std::vector<Perm> transversal{Perm::identity(g.degree())};
  std::unordered_map<SubFp, size_t, SubFpHash> where{
      {tuple_fp(transversal[0]), 0}};
  std::vector<Perm> schreier;
  for (size_t i = 0; i < transversal.size(); ++i)
    for (const auto& gg : g.generators()) {
      Perm t = transversal[i] * gg;
      SubFp fp = tuple_fp(t);
      auto it = where.find(fp);
      if (it == where.end()) {
        if (transversal.size() >= cfg.enumeration_cap)
          throw cap_exceeded("centralizer orbit exceeds cap");
        where[fp] = transversal.size();
        transversal.push_back(t);
      } else {
        Perm s = t * transversal[it->second].inverse();
        if (!s.is_identity()) schreier.push_back(s);
      }
    }
  PermGroup c = PermGroup::trivial(g.degree());
  for (const auto& s : schreier)
    if (!c.contains(s)) c = c.extended({s});
  return c;
}

/// Returns g with H^g = K when H and K are conjugate in `ambient`.
/// Invariant prefilters run first; the search walks the conjugation orbit
/// of H, so a miss is an exact negative.
inline std::optional<Perm> is_conjugate_subgroup(const PermGroup& ambient,
                                                 const PermGroup& h,
                                                 const PermGroup& k,
                                                 const Config& cfg = {}) {
  require_subgroup(ambient, h, "is_conjugate_subgroup");
  require_subgroup(ambient, k, "is_conjugate_subgroup");
  if (h.order() != k.order()) return std::nullopt;
  if (orbit_size_multiset(h) != orbit_size_multiset(k)) return std::nullopt;
  if (element_order_histogram(h, cfg.enumeration_cap) !=
      element_order_histogram(k, cfg.enumeration_cap))
    return std::nullopt;
  SubFp target = fingerprint(k, cfg.enumeration_cap);
  auto orb = subgroup_conjugation_orbit(ambient, h, cfg, &target);
  if (!orb.hit) return std::nullopt;
  return orb.transversal[*orb.hit];
}

}  // namespace latlas
