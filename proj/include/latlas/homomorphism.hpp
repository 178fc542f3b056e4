#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "latlas/config.hpp"
#include "latlas/conjugacy.hpp"
#include "latlas/errors.hpp"
#include "latlas/group.hpp"
#include "latlas/perm.hpp"

namespace latlas {

/// Schreier-Sims over pairs (lead, payload): chain logic runs on the lead
/// permutations, every transversal entry carries its payload along, and
/// residuals with identity lead are collected into a payload subgroup.
/// With lead = source generators and payload = their images this verifies a
/// generator map is a homomorphism (the collected subgroup must be trivial);
/// with the roles swapped it yields the kernel and computes preimages.
class PairChain {
 public:
  struct DPerm {
    Perm lead, payload;
  };

  PairChain(Point lead_degree, Point payload_degree, std::vector<DPerm> gens)
      : lead_degree_(lead_degree),
        payload_degree_(payload_degree),
        collected_(PermGroup::trivial(payload_degree)) {
    for (const auto& g : gens) all_payloads_.push_back(g.payload);
    for (auto& g : gens) {
      if (g.lead.is_identity()) {
        absorb_payload(g.payload);
        continue;
      }
      gens_.push_back(std::move(g));
    }
    for (const auto& g : gens_) place_new_generator(g);
    sims(0);
    lead_order_ = 1;
    for (const auto& L : levels_) lead_order_ *= BigInt(L.orbit.size());
  }

  const BigInt& lead_order() const { return lead_order_; }

  /// Group generated by payloads of elements whose lead is the identity.
  const PermGroup& payload_kernel() const { return collected_; }

  /// For a lead-group element, the payload of a chain factorization; well
  /// defined modulo the payload kernel.  Throws if `lead` is not in the
  /// lead group.
  Perm map(Perm lead) const {
    Perm payload = Perm::identity(payload_degree_);
    for (const auto& L : levels_) {
      Point t = lead[L.base];
      if (t == L.base) continue;
      if (L.where[t] < 0)
        throw error("element is not in the domain of the homomorphism");
      while (t != L.base) {
        const DPerm& e = L.gens[L.parent_gen[t]];
        lead = L.gen_inv_leads[L.parent_gen[t]] * lead;
        payload = payload * e.payload;
        t = L.parent_pt[t];
      }
    }
    if (!lead.is_identity())
      throw error("element is not in the domain of the homomorphism");
    return payload;
  }

  bool lead_contains(Perm lead) const {
    for (const auto& L : levels_) {
      Point t = lead[L.base];
      if (t == L.base) continue;
      if (L.where[t] < 0) return false;
      while (t != L.base) {
        lead = L.gen_inv_leads[L.parent_gen[t]] * lead;
        t = L.parent_pt[t];
      }
    }
    return lead.is_identity();
  }

 private:
  struct Level {
    Point base = 0;
    std::vector<DPerm> gens;
    std::vector<Perm> gen_inv_leads;
    std::vector<DPerm> gen_invs;
    std::vector<Point> orbit;
    std::vector<std::int32_t> where, parent_gen;
    std::vector<Point> parent_pt;
  };

  static DPerm dmul(const DPerm& a, const DPerm& b) {
    return {a.lead * b.lead, a.payload * b.payload};
  }

  // The identity-lead subgroup is normal, so the collected payloads must be
  // closed under conjugation by every payload generator.
  void absorb_payload(const Perm& p) {
    if (p.is_identity() || collected_.contains(p)) return;
    std::vector<Perm> work{p};
    for (size_t i = 0; i < work.size(); ++i) {
      if (!collected_.contains(work[i]))
        collected_ = collected_.extended({work[i]});
      for (const auto& q : all_payloads_) {
        Perm c = work[i].conjugated_by(q);
        if (!collected_.contains(c)) work.push_back(c);
      }
    }
  }

  void place_new_generator(const DPerm& g) {
    size_t lvl = 0;
    while (lvl < levels_.size() && g.lead[levels_[lvl].base] == levels_[lvl].base)
      ++lvl;
    if (lvl == levels_.size()) append_level(g);
    for (size_t k = 0; k <= lvl && k < levels_.size(); ++k) add_gen(k, g);
  }

  void append_level(const DPerm& mover) {
    Level L;
    L.base = mover.lead.first_moved();
    L.where.assign(lead_degree_, -1);
    L.parent_gen.assign(lead_degree_, -1);
    L.parent_pt.assign(lead_degree_, 0);
    levels_.push_back(std::move(L));
  }

  void add_gen(size_t lvl, const DPerm& g) {
    for (const auto& have : levels_[lvl].gens)
      if (have.lead == g.lead && have.payload == g.payload) return;
    levels_[lvl].gens.push_back(g);
    levels_[lvl].gen_inv_leads.push_back(g.lead.inverse());
    levels_[lvl].gen_invs.push_back({g.lead.inverse(), g.payload.inverse()});
  }

  void rebuild_orbit(size_t lvl) {
    Level& L = levels_[lvl];
    std::fill(L.where.begin(), L.where.end(), -1);
    L.orbit.assign(1, L.base);
    L.where[L.base] = 0;
    for (size_t k = 0; k < L.orbit.size(); ++k) {
      Point p = L.orbit[k];
      for (size_t gi = 0; gi < L.gens.size(); ++gi) {
        Point t = L.gens[gi].lead[p];
        if (L.where[t] < 0) {
          L.where[t] = static_cast<std::int32_t>(L.orbit.size());
          L.parent_gen[t] = static_cast<std::int32_t>(gi);
          L.parent_pt[t] = p;
          L.orbit.push_back(t);
        }
      }
    }
  }

  DPerm transversal(size_t lvl, Point p) const {
    const Level& L = levels_[lvl];
    DPerm u{Perm::identity(lead_degree_), Perm::identity(payload_degree_)};
    while (p != L.base) {
      u = dmul(u, L.gens[L.parent_gen[p]]);
      p = L.parent_pt[p];
    }
    return u;
  }

  std::pair<DPerm, size_t> sift_from(DPerm p, size_t from) const {
    for (size_t lvl = from; lvl < levels_.size(); ++lvl) {
      const Level& L = levels_[lvl];
      Point t = p.lead[L.base];
      if (t == L.base) continue;
      if (L.where[t] < 0) return {std::move(p), lvl};
      while (t != L.base) {
        p = dmul(L.gen_invs[L.parent_gen[t]], p);
        t = L.parent_pt[t];
      }
    }
    return {std::move(p), levels_.size()};
  }

  void sims(size_t i) {
    if (i >= levels_.size()) return;
    rebuild_orbit(i);
    for (size_t oi = 0; oi < levels_[i].orbit.size(); ++oi) {
      Point p = levels_[i].orbit[oi];
      DPerm up = transversal(i, p);
      for (size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
        DPerm s = dmul(levels_[i].gens[gi], up);
        {
          Point t = s.lead[levels_[i].base];
          while (t != levels_[i].base) {
            s = dmul(levels_[i].gen_invs[levels_[i].parent_gen[t]], s);
            t = levels_[i].parent_pt[t];
          }
        }
        if (s.lead.is_identity()) {
          absorb_payload(s.payload);
          continue;
        }
        auto [res, j] = sift_from(s, i + 1);
        if (res.lead.is_identity()) {
          absorb_payload(res.payload);
          continue;
        }
        if (j == levels_.size()) append_level(res);
        for (size_t k = i + 1; k <= j && k < levels_.size(); ++k)
          add_gen(k, res);
        for (size_t k = std::min(j, levels_.size() - 1); k > i; --k) sims(k);
      }
    }
  }

  Point lead_degree_, payload_degree_;
  std::vector<Perm> all_payloads_;
  std::vector<DPerm> gens_;
  std::vector<Level> levels_;
  PermGroup collected_;
  BigInt lead_order_ = 1;
};

/// A homomorphism between permutation groups, given by generator images.
/// Construction verifies the map extends to the whole source group.
class Homomorphism {
 public:
  static Homomorphism from_gen_images(const PermGroup& source,
                                      Point target_degree,
                                      std::vector<Perm> images) {
    if (images.size() != source.generators().size())
      throw error("generator image count mismatch");
    Homomorphism h;
    h.source_ = source;
    h.gen_images_ = std::move(images);

    std::vector<PairChain::DPerm> fwd, bwd;
    for (size_t i = 0; i < h.gen_images_.size(); ++i) {
      fwd.push_back({source.generators()[i], h.gen_images_[i]});
      bwd.push_back({h.gen_images_[i], source.generators()[i]});
    }
    h.forward_ = std::make_shared<PairChain>(source.degree(), target_degree,
                                             std::move(fwd));
    if (!h.forward_->payload_kernel().is_trivial())
      throw error("generator images do not define a homomorphism");
    h.backward_ = std::make_shared<PairChain>(target_degree, source.degree(),
                                              std::move(bwd));
    h.image_ = PermGroup(target_degree, h.gen_images_);
    h.kernel_order_ = h.backward_->payload_kernel().order();
    if (h.kernel_order_ * h.image_.order() != source.order())
      throw error("internal: kernel/image order mismatch");
    return h;
  }

  static Homomorphism identity(const PermGroup& g) {
    return from_gen_images(g, g.degree(), g.generators());
  }

  const PermGroup& source() const { return source_; }
  const PermGroup& image() const { return image_; }
  const std::vector<Perm>& generator_images() const { return gen_images_; }
  const BigInt& kernel_order() const { return kernel_order_; }
  bool is_isomorphism() const { return kernel_order_ == 1; }

  Perm apply(const Perm& p) const { return forward_->map(p); }

  /// Some preimage of an image element (unique when the kernel is trivial).
  Perm preimage(const Perm& q) const { return backward_->map(q); }

  const PermGroup& kernel() const { return backward_->payload_kernel(); }

  /// Full preimage of a subgroup of the image.
  PermGroup preimage_group(const PermGroup& sub) const {
    std::vector<Perm> gens;
    for (const auto& g : sub.generators()) gens.push_back(preimage(g));
    for (const auto& g : backward_->payload_kernel().generators())
      gens.push_back(g);
    return PermGroup(source_.degree(), std::move(gens));
  }

 private:
  Homomorphism() = default;

  PermGroup source_, image_;
  std::vector<Perm> gen_images_;
  BigInt kernel_order_ = 1;
  std::shared_ptr<PairChain> forward_, backward_;
};

/// Action of G on the right cosets of H, as a homomorphism onto a group of
/// degree [G:H].  The kernel is the core of H in G.
inline Homomorphism coset_action(const PermGroup& g, const PermGroup& h,
                                 const Config& cfg = {}) {
  require_subgroup(g, h, "coset_action");
  BigInt index_big = g.order() / h.order();
  if (index_big > cfg.coset_index_cap)
    throw cap_exceeded("coset index " + index_big.str() + " exceeds cap " +
                       std::to_string(cfg.coset_index_cap));
  const std::uint64_t index = to_u64(index_big);

  // left cosets tH acted on by left multiplication, so that
  // sigma_{g1*g2} = sigma_{g1} * sigma_{g2} under (p*q)(i) = p(q(i))
  auto horb = h.orbit_ids();
  const Point sig_pts = std::min<Point>(g.degree(), 6);
  // invariant of the coset tH: H-orbit ids of t^-1 on the first points
  auto sig_of = [&](const Perm& tinv) {
    std::vector<Point> s(sig_pts);
    for (Point x = 0; x < sig_pts; ++x) s[x] = horb[tinv[x]];
    return s;
  };

  std::vector<Perm> reps{Perm::identity(g.degree())};
  std::vector<Perm> rep_invs{Perm::identity(g.degree())};
  std::map<std::vector<Point>, std::vector<std::uint32_t>> buckets;
  buckets[sig_of(rep_invs[0])].push_back(0);

  auto find_or_add = [&](const Perm& u) -> std::uint32_t {
    Perm uinv = u.inverse();
    auto& bucket = buckets[sig_of(uinv)];
    for (std::uint32_t j : bucket)
      if (h.contains(rep_invs[j] * u)) return j;  // tH == uH iff t^-1 u in H
    reps.push_back(u);
    rep_invs.push_back(std::move(uinv));
    bucket.push_back(static_cast<std::uint32_t>(reps.size() - 1));
    return static_cast<std::uint32_t>(reps.size() - 1);
  };

  std::vector<std::vector<Point>> cols(g.generators().size());
  for (size_t i = 0; i < reps.size(); ++i) {
    if (reps.size() > index) throw error("internal: coset table overflow");
    for (size_t gi = 0; gi < g.generators().size(); ++gi) {
      std::uint32_t j = find_or_add(g.generators()[gi] * reps[i]);
      if (cols[gi].size() <= i) cols[gi].resize(i + 1);
      cols[gi][i] = j;
    }
  }
  if (reps.size() != index) throw error("internal: coset table incomplete");

  std::vector<Perm> images;
  for (auto& c : cols) {
    c.resize(index);
    images.push_back(Perm(std::move(c)));
  }
  return Homomorphism::from_gen_images(g, static_cast<Point>(index),
                                       std::move(images));
}

/// The quotient G/N as a permutation group (N must be normal).
inline Homomorphism quotient_map(const PermGroup& g, const PermGroup& n,
                                 const Config& cfg = {}) {
  if (!is_normal_in(g, n)) throw error("quotient by a non-normal subgroup");
  return coset_action(g, n, cfg);
}

}  // namespace latlas
