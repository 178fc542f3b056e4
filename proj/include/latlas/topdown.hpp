#pragma once

#include <atomic>
#include <deque>
#include <exception>
#include <thread>
#include <tuple>
#include <vector>

#include "latlas/config.hpp"
#include "latlas/conjugacy.hpp"
#include "latlas/degree_reduction.hpp"
#include "latlas/group.hpp"
#include "latlas/lattice.hpp"
#include "latlas/poset.hpp"

namespace latlas {

struct MaximalClass {
  PermGroup rep;
  BigInt length;  // class length under conjugation by the input group
};

/// One representative per conjugacy class (under H itself) of maximal
/// subgroups of H.  H is degree-reduced first; the enumeration runs on the
/// reduced image and the representatives are pulled back through the
/// reduction map.
inline std::vector<MaximalClass> maximal_subgroup_classes(
    const PermGroup& h, const Config& cfg = {}) {
  Homomorphism red = reduce_degree(h, cfg);
  SubgroupClasses cs = enumerate_subgroup_classes(red.image(), cfg);
  std::vector<MaximalClass> out;
  for (size_t mi : maximal_classes(cs)) {
    PermGroup back = red.preimage_group(cs.classes[mi].rep);
    out.push_back({PermGroup(h.degree(), back.small_generating_set()),
                   cs.classes[mi].length});
  }
  return out;
}

inline std::vector<PermGroup> maximal_subgroups(const PermGroup& h,
                                                const Config& cfg = {}) {
  std::vector<PermGroup> out;
  for (auto& m : maximal_subgroup_classes(h, cfg)) out.push_back(std::move(m.rep));
  return out;
}

/// Top-down frontier computation of the weighted lattice: start from the
/// whole group, repeatedly expand frontier classes into their maximal
/// subgroup classes, dedupe against the registry of known classes, and
/// accumulate maximal-inclusion edges.  The frontier is processed in rounds
/// sorted by (order desc, discovery asc); expansions within a round may run
/// concurrently, results are merged in round order, so the outcome does not
/// depend on the thread count.
class TopDownEngine {
 public:
  /// Resumable state: everything needed to continue a run.
  struct Snapshot {
    std::vector<std::vector<Perm>> class_gens;  // discovery order
    std::vector<BigInt> orders, lengths;        // per class, informational
    std::vector<bool> expanded;
    std::vector<std::tuple<size_t, size_t, BigInt>> edges;  // (a, b, n_ab)
    std::vector<size_t> pending;  // unexpanded class ids, processing order
  };

  TopDownEngine(const PermGroup& g, const Config& cfg = {}) : g_(g), cfg_(cfg) {
    register_class(g_);
  }

  TopDownEngine(const PermGroup& g, const Config& cfg, const Snapshot& snap)
      : g_(g), cfg_(cfg) {
    for (const auto& gens : snap.class_gens)
      register_class(PermGroup(g_.degree(), gens));
    backlog_.clear();
    for (size_t i = 0; i < snap.orders.size() && i < classes_.size(); ++i)
      if (classes_[i].order != snap.orders[i])
        throw error("malformed snapshot: class order");
    if (snap.expanded.size() != classes_.size())
      throw error("malformed snapshot: expanded flags");
    for (size_t i = 0; i < classes_.size(); ++i)
      classes_[i].expanded = snap.expanded[i];
    for (const auto& [a, b, n] : snap.edges) {
      if (a >= classes_.size() || b >= classes_.size())
        throw error("malformed snapshot: edge endpoint");
      edges_[{a, b}] = n;
    }
    for (size_t id : snap.pending) {
      if (id >= classes_.size() || classes_[id].expanded)
        throw error("malformed snapshot: pending id");
      round_.push_back(id);
    }
  }

  Snapshot snapshot() const {
    Snapshot s;
    for (const auto& c : classes_) {
      s.class_gens.push_back(c.rep.generators());
      s.orders.push_back(c.order);
      s.lengths.push_back(c.length);
      s.expanded.push_back(c.expanded);
    }
    for (const auto& [key, n] : edges_)
      s.edges.push_back({key.first, key.second, n});
    for (size_t id : round_) s.pending.push_back(id);
    for (size_t id : sorted_backlog()) s.pending.push_back(id);
    return s;
  }

  const PermGroup& ambient() const { return g_; }
  size_t class_count() const { return classes_.size(); }
  bool done() const { return round_.empty() && backlog_.empty(); }

  /// Expands one frontier class (the next in round order).
  void step() {
    if (done()) return;
    refill_if_needed();
    size_t id = round_.front();
    round_.pop_front();
    merge(id, expand(classes_[id].rep, cfg_, classes_[id].order));
  }

  /// Runs to completion; rounds are expanded with cfg.threads workers.
  void run() {
    while (!done()) {
      refill_if_needed();
      std::vector<size_t> batch(round_.begin(), round_.end());
      round_.clear();
      std::vector<Expansion> results(batch.size());
      std::vector<std::exception_ptr> errs(batch.size());
      unsigned workers = std::max(1u, cfg_.threads);
      workers = std::min<unsigned>(workers, batch.size());
      if (workers <= 1) {
        for (size_t i = 0; i < batch.size(); ++i)
          results[i] = expand(classes_[batch[i]].rep, cfg_,
                              classes_[batch[i]].order);
      } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
          pool.emplace_back([&]() {
            for (size_t i = next.fetch_add(1); i < batch.size();
                 i = next.fetch_add(1)) {
              try {
                results[i] = expand(classes_[batch[i]].rep, cfg_,
                                    classes_[batch[i]].order);
              } catch (...) {
                errs[i] = std::current_exception();
              }
            }
          });
        for (auto& t : pool) t.join();
        for (auto& e : errs)
          if (e) std::rethrow_exception(e);
      }
      for (size_t i = 0; i < batch.size(); ++i) merge(batch[i], results[i]);
    }
  }

  /// Final weighted lattice: class ids by (order desc, discovery asc),
  /// non-covering inclusion edges pruned, weights checked.
  WeightedLattice finalize() const {
    if (!done()) throw error("lattice computation is not finished");
    const size_t nc = classes_.size();
    std::vector<size_t> order(nc);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (classes_[a].order != classes_[b].order)
        return classes_[a].order > classes_[b].order;
      return a < b;
    });
    std::vector<size_t> newid(nc);
    for (size_t i = 0; i < nc; ++i) newid[order[i]] = i;

    WeightedLattice lat;
    lat.ambient = g_;
    for (size_t i = 0; i < nc; ++i) {
      const auto& c = classes_[order[i]];
      ClassNode node;
      node.representative = c.rep;
      node.order = c.order;
      node.class_length = c.length;
      node.id = i;
      lat.classes.push_back(std::move(node));
    }

    // reachability over recorded maximal-inclusion edges = strict class order
    std::vector<std::vector<bool>> reach(nc, std::vector<bool>(nc, false));
    for (const auto& [key, n] : edges_) reach[newid[key.first]][newid[key.second]] = true;
    for (size_t z = 0; z < nc; ++z)
      for (size_t a = 0; a < nc; ++a)
        if (reach[a][z])
          for (size_t b = 0; b < nc; ++b)
            if (reach[z][b]) reach[a][b] = true;

    for (const auto& [key, n_ab] : edges_) {
      size_t a = newid[key.first], b = newid[key.second];
      bool is_cover = true;
      for (size_t z = 0; z < nc && is_cover; ++z)
        if (z != a && z != b && reach[a][z] && reach[z][b]) is_cover = false;
      if (!is_cover) continue;
      CoverEdge e;
      e.a = a;
      e.b = b;
      e.n_ab = n_ab;
      BigInt lhs = lat.classes[a].class_length * n_ab;
      if (lhs % lat.classes[b].class_length != 0)
        throw error("internal: weight identity violated");
      e.n_ba = lhs / lat.classes[b].class_length;
      lat.covers.push_back(std::move(e));
    }
    std::sort(lat.covers.begin(), lat.covers.end(),
              [](const CoverEdge& x, const CoverEdge& y) {
                return std::tie(x.a, x.b) < std::tie(y.a, y.b);
              });
    return lat;
  }

 private:
  struct Rec {
    PermGroup rep;
    BigInt order, length;
    bool expanded = false;
  };

  struct Expansion {
    std::vector<MaximalClass> maximals;
  };

  static Expansion expand(const PermGroup& rep, const Config& cfg,
                          const BigInt& order) {
    try {
      return Expansion{maximal_subgroup_classes(rep, cfg)};
    } catch (const cap_exceeded& e) {
      throw cap_exceeded("while expanding the class of order " + order.str() +
                         ": " + e.what());
    }
  }

  size_t register_class(const PermGroup& grp) {
    PermGroup slim(g_.degree(), grp.small_generating_set());
    auto orb = subgroup_conjugation_orbit(g_, slim, cfg_);
    size_t id = classes_.size();
    for (const auto& fp : orb.fps) registry_[fp] = id;
    Rec r;
    r.order = slim.order();
    r.length = BigInt(orb.fps.size());
    r.rep = std::move(slim);
    classes_.push_back(std::move(r));
    backlog_.push_back(id);
    return id;
  }

  void merge(size_t a, const Expansion& ex) {
    classes_[a].expanded = true;
    for (const auto& m : ex.maximals) {
      SubFp fp = fingerprint(m.rep, cfg_.enumeration_cap);
      auto it = registry_.find(fp);
      size_t b = (it != registry_.end()) ? it->second : register_class(m.rep);
      edges_[{a, b}] += m.length;
    }
  }

  std::vector<size_t> sorted_backlog() const {
    std::vector<size_t> v = backlog_;
    std::sort(v.begin(), v.end(), [&](size_t a, size_t b) {
      if (classes_[a].order != classes_[b].order)
        return classes_[a].order > classes_[b].order;
      return a < b;
    });
    return v;
  }

  void refill_if_needed() {
    if (!round_.empty()) return;
    for (size_t id : sorted_backlog()) round_.push_back(id);
    backlog_.clear();
  }

  PermGroup g_;
  Config cfg_;
  std::vector<Rec> classes_;
  std::unordered_map<SubFp, size_t, SubFpHash> registry_;
  std::map<std::pair<size_t, size_t>, BigInt> edges_;
  std::deque<size_t> round_;
  std::vector<size_t> backlog_;
};

inline WeightedLattice subgroup_lattice_topdown(const PermGroup& g,
                                                const Config& cfg = {}) {
  TopDownEngine engine(g, cfg);
  engine.run();
  return engine.finalize();
}

}  // namespace latlas
