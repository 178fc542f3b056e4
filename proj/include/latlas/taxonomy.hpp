#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "latlas/config.hpp"
#include "latlas/conjugacy.hpp"
#include "latlas/errors.hpp"
#include "latlas/group.hpp"
#include "latlas/homomorphism.hpp"
#include "latlas/poset.hpp"
#include "latlas/simple_table.hpp"
#include "latlas/standard_groups.hpp"

namespace latlas {

using json = nlohmann::ordered_json;

/// All normal subgroups (the conjugacy classes of length 1), sorted by
/// decreasing order with ties broken by enumeration order.  Includes the
/// trivial subgroup and the whole group.
inline std::vector<PermGroup> normal_subgroups(const PermGroup& g,
                                               const Config& cfg = {}) {
  SubgroupClasses cs = enumerate_subgroup_classes(g, cfg);
  std::vector<size_t> ids;
  for (size_t i = 0; i < cs.classes.size(); ++i)
    if (cs.classes[i].length == 1) ids.push_back(i);
  std::stable_sort(ids.begin(), ids.end(), [&](size_t a, size_t b) {
    return cs.classes[a].order > cs.classes[b].order;
  });
  std::vector<PermGroup> out;
  for (size_t i : ids) out.push_back(cs.classes[i].rep);
  return out;
}

/// 1 = chain[0] normal in chain[1] normal in ... normal in chain.back() = G,
/// with each link maximal normal; factors[i] names chain[i+1]/chain[i].
struct CompositionSeries {
  std::vector<PermGroup> chain;
  std::vector<std::string> factors;
};

/// Tie-break policy for picking a maximal normal subgroup at each step;
/// the factor multiset is policy-independent (Jordan-Holder).
enum class SeriesPolicy { largest, smallest_maximal };

/// Deterministic composition series: at each step the largest proper normal
/// subgroup (automatically maximal normal), ties by enumeration order; the
/// alternate policy takes the smallest maximal normal subgroup instead.
inline CompositionSeries composition_series(
    const PermGroup& g, const Config& cfg = {},
    SeriesPolicy policy = SeriesPolicy::largest) {
  std::vector<PermGroup> desc{g};
  while (desc.back().order() > 1) {
    const PermGroup& h = desc.back();
    auto norms = normal_subgroups(h, cfg);
    std::vector<const PermGroup*> proper;
    for (const auto& n : norms)
      if (n.order() < h.order()) proper.push_back(&n);
    PermGroup next;
    if (policy == SeriesPolicy::largest) {
      next = *proper.front();
    } else {
      // last proper normal contained in no other proper normal
      for (auto it = proper.rbegin(); it != proper.rend(); ++it) {
        bool maximal = true;
        for (const PermGroup* m : proper)
          if (m != *it && (*it)->order() < m->order() &&
              (*it)->is_subgroup_of(*m))
            maximal = false;
        if (maximal) {
          next = **it;
          break;
        }
      }
    }
    desc.push_back(std::move(next));
  }
  CompositionSeries cs;
  cs.chain.assign(desc.rbegin(), desc.rend());
  for (size_t i = 0; i + 1 < cs.chain.size(); ++i)
    cs.factors.push_back(identify_simple(
        quotient_map(cs.chain[i + 1], cs.chain[i], cfg).image(), cfg));
  return cs;
}

namespace detail {

inline std::vector<BigInt> derived_series_orders(PermGroup g) {
  std::vector<BigInt> v;
  while (true) {
    PermGroup d = derived_subgroup(g);
    v.push_back(d.order());
    if (d.order() == g.order() || d.order() == 1) break;
    g = std::move(d);
  }
  return v;
}

/// Primary cyclic decomposition of an abelian group, as prime powers sorted
/// decreasingly; recovered from the element-order histogram.
inline std::vector<std::uint64_t> abelian_primary_invariants(
    const PermGroup& a, const Config& cfg) {
  if (!is_abelian(a)) throw error("primary invariants of a nonabelian group");
  std::uint64_t n = to_u64(a.order());
  if (n == 1) return {};
  auto hist = element_order_histogram(a, cfg.enumeration_cap);
  std::vector<std::uint64_t> out;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    // s_k = log_p #(elements of order dividing p^k) = sum_i min(k, lambda_i)
    std::vector<std::uint64_t> s{0};
    std::uint64_t pk = 1, cum = 1;  // identity
    while (true) {
      pk *= p;
      auto it = hist.find(pk);
      if (it == hist.end()) break;
      cum += it->second;
      std::uint64_t lg = 0, v = cum;
      while (v > 1) {
        v /= p;
        ++lg;
      }
      s.push_back(lg);
    }
    // #(lambda_i >= k) = s_k - s_{k-1}
    for (size_t k = s.size() - 1; k >= 1; --k) {
      std::uint64_t at_least_k = s[k] - s[k - 1];
      std::uint64_t at_least_k1 = (k + 1 < s.size()) ? s[k + 1] - s[k] : 0;
      std::uint64_t q = 1;
      for (size_t i = 0; i < k; ++i) q *= p;
      for (std::uint64_t c = at_least_k1; c < at_least_k; ++c) out.push_back(q);
    }
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace detail

/// Isomorphism search for small groups: invariant prefilters, then a
/// backtrack over images of a small generating set, pruning each prefix by
/// checking that it already defines an injective homomorphism.
inline std::optional<Homomorphism> is_isomorphic_small(const PermGroup& a,
                                                       const PermGroup& b,
                                                       const Config& cfg = {}) {
  if (a.order() > cfg.small_group_cap || b.order() > cfg.small_group_cap)
    throw cap_exceeded("isomorphism test beyond the small-group cap");
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() == 1) return Homomorphism::from_gen_images(a, b.degree(), {});
  if (is_abelian(a) != is_abelian(b)) return std::nullopt;
  if (element_order_histogram(a, cfg.enumeration_cap) !=
      element_order_histogram(b, cfg.enumeration_cap))
    return std::nullopt;
  if (detail::derived_series_orders(a) != detail::derived_series_orders(b))
    return std::nullopt;
  if (center(a, cfg.enumeration_cap).order() !=
      center(b, cfg.enumeration_cap).order())
    return std::nullopt;

  std::vector<Perm> gens = a.small_generating_set();
  std::vector<PermGroup> chain;
  for (size_t k = 1; k <= gens.size(); ++k)
    chain.push_back(PermGroup(
        a.degree(), std::vector<Perm>(gens.begin(), gens.begin() + k)));
  std::vector<Perm> belems = b.elements(cfg.enumeration_cap);

  std::vector<Perm> imgs;
  std::optional<Homomorphism> found;
  auto backtrack = [&](auto&& self, size_t depth) -> bool {
    if (depth == gens.size()) return true;
    std::uint64_t want = gens[depth].order();
    for (const auto& e : belems) {
      if (e.order() != want) continue;
      imgs.push_back(e);
      bool ok = false;
      try {
        Homomorphism h =
            Homomorphism::from_gen_images(chain[depth], b.degree(), imgs);
        ok = h.image().order() == chain[depth].order();
        if (ok && depth + 1 == gens.size()) found = std::move(h);
      } catch (const error&) {
      }
      if (ok && self(self, depth + 1)) return true;
      imgs.pop_back();
    }
    return false;
  };
  if (backtrack(backtrack, 0)) return found;
  return std::nullopt;
}

/// A complement to the normal subgroup N in G, if the extension splits.
inline std::optional<PermGroup> is_split_extension(const PermGroup& g,
                                                   const PermGroup& n,
                                                   const Config& cfg = {}) {
  require_subgroup(g, n, "split-extension test");
  if (!is_normal_in(g, n)) throw error("split-extension test: not normal");
  if (n.order() == g.order()) return PermGroup::trivial(g.degree());
  if (n.order() == 1) return g;
  BigInt q = g.order() / n.order();
  if (q < BigInt(1) << 62 && detail::is_prime_u64(to_u64(q))) {
    // a complement of prime order is generated by any order-q element
    // outside N
    std::uint64_t qq = to_u64(q);
    for (const auto& x : g.elements(cfg.enumeration_cap))
      if (x.order() == qq && !n.contains(x))
        return PermGroup(g.degree(), {x});
    return std::nullopt;
  }
  SubgroupClasses cs = enumerate_subgroup_classes(g, cfg);
  for (const auto& c : cs.classes) {
    if (c.order != q) continue;
    // N normal: intersection size with N is constant across the class, so
    // testing the representative suffices
    bool meets = false;
    for (const auto& e : c.rep.elements(cfg.enumeration_cap))
      if (!e.is_identity() && n.contains(e)) {
        meets = true;
        break;
      }
    if (!meets) return c.rep;
  }
  return std::nullopt;
}

/// True iff some complement to N is normal in G, i.e. G is the direct
/// product of N with a complement.  `c` must be a complement (checked).
inline bool is_direct_product(const PermGroup& g, const PermGroup& n,
                              const PermGroup& c, const Config& cfg = {}) {
  require_subgroup(g, n, "direct-product test");
  require_subgroup(g, c, "direct-product test");
  if (c.order() * n.order() != g.order())
    throw error("direct-product test: not a complement");
  for (const auto& e : c.elements(cfg.enumeration_cap))
    if (!e.is_identity() && n.contains(e))
      throw error("direct-product test: not a complement");
  if (n.order() == 1 || c.order() == 1) return true;
  SubgroupClasses cs = enumerate_subgroup_classes(g, cfg);
  for (const auto& cls : cs.classes) {
    if (cls.order != c.order() || cls.length != 1) continue;
    bool meets = false;
    for (const auto& e : cls.rep.elements(cfg.enumeration_cap))
      if (!e.is_identity() && n.contains(e)) {
        meets = true;
        break;
      }
    if (!meets) return true;
  }
  return false;
}

/// x for direct products, : for other split extensions, . for non-split.
inline char extension_symbol(const PermGroup& g, const PermGroup& n,
                             const Config& cfg = {}) {
  auto c = is_split_extension(g, n, cfg);
  if (!c) return '.';
  return is_direct_product(g, n, *c, cfg) ? 'x' : ':';
}

/// Left-associated product of composition factors; ops[i] joins atoms[i]
/// and atoms[i+1].
struct StructureName {
  std::vector<std::string> atoms;
  std::vector<char> ops;

  /// Renders without parentheses; a run of an identical prime atom joined
  /// by x contracts to p^k when the run is a proper sub-expression (the
  /// elementary abelian group itself stays expanded, as 2x2x2x2x2).
  std::string render() const {
    auto is_prime_atom = [](const std::string& s) {
      for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
      return s.size() <= 18 && detail::is_prime_u64(std::stoull(s));
    };
    std::string out;
    size_t m = atoms.size();
    for (size_t i = 0; i < m;) {
      size_t j = i;
      if (is_prime_atom(atoms[i]))
        while (j + 1 < m && atoms[j + 1] == atoms[i] && ops[j] == 'x') ++j;
      if (i > 0) out += ops[i - 1];
      size_t k = j - i + 1;
      if (k >= 2 && !(i == 0 && j == m - 1)) {
        out += atoms[i] + "^" + std::to_string(k);
      } else {
        for (size_t t = i; t <= j; ++t) {
          if (t > i) out += 'x';
          out += atoms[t];
        }
      }
      i = j + 1;
    }
    return out.empty() ? "1" : out;
  }
};

/// Composition-series name: factors joined by the extension symbols of the
/// series links, e.g. S5 -> "A5:2", D40 -> "5x2.2:2", A4 -> "2^2:3".
inline std::string name_group_base(const PermGroup& g, const Config& cfg = {}) {
  if (g.order() == 1) return "1";
  CompositionSeries cs = composition_series(g, cfg);
  StructureName sn;
  sn.atoms.push_back(cs.factors[0]);
  for (size_t i = 1; i < cs.factors.size(); ++i) {
    sn.ops.push_back(extension_symbol(cs.chain[i + 1], cs.chain[i], cfg));
    sn.atoms.push_back(cs.factors[i]);
  }
  return sn.render();
}

/// Curated names checked before any structural decomposition.  Matching is
/// by invariant fingerprint with an isomorphism-test confirmation.
class NameDatabase {
 public:
  struct Entry {
    std::string name;
    PermGroup reference;
    BigInt order;
    std::map<std::uint64_t, std::uint64_t> hist;
    std::vector<std::uint64_t> ab_invariants;
    BigInt center_order;
  };

  void add(std::string name, const PermGroup& reference,
           const Config& cfg = {}) {
    Entry e;
    e.name = std::move(name);
    e.reference = reference;
    e.order = reference.order();
    e.hist = element_order_histogram(reference, cfg.enumeration_cap);
    PermGroup der = derived_subgroup(reference);
    e.ab_invariants = detail::abelian_primary_invariants(
        der.order() == 1 ? reference
                         : quotient_map(reference, der, cfg).image(),
        cfg);
    e.center_order = center(reference, cfg.enumeration_cap).order();
    entries_.push_back(std::move(e));
  }

  std::optional<std::string> lookup(const PermGroup& g,
                                    const Config& cfg = {}) const {
    for (const auto& e : entries_) {
      if (e.order != g.order()) continue;
      if (element_order_histogram(g, cfg.enumeration_cap) != e.hist) continue;
      PermGroup der = derived_subgroup(g);
      auto inv = detail::abelian_primary_invariants(
          der.order() == 1 ? g : quotient_map(g, der, cfg).image(), cfg);
      if (inv != e.ab_invariants) continue;
      if (center(g, cfg.enumeration_cap).order() != e.center_order) continue;
      if (g.order() > cfg.small_group_cap ||
          is_isomorphic_small(g, e.reference, cfg))
        return e.name;
    }
    return std::nullopt;
  }

  const std::vector<Entry>& entries() const { return entries_; }

  /// Records `{"name", "order", "degree", "generators"}`; orders are
  /// verified against the generators.
  void load(const nlohmann::ordered_json& records, const Config& cfg = {}) {
    if (!records.is_array())
      throw parse_error("name database must be an array of records");
    for (const auto& rec : records) {
      Point degree = rec.at("degree").get<Point>();
      std::vector<Perm> gens;
      for (const auto& s : rec.at("generators"))
        gens.push_back(Perm::parse_cycles(s.get<std::string>(), degree));
      PermGroup ref(degree, gens);
      if (ref.order() != BigInt(rec.at("order").get<std::uint64_t>()))
        throw parse_error("name database order mismatch for \"" +
                          rec.at("name").get<std::string>() + "\"");
      add(rec.at("name").get<std::string>(), ref, cfg);
    }
  }

  static const NameDatabase& builtins() {
    static const NameDatabase db = [] {
      NameDatabase d;
      d.add("A4", alternating_group(4));
      d.add("S3xS3", direct_product(symmetric_group(3), symmetric_group(3)));
      return d;
    }();
    return db;
  }

 private:
  std::vector<Entry> entries_;
};

namespace detail {

inline std::string render_abelian(const PermGroup& g, const Config& cfg) {
  auto inv = abelian_primary_invariants(g, cfg);
  StructureName sn;
  for (std::uint64_t q : inv) {
    if (!sn.atoms.empty()) sn.ops.push_back('x');
    sn.atoms.push_back(std::to_string(q));
  }
  return sn.render();
}

std::optional<std::string> identify_desirable(const PermGroup& g,
                                              const NameDatabase& db,
                                              const Config& cfg);

inline std::optional<std::string> try_identify(const PermGroup& g,
                                               const NameDatabase& db,
                                               const Config& cfg) {
  if (g.order() == 1) return "1";
  if (is_simple(g, cfg)) return identify_simple(g, cfg);
  if (auto n = db.lookup(g, cfg)) return n;
  return identify_desirable(g, db, cfg);
}

}  // namespace detail

std::string name_group(const PermGroup& g, const NameDatabase& db,
                       const Config& cfg);

namespace detail {

/// The recognizers behind the "desirable property" branch: cyclic,
/// elementary abelian, abelian, symmetric, alternating, dihedral,
/// quaternion, perfect central extension of a simple group, direct product.
inline std::optional<std::string> identify_desirable(const PermGroup& g,
                                                     const NameDatabase& db,
                                                     const Config& cfg) {
  BigInt n = g.order();
  if (is_abelian(g)) {
    auto hist = element_order_histogram(g, cfg.enumeration_cap);
    std::uint64_t expnt = hist.rbegin()->first;
    if (BigInt(expnt) == n) return n.str();  // cyclic
    auto inv = abelian_primary_invariants(g, cfg);
    bool elem = true;
    for (std::uint64_t q : inv)
      if (q != inv[0] || !is_prime_u64(q)) elem = false;
    if (elem)
      return std::to_string(inv[0]) + "^" + std::to_string(inv.size());
    return render_abelian(g, cfg);
  }
  if (n <= cfg.small_group_cap) {
    BigInt fact = 1;
    for (Point k = 2; fact < n; ++k) {
      fact *= k;
      if (fact == n && k >= 3 &&
          is_isomorphic_small(g, symmetric_group(k), cfg))
        return "S" + std::to_string(k);
      if (fact == 2 * n && k >= 4 &&
          is_isomorphic_small(g, alternating_group(k), cfg))
        return "A" + std::to_string(k);
      if (fact > 2 * n) break;
    }
    if (n % 2 == 0 && n >= 6 &&
        is_isomorphic_small(g, dihedral_group(static_cast<Point>(to_u64(n))),
                            cfg))
      return "D" + n.str();
    if (n == 8 && is_isomorphic_small(g, quaternion_group(), cfg)) return "Q8";
  }
  if (is_perfect(g)) {
    PermGroup z = center(g, cfg.enumeration_cap);
    if (z.order() > 1) {
      PermGroup q = quotient_map(g, z, cfg).image();
      if (is_simple(q, cfg))
        // a perfect central extension never splits
        return render_abelian(z, cfg) + "." + identify_simple(q, cfg);
    }
  }
  // direct-product detection over pairs of normal subgroups
  auto norms = normal_subgroups(g, cfg);
  for (const auto& a : norms) {
    if (a.order() == 1 || a.order() == n) continue;
    for (const auto& b : norms) {
      if (a.order() * b.order() != n) continue;
      bool meets = false;
      const PermGroup& small = a.order() <= b.order() ? a : b;
      const PermGroup& big = a.order() <= b.order() ? b : a;
      for (const auto& e : small.elements(cfg.enumeration_cap))
        if (!e.is_identity() && big.contains(e)) {
          meets = true;
          break;
        }
      if (!meets)
        return name_group(a, db, cfg) + "x" + name_group(b, db, cfg);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// The layered namer: simple groups by table, then the database, then the
/// structural recognizers, then recursion over normal subgroups in
/// decreasing order, preferring a directly identifiable side.
inline std::string name_group(const PermGroup& g, const NameDatabase& db,
                              const Config& cfg) {
  if (auto direct = detail::try_identify(g, db, cfg)) return *direct;
  auto norms = normal_subgroups(g, cfg);
  std::vector<const PermGroup*> proper;
  for (const auto& n : norms)
    if (n.order() > 1 && n.order() < g.order()) proper.push_back(&n);
  // g is not simple here, so a proper nontrivial normal subgroup exists
  for (const PermGroup* n : proper) {
    PermGroup q = quotient_map(g, *n, cfg).image();
    if (auto nn = detail::try_identify(*n, db, cfg))
      return *nn + extension_symbol(g, *n, cfg) + name_group(q, db, cfg);
    if (auto qn = detail::try_identify(q, db, cfg))
      return name_group(*n, db, cfg) + extension_symbol(g, *n, cfg) + *qn;
  }
  const PermGroup& n = *proper.front();
  PermGroup q = quotient_map(g, n, cfg).image();
  return name_group(n, db, cfg) + extension_symbol(g, n, cfg) +
         name_group(q, db, cfg);
}

inline std::string name_group(const PermGroup& g, const Config& cfg = {}) {
  return name_group(g, NameDatabase::builtins(), cfg);
}

/// Order of the group denoted by a rendered structure-name atom.
inline BigInt atom_order(const std::string& atom) {
  if (atom.empty()) throw parse_error("empty structure-name atom");
  if (atom == "1") return 1;
  auto all_digits = [](const std::string& s) {
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return !s.empty();
  };
  if (all_digits(atom)) return BigInt(atom);
  auto caret = atom.find('^');
  if (caret != std::string::npos) {
    std::string base = atom.substr(0, caret), exp = atom.substr(caret + 1);
    if (!all_digits(base) || !all_digits(exp))
      throw parse_error("malformed exponent atom " + atom);
    BigInt r = 1, b(base);
    for (std::uint64_t i = 0, e = std::stoull(exp); i < e; ++i) r *= b;
    return r;
  }
  if (atom == "Q8") return 8;
  if (atom.size() > 1 && (atom[0] == 'A' || atom[0] == 'S') &&
      all_digits(atom.substr(1))) {
    BigInt f = 1;
    std::uint64_t k = std::stoull(atom.substr(1));
    for (std::uint64_t i = 2; i <= k; ++i) f *= i;
    return atom[0] == 'S' ? f : f / 2;
  }
  if (atom.size() > 1 && atom[0] == 'D' && all_digits(atom.substr(1)))
    return BigInt(atom.substr(1));
  for (const auto& [order, name] : simple_order_table())
    if (name == atom) return order;
  if (atom == "L3(4)") return 20160;
  throw parse_error("unknown structure-name atom " + atom);
}

/// Product of the leaf orders of a rendered structure name; equals the
/// group order for any name this module produces.
inline BigInt structure_name_order(const std::string& expr) {
  BigInt prod = 1;
  std::string atom;
  for (char c : expr) {
    if (c == 'x' || c == ':' || c == '.') {
      prod *= atom_order(atom);
      atom.clear();
    } else {
      atom += c;
    }
  }
  prod *= atom_order(atom);
  return prod;
}

}  // namespace latlas
