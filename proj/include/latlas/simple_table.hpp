#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "latlas/config.hpp"
#include "latlas/conjugacy.hpp"
#include "latlas/errors.hpp"
#include "latlas/group.hpp"

namespace latlas {

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_prime_power_u64(std::uint64_t n, std::uint64_t* base = nullptr) {
  if (n < 2) return false;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  if (base) *base = p;
  return m == 1;
}

}  // namespace detail

/// Orders of the nonabelian simple groups below 10^7, mapped to canonical
/// names.  Name preferences for coincident groups: alternating over linear
/// (A5, A6), L2(7) over L3(2); the one genuine order collision below the
/// bound (20160: A8 vs L3(4)) is resolved separately by element orders.
inline const std::map<BigInt, std::string>& simple_order_table() {
  static const std::map<BigInt, std::string> table = [] {
    std::map<BigInt, std::string> t;
    constexpr std::uint64_t bound = 10'000'000;
    for (std::uint64_t q = 4; q <= 2'800; ++q) {
      if (!detail::is_prime_power_u64(q)) continue;
      std::uint64_t order = q * (q - 1) * (q + 1);
      if (q % 2) order /= 2;
      if (order >= bound) break;
      t[BigInt(order)] = "L2(" + std::to_string(q) + ")";
    }
    t[BigInt(60)] = "A5";          // over L2(4), L2(5)
    t[BigInt(168)] = "L2(7)";      // over L3(2)
    t[BigInt(360)] = "A6";         // over L2(9)
    t[BigInt(2520)] = "A7";
    t[BigInt(5616)] = "L3(3)";
    t[BigInt(6048)] = "U3(3)";
    t[BigInt(7920)] = "M11";
    t[BigInt(20160)] = "A8";       // collides with L3(4); resolved by caller
    t[BigInt(25920)] = "U4(2)";
    t[BigInt(29120)] = "Sz(8)";
    t[BigInt(62400)] = "U3(4)";
    t[BigInt(95040)] = "M12";
    t[BigInt(126000)] = "U3(5)";
    t[BigInt(175560)] = "J1";
    t[BigInt(181440)] = "A9";
    t[BigInt(372000)] = "L3(5)";
    t[BigInt(443520)] = "M22";
    t[BigInt(604800)] = "J2";
    t[BigInt(979200)] = "S4(4)";
    t[BigInt(1451520)] = "S6(2)";
    t[BigInt(1814400)] = "A10";
    t[BigInt(1876896)] = "L3(7)";
    t[BigInt(3265920)] = "U4(3)";
    t[BigInt(4245696)] = "G2(3)";
    t[BigInt(4680000)] = "S4(5)";
    t[BigInt(5515776)] = "U3(8)";
    t[BigInt(6065280)] = "L4(3)";
    t[BigInt(9999360)] = "L5(2)";
    return t;
  }();
  return table;
}

/// Exact simplicity test: abelian groups must have prime order; otherwise
/// the normal closure of every prime-order element must be the whole group
/// (any nontrivial normal subgroup contains a prime-order element and its
/// closure).
inline bool is_simple(const PermGroup& g, const Config& cfg = {}) {
  if (g.order() == 1) return false;
  if (is_abelian(g)) {
    if (g.order() > 1'000'000'000) return false;
    return detail::is_prime_u64(g.order().convert_to<std::uint64_t>());
  }
  std::unordered_set<SubFp, SubFpHash> seen;
  for (const auto& x : g.elements(cfg.enumeration_cap)) {
    std::uint64_t o = x.order();
    if (!detail::is_prime_u64(o)) continue;
    PermGroup cy(g.degree(), {x});
    if (!seen.insert(fingerprint(cy, cfg.enumeration_cap)).second) continue;
    if (normal_closure(g, {x}).order() != g.order()) return false;
  }
  return true;
}

/// Canonical name of a simple group: the prime for cyclic factors, a table
/// lookup on the order otherwise.  The A8/L3(4) order collision is split by
/// the presence of an element of order 15 (A8 has one, L3(4) does not).
inline std::string identify_simple(const PermGroup& q, const Config& cfg = {}) {
  if (!is_simple(q, cfg)) throw error("identify_simple: group is not simple");
  if (is_abelian(q)) return q.order().str();
  if (q.order() == 20160) {
    for (const auto& x : q.elements(cfg.enumeration_cap))
      if (x.order() == 15) return "A8";
    return "L3(4)";
  }
  auto it = simple_order_table().find(q.order());
  if (it == simple_order_table().end())
    throw error("simple group of order " + q.order().str() +
                " is outside the name table");
  return it->second;
}

}  // namespace latlas
