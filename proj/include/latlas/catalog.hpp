#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latlas/errors.hpp"
#include "latlas/group.hpp"
#include "latlas/standard_groups.hpp"

namespace latlas {

namespace detail {

/// Arithmetic in GF(q) for prime q, plus GF(8) via x^3 + x + 1.
struct SmallField {
  std::uint32_t q;
  explicit SmallField(std::uint32_t size) : q(size) {}
  bool binary() const { return q == 8; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return binary() ? (a ^ b) : (a + b) % q;
  }
  std::uint32_t neg(std::uint32_t a) const {
    return binary() ? a : (q - a) % q;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!binary()) return (a * b) % q;
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < 3; ++i)
      if (b & (1u << i)) r ^= a << i;
    for (int i = 5; i >= 3; --i)
      if (r & (1u << i)) r ^= 0b1011u << (i - 3);
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul(a, b) == 1) return b;
    throw error("division by zero in a finite field");
  }
  std::uint32_t primitive() const {
    for (std::uint32_t g = 2; g < q; ++g) {
      std::uint32_t x = g, n = 1;
      while (x != 1) {
        x = mul(x, g);
        ++n;
      }
      if (n == q - 1) return g;
    }
    return 1;
  }
};

/// x -> (ax + b) / (cx + d) on the projective line {0..q-1, infinity = q}.
inline Perm mobius(const SmallField& f, std::uint32_t a, std::uint32_t b,
                   std::uint32_t c, std::uint32_t d) {
  Point deg = static_cast<Point>(f.q + 1);
  std::vector<Point> img(deg);
  for (std::uint32_t x = 0; x < f.q; ++x) {
    std::uint32_t den = f.add(f.mul(c, x), d);
    img[x] = den == 0 ? f.q
                      : f.mul(f.add(f.mul(a, x), b), f.inv(den));
  }
  img[f.q] = c == 0 ? f.q : f.mul(a, f.inv(c));
  return Perm(std::move(img));
}

}  // namespace detail

/// PSL(2, q) acting on the q+1 points of the projective line; supports
/// prime q and q = 8.
inline PermGroup projective_special_linear_2(std::uint32_t q) {
  detail::SmallField f(q);
  std::uint32_t g = f.primitive();
  std::uint32_t s = f.binary() ? g : f.mul(g, g);  // a square, so in PSL2
  std::vector<Perm> gens{
      detail::mobius(f, 1, 1, 0, 1),         // x -> x + 1
      detail::mobius(f, s, 0, 0, 1),         // x -> s x
      detail::mobius(f, 0, f.neg(1), 1, 0),  // x -> -1/x
  };
  return PermGroup(static_cast<Point>(q + 1), gens);
}

struct CatalogEntry {
  std::string name;
  std::string family;  // sporadic | alternating | linear | other
  Point degree = 0;
  PermGroup group;
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    auto add = [&](std::string name, std::string family, PermGroup g) {
      v.push_back({std::move(name), std::move(family), g.degree(),
                   std::move(g)});
    };
    for (Point n = 5; n <= 8; ++n)
      add("A" + std::to_string(n), "alternating", alternating_group(n));
    for (Point n = 3; n <= 7; ++n)
      add("S" + std::to_string(n), n >= 5 ? "alternating" : "other",
          symmetric_group(n));
    add("L2(7)", "linear", projective_special_linear_2(7));
    add("L2(8)", "linear", projective_special_linear_2(8));
    add("L2(11)", "linear", projective_special_linear_2(11));
    add("M11", "sporadic",
        PermGroup(11, {Perm::parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11),
                       Perm::parse_cycles("(3,7,11,8)(4,10,5,6)", 11)}));
    add("Q8", "other", quaternion_group());
    add("S3xS3", "other",
        direct_product(symmetric_group(3), symmetric_group(3)));
    add("2^3", "other", elementary_abelian_group(2, 3));
    return v;
  }();
  return entries;
}

namespace detail {

inline size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<size_t> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t prev = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t cur = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         prev + (a[i - 1] == b[j - 1] ? 0 : 1)});
      prev = cur;
    }
  }
  return row[b.size()];
}

inline std::optional<std::uint64_t> parse_family_index(const std::string& name,
                                                       char prefix) {
  if (name.size() < 2 || name[0] != prefix) return std::nullopt;
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      return std::nullopt;
  return std::stoull(name.substr(1));
}

}  // namespace detail

/// Fixed entries plus the cyclic (Cn) and dihedral (Dn, n = order) families;
/// unknown names raise an error listing the closest catalog names.
inline CatalogEntry catalog_lookup(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  if (auto n = detail::parse_family_index(name, 'C'); n && *n >= 1 && *n <= 1000)
    return {name, "other", static_cast<Point>(*n),
            cyclic_group(static_cast<Point>(*n))};
  if (auto n = detail::parse_family_index(name, 'D');
      n && *n >= 2 && *n <= 2000 && *n % 2 == 0) {
    PermGroup d = dihedral_group(static_cast<Point>(*n));
    return {name, "other", d.degree(), std::move(d)};
  }
  std::string msg = "unknown group name \"" + name + "\"";
  std::vector<std::string> close;
  for (const auto& e : catalog())
    if (detail::edit_distance(e.name, name) <= 2) close.push_back(e.name);
  if (!close.empty()) {
    msg += "; did you mean";
    for (const auto& c : close) msg += " " + c;
    msg += "?";
  }
  throw error(msg);
}

}  // namespace latlas
