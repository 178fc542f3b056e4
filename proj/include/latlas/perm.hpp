#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "latlas/errors.hpp"

namespace latlas {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1}, stored as its image table.  Points are
/// 0-based internally; all text I/O is 1-based cycle notation.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<Point> images) : img_(std::move(images)) {
    check_bijection();
  }

  static Perm identity(Point degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    Perm p;
    p.img_ = std::move(img);
    return p;
  }

  Point degree() const { return static_cast<Point>(img_.size()); }
  Point operator[](Point i) const { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const {
    for (Point i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// Composition acting as (p*q)(i) = p(q(i)).
  Perm operator*(const Perm& q) const {
    if (degree() != q.degree())
      throw error("cannot compose permutations of unequal degree (" +
                  std::to_string(degree()) + " vs " +
                  std::to_string(q.degree()) + ")");
    Perm r;
    r.img_.resize(img_.size());
    for (Point i = 0; i < degree(); ++i) r.img_[i] = img_[q.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (Point i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  /// Conjugate g^-1 * p * g.
  Perm conjugated_by(const Perm& g) const {
    if (degree() != g.degree())
      throw error("cannot conjugate permutations of unequal degree");
    std::vector<Point> ginv(img_.size());
    for (Point i = 0; i < degree(); ++i) ginv[g.img_[i]] = i;
    Perm r;
    r.img_.resize(img_.size());
    for (Point i = 0; i < degree(); ++i) r.img_[ginv[i]] = ginv[img_[i]];
    return r;
  }

  bool operator==(const Perm& o) const = default;

  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t ord = 1;
    for (Point i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (Point j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : img_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }

  /// Smallest moved point, or degree() if this is the identity.
  Point first_moved() const {
    for (Point i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    return degree();
  }

  /// Parses disjoint-cycle notation such as "(1,2,3)(4,5)".  "()" denotes
  /// the identity.  Points are 1-based in the text.
  static Perm parse_cycles(const std::string& text, Point degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> used(degree, false);
    size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
        ++pos;
    };
    skip_ws();
    bool any = false;
    while (pos < text.size()) {
      if (text[pos] != '(') throw parse_error("expected '(' in cycle notation");
      ++pos;
      std::vector<Point> cycle;
      skip_ws();
      while (pos < text.size() && text[pos] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
          throw parse_error("expected point number in cycle");
        std::uint64_t v = 0;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = v * 10 + (text[pos] - '0');
          if (v > degree) throw parse_error("point " + std::to_string(v) +
                                            " out of range for degree " +
                                            std::to_string(degree));
          ++pos;
        }
        if (v == 0) throw parse_error("points are 1-based; 0 is invalid");
        Point p = static_cast<Point>(v - 1);
        if (used[p])
          throw parse_error("duplicate point " + std::to_string(v) +
                            " in cycle notation");
        used[p] = true;
        cycle.push_back(p);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          skip_ws();
        }
      }
      if (pos >= text.size()) throw parse_error("unterminated cycle");
      ++pos;  // ')'
      any = true;
      for (size_t i = 0; i + 1 < cycle.size(); ++i)
        img[cycle[i]] = cycle[i + 1];
      if (cycle.size() > 1) img[cycle.back()] = cycle.front();
      skip_ws();
    }
    if (!any) throw parse_error("empty generator line");
    Perm p;
    p.img_ = std::move(img);
    return p;
  }

  /// Renders 1-based disjoint-cycle notation; the identity prints as "()".
  std::string to_cycles() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (Point i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = true;
        continue;
      }
      out += '(';
      Point j = i;
      bool first = true;
      do {
        if (!first) out += ',';
        out += std::to_string(j + 1);
        seen[j] = true;
        j = img_[j];
        first = false;
      } while (j != i);
      out += ')';
    }
    if (out.empty()) out = "()";
    return out;
  }

 private:
  void check_bijection() const {
    std::vector<bool> hit(img_.size(), false);
    for (Point x : img_) {
      if (x >= img_.size() || hit[x])
        throw error("image table is not a bijection");
      hit[x] = true;
    }
  }

  std::vector<Point> img_;
};

}  // namespace latlas
