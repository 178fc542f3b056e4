#pragma once

#include <numeric>
#include <vector>

#include "latlas/group.hpp"
#include "latlas/homomorphism.hpp"
#include "latlas/perm.hpp"

namespace latlas {

/// Finest G-invariant partition of the orbit of `alpha` in which `alpha` and
/// `beta` share a block (Atkinson's union-find algorithm).  Blocks are listed
/// by smallest element and partition only the orbit of `alpha`.
inline std::vector<std::vector<Point>> minimal_block_system(const PermGroup& g,
                                                            Point alpha,
                                                            Point beta) {
  const Point n = g.degree();
  std::vector<Point> uf(n);
  std::iota(uf.begin(), uf.end(), Point{0});
  auto find = [&](Point x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto unite = [&](Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    uf[b] = a;
    return true;
  };

  std::vector<std::pair<Point, Point>> agenda;
  if (unite(alpha, beta)) agenda.push_back({alpha, beta});
  for (size_t i = 0; i < agenda.size(); ++i) {
    auto [u, v] = agenda[i];
    for (const auto& gen : g.generators())
      if (unite(gen[u], gen[v])) agenda.push_back({gen[u], gen[v]});
  }

  // collect blocks over the orbit of alpha
  std::vector<int> seen(n, -1);
  std::vector<std::vector<Point>> blocks;
  std::vector<Point> orbit{alpha};
  std::vector<bool> inorb(n, false);
  inorb[alpha] = true;
  for (size_t k = 0; k < orbit.size(); ++k)
    for (const auto& gen : g.generators()) {
      Point t = gen[orbit[k]];
      if (!inorb[t]) {
        inorb[t] = true;
        orbit.push_back(t);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  for (Point p : orbit) {
    Point r = find(p);
    if (seen[r] < 0) {
      seen[r] = static_cast<int>(blocks.size());
      blocks.push_back({});
    }
    blocks[seen[r]].push_back(p);
  }
  return blocks;
}

/// Action of G on the given blocks of one orbit, with every point outside
/// that orbit kept as a singleton block.  Blocks are renumbered by smallest
/// element, so the result is deterministic.
inline Homomorphism block_action(const PermGroup& g,
                                 const std::vector<std::vector<Point>>& blocks) {
  const Point n = g.degree();
  std::vector<int> block_of(n, -1);
  std::vector<Point> block_min;
  for (const auto& b : blocks) {
    for (Point p : b) block_of[p] = static_cast<int>(block_min.size());
    block_min.push_back(b.front());
  }
  for (Point p = 0; p < n; ++p)
    if (block_of[p] < 0) {
      block_of[p] = static_cast<int>(block_min.size());
      block_min.push_back(p);
    }
  // renumber by smallest element
  std::vector<int> order(block_min.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return block_min[a] < block_min[b]; });
  std::vector<int> rank(block_min.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  for (Point p = 0; p < n; ++p) block_of[p] = rank[block_of[p]];

  const Point m = static_cast<Point>(block_min.size());
  std::vector<Perm> images;
  for (const auto& gen : g.generators()) {
    std::vector<Point> img(m);
    for (Point p = 0; p < n; ++p)
      img[block_of[p]] = static_cast<Point>(block_of[gen[p]]);
    images.push_back(Perm(std::move(img)));
  }
  return Homomorphism::from_gen_images(g, m, std::move(images));
}

}  // namespace latlas
