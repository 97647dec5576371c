#pragma once

#include <numeric>
#include <vector>

namespace solidtorus {

/// Union-find that also tracks a Z/2 offset of each element relative to its root.
/// Used for orientations: a relation "x and y differ by parity p" is consistent
/// or produces a conflict.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t size() const { return parent_.size(); }

  /// Root of x and the parity of x relative to that root.
  std::pair<std::size_t, int> find(std::size_t x) {
    int par = 0;
    std::size_t r = x;
    while (parent_[r] != r) {
      par ^= parity_[r];
      r = parent_[r];
    }
    // path compression
    int acc = par;
    while (parent_[x] != x) {
      std::size_t next = parent_[x];
      int step = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= step;
      x = next;
    }
    return {r, par};
  }

  /// Records parity(x) ^ parity(y) == p. Returns false on a contradiction.
  bool unite(std::size_t x, std::size_t y, int p = 0) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == p;
    if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    parity_[ry] = px ^ py ^ p;
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    return true;
  }

  bool same(std::size_t x, std::size_t y) { return find(x).first == find(y).first; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<int> rank_;
};

/// Dense relabelling of union-find roots in order of first appearance.
template <class UF>
std::vector<int> class_labels(UF& uf, int& count) {
  std::vector<int> root_label(uf.size(), -1);
  std::vector<int> label(uf.size());
  count = 0;
  for (std::size_t i = 0; i < uf.size(); ++i) {
    auto r = uf.find(i).first;
    if (root_label[r] < 0) root_label[r] = count++;
    label[i] = root_label[r];
  }
  return label;
}

}  // namespace solidtorus
