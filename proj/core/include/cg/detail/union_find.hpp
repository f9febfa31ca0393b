#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace cg::detail {

/// Union by size with path halving. unite() returns false when the two
/// elements were already joined.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t size_of(std::uint32_t x) { return size_[find(x)]; }

  /// Classes, each ascending, ordered by least element.
  std::vector<std::vector<std::uint32_t>> classes() {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::int64_t> slot(parent_.size(), -1);
    for (std::uint32_t x = 0; x < parent_.size(); ++x) {
      auto r = find(x);
      if (slot[r] < 0) {
        slot[r] = static_cast<std::int64_t>(out.size());
        out.emplace_back();
      }
      out[slot[r]].push_back(x);
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace cg::detail
