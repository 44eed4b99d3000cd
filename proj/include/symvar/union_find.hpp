#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace symvar {

/// Disjoint sets over 0..n-1 with union by size and path halving.
class DisjointSets {
 public:
  DisjointSets() = default;
  explicit DisjointSets(std::uint32_t n) : parent_(n), size_(n, 1), roots_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Root lookup without path compression, for const contexts.
  std::uint32_t root(std::uint32_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --roots_;
    return true;
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(parent_.size()); }
  std::uint32_t set_count() const { return roots_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::uint32_t roots_ = 0;
};

}  // namespace symvar
