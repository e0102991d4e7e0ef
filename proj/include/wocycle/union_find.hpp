#pragma once

#include <numeric>
#include <vector>

namespace wocycle {

// Weighted quick-union with path halving.
struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;
  int components;

  explicit UnionFind(int n)
      : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1), components(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
    --components;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
};

}  // namespace wocycle
