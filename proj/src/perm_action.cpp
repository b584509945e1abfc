#include "twotrans/perm_action.hpp"

#include <deque>
#include <numeric>

namespace twotrans {

std::vector<int> orbit_of_point(int start, const std::vector<PointPerm>& gens) {
  std::vector<int> out{start};
  if (gens.empty()) return out;
  std::vector<char> seen(gens[0].size(), 0);
  seen[start] = 1;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      int q = g[p];
      if (!seen[q]) {
        seen[q] = 1;
        out.push_back(q);
        queue.push_back(q);
      }
    }
  }
  return out;
}

bool action_is_transitive(int n, const std::vector<PointPerm>& gens) {
  if (n <= 1) return true;
  if (gens.empty()) return false;
  return static_cast<int>(orbit_of_point(0, gens).size()) == n;
}

bool action_is_two_transitive(int n, const std::vector<PointPerm>& gens) {
  if (n < 2 || gens.empty()) return false;
  // Orbit of the ordered pair (0, 1) under the diagonal action.
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  std::deque<std::pair<int, int>> queue{{0, 1}};
  seen[0 * n + 1] = 1;
  long long count = 1;
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      int x = g[a], y = g[b];
      if (!seen[x * n + y]) {
        seen[x * n + y] = 1;
        ++count;
        queue.emplace_back(x, y);
      }
    }
  }
  return count == static_cast<long long>(n) * (n - 1);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Size of the smallest block containing {0, x}: fuse the pair and close the
// partition under generator images (Atkinson's algorithm).
int minimal_block_size(int n, const std::vector<PointPerm>& gens, int x) {
  UnionFind classes(n);
  std::deque<std::pair<int, int>> work{{0, x}};
  classes.unite(0, x);
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      int ga = g[a], gb = g[b];
      if (classes.unite(ga, gb)) work.emplace_back(ga, gb);
    }
  }
  int root = classes.find(0);
  int size = 0;
  for (int i = 0; i < n; ++i)
    if (classes.find(i) == root) ++size;
  return size;
}

}  // namespace

bool action_is_primitive(int n, const std::vector<PointPerm>& gens) {
  if (n < 2) return false;
  if (!action_is_transitive(n, gens)) return false;
  for (int x = 1; x < n; ++x) {
    if (minimal_block_size(n, gens, x) != n) return false;
  }
  return true;
}

}  // namespace twotrans
