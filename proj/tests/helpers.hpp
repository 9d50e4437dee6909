#pragma once

// Test-side oracles and corpus helpers. Everything here is deliberately
// naive (exhaustive enumeration, no pruning) and independent of the
// library's implementation paths, so it can stand as a second route.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "widthlab/flips.hpp"
#include "widthlab/generators.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/ktt.hpp"

namespace testutil {

using widthlab::Graph;
using widthlab::Radius;
using widthlab::VertexSet;

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

inline std::uint64_t graph_count(int n) {
  return std::uint64_t(1) << (n * (n - 1) / 2);
}

// All labeled graphs on n vertices, in edge-mask order.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> out;
  out.reserve(graph_count(n));
  for (std::uint64_t mask = 0; mask < graph_count(n); ++mask)
    out.push_back(graph_from_mask(n, mask));
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = g.bfs_distances(0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

// Enumerate every simple path starting at v with at most max_len edges,
// invoking f on each (including the length-0 path {v}).
inline void for_each_simple_path(const Graph& g, int v, Radius max_len,
                                 const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> path{v};
  std::vector<char> used(g.vertex_count(), 0);
  used[v] = 1;
  auto rec = [&](auto&& self) -> void {
    f(path);
    if (Radius(static_cast<int>(path.size()) - 1) >= max_len) return;
    for (int u : g.neighbors(path.back()))
      if (!used[u]) {
        used[u] = 1;
        path.push_back(u);
        self(self);
        path.pop_back();
        used[u] = 0;
      }
  };
  rec(rec);
}

// sep_r(v/S) by brute force over all simple paths.
inline VertexSet naive_sep(const Graph& g, int v, const VertexSet& s, Radius r) {
  std::vector<char> in_s(g.vertex_count(), 0);
  for (int x : s) in_s[x] = 1;
  std::set<int> hits;
  for_each_simple_path(g, v, r, [&](const std::vector<int>& path) {
    if (path.size() < 2) return;
    int end = path.back();
    if (!in_s[end]) return;
    for (size_t i = 1; i + 1 < path.size(); ++i)
      if (in_s[path[i]]) return;
    hits.insert(end);
  });
  return VertexSet(hits.begin(), hits.end());
}

// Strong reachability by brute force: u <= v with a path of length <= r
// whose inner vertices are all after v; includes v itself.
inline VertexSet naive_sreach(const Graph& g, const std::vector<int>& perm, int v,
                              Radius r) {
  std::vector<int> pos(g.vertex_count());
  for (size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
  std::set<int> hits{v};
  for_each_simple_path(g, v, r, [&](const std::vector<int>& path) {
    if (path.size() < 2) return;
    int u = path.back();
    if (pos[u] > pos[v]) return;
    for (size_t i = 1; i + 1 < path.size(); ++i)
      if (pos[path[i]] <= pos[v]) return;
    hits.insert(u);
  });
  return VertexSet(hits.begin(), hits.end());
}

// Weak reachability: inner vertices only need to be after u.
inline VertexSet naive_wreach(const Graph& g, const std::vector<int>& perm, int v,
                              Radius r) {
  std::vector<int> pos(g.vertex_count());
  for (size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
  std::set<int> hits{v};
  for_each_simple_path(g, v, r, [&](const std::vector<int>& path) {
    if (path.size() < 2) return;
    int u = path.back();
    if (pos[u] > pos[v]) return;
    for (size_t i = 1; i + 1 < path.size(); ++i)
      if (pos[path[i]] <= pos[u]) return;
    hits.insert(u);
  });
  return VertexSet(hits.begin(), hits.end());
}

// K_{t,t} subgraph detection by double subset enumeration.
inline bool naive_has_ktt(const Graph& g, int t) {
  int n = g.vertex_count();
  if (n < 2 * t) return false;
  std::vector<int> a(t), b(t);
  auto pick = [&](auto&& self, std::vector<int>& out, int idx, int from,
                  const std::function<bool()>& done) -> bool {
    if (idx == t) return done();
    for (int v = from; v < n; ++v) {
      out[idx] = v;
      if (self(self, out, idx + 1, v + 1, done)) return true;
    }
    return false;
  };
  return pick(pick, a, 0, 0, [&]() {
    return pick(pick, b, 0, 0, [&]() {
      for (int x : a)
        for (int y : b)
          if (x == y) return false;
      for (int x : a)
        for (int y : b)
          if (!g.has_edge(x, y)) return false;
      return true;
    });
  });
}

// Random vertex partition with at most max_blocks blocks (each vertex is
// assigned independently; empty blocks dropped).
inline widthlab::Partition random_partition(const Graph& g, int max_blocks,
                                            widthlab::Rng& rng) {
  int n = g.vertex_count();
  if (n == 0) return widthlab::Partition(0, {});
  std::vector<std::vector<int>> blocks(max_blocks);
  for (int v = 0; v < n; ++v) blocks[rng.uniform_int(0, max_blocks - 1)].push_back(v);
  std::vector<std::vector<int>> nonempty;
  for (auto& b : blocks)
    if (!b.empty()) nonempty.push_back(std::move(b));
  return widthlab::Partition(n, std::move(nonempty));
}

inline std::vector<int> random_permutation(int n, widthlab::Rng& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
  return perm;
}

}  // namespace testutil
