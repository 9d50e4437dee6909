#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "widthlab/radius.hpp"

namespace widthlab {

// A set of vertices, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

inline VertexSet normalized_vertex_set(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Undirected graph on vertices 0..n-1, no loops or parallel edges.
// Adjacency is stored as bit rows. Every algorithm in this library treats
// Graph as an immutable value; the mutating methods exist for construction.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    rows_.assign(static_cast<size_t>(n_) * words_, 0);
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_vertex(int v) const { return v >= 0 && v < n_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }

  void add_edge(int u, int v) {
    check_edge_ends(u, v);
    if (!bit(u, v)) {
      set_bit(u, v);
      set_bit(v, u);
      ++m_;
    }
  }

  void remove_edge(int u, int v) {
    check_edge_ends(u, v);
    if (bit(u, v)) {
      clear_bit(u, v);
      clear_bit(v, u);
      --m_;
    }
  }

  void toggle_edge(int u, int v) {
    check_edge_ends(u, v);
    if (bit(u, v)) {
      clear_bit(u, v);
      clear_bit(v, u);
      --m_;
    } else {
      set_bit(u, v);
      set_bit(v, u);
      ++m_;
    }
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
  }

  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for_each_neighbor(v, [&](int u) { out.push_back(u); });
    return out;
  }

  template <class F>
  void for_each_neighbor(int v, F&& f) const {
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  // All edges as pairs u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for_each_neighbor(u, [&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  // Induced subgraph on `vertices` (need not be sorted); vertex i of the
  // result is the i-th entry of the normalized (ascending) list.
  Graph induced(const VertexSet& vertices) const {
    VertexSet s = normalized_vertex_set(vertices);
    std::vector<int> old_to_new(n_, -1);
    for (size_t i = 0; i < s.size(); ++i) {
      check_vertex(s[i]);
      old_to_new[s[i]] = static_cast<int>(i);
    }
    Graph g(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
      for_each_neighbor(s[i], [&](int u) {
        int j = old_to_new[u];
        if (j > static_cast<int>(i)) g.add_edge(static_cast<int>(i), j);
      });
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

  // Stable key for hashing/dedup: the labeled adjacency bits.
  const std::vector<std::uint64_t>& adjacency_words() const { return rows_; }

  // BFS distances from `source`; -1 marks unreachable vertices.
  std::vector<int> bfs_distances(int source) const {
    check_vertex(source);
    std::vector<int> dist(n_, -1);
    std::vector<int> queue;
    queue.reserve(n_);
    dist[source] = 0;
    queue.push_back(source);
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for_each_neighbor(v, [&](int u) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      });
    }
    return dist;
  }

  Radius distance(int u, int v) const {
    check_vertex(v);
    if (u == v) {
      check_vertex(u);
      return Radius(0);
    }
    std::vector<int> dist = bfs_distances(u);
    return dist[v] < 0 ? Radius::infinity() : Radius(dist[v]);
  }

  // All vertices at distance <= r from v; r = infinity gives the connected
  // component of v.
  VertexSet ball(int v, Radius r) const {
    std::vector<int> dist = bfs_distances(v);
    VertexSet out;
    for (int u = 0; u < n_; ++u)
      if (dist[u] >= 0 && !Radius(dist[u]).exceeds(r)) out.push_back(u);
    return out;
  }

 private:
  void check_vertex(int v) const {
    if (!has_vertex(v))
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " out of range [0, " + std::to_string(n_) + ")");
  }

  void check_edge_ends(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
  }

  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<size_t>(v) * words_;
  }
  std::uint64_t* row(int v) { return rows_.data() + static_cast<size_t>(v) * words_; }

  bool bit(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }
  void set_bit(int u, int v) { row(u)[v >> 6] |= std::uint64_t(1) << (v & 63); }
  void clear_bit(int u, int v) { row(u)[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }

  int n_ = 0;
  int words_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> rows_;
};

// BFS distances from source where blocked vertices are never expanded nor
// reached; -1 marks unreachable (and every blocked vertex). The source must
// not be blocked.
inline std::vector<int> bfs_distances_avoiding(const Graph& g, int source,
                                               const std::vector<char>& blocked) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> queue;
  dist[source] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    g.for_each_neighbor(v, [&](int u) {
      if (dist[u] < 0 && !blocked[u]) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    });
  }
  return dist;
}

// Hash over the labeled adjacency bits plus the vertex count.
struct GraphHash {
  size_t operator()(const Graph& g) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(g.vertex_count());
    for (std::uint64_t w : g.adjacency_words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace widthlab
