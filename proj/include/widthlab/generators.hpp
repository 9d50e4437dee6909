#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "widthlab/graph.hpp"
#include "widthlab/ktt.hpp"

namespace widthlab {

// Seeded random source. All randomness in the library flows through an
// explicit 64-bit seed; mt19937_64 output is pinned by the standard, and the
// derived draws below avoid std::uniform_int_distribution, whose mapping is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    // Rejection keeps the draw unbiased and deterministic.
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % span);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  double unit() { return (next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 eng_;
};

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

// Star on n vertices: center 0, leaves 1..n-1.
inline Graph star_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// rows x cols grid; vertex (r, c) is r*cols + c.
inline Graph grid_graph(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative grid size");
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

// Uniform labeled tree via a random Pruefer sequence.
inline Graph random_tree(int n, std::uint64_t seed) {
  Graph g(n);
  if (n <= 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  Rng rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = rng.uniform_int(0, n - 1);
  std::vector<int> deg(n, 1);
  for (int x : pruefer) ++deg[x];
  for (int x : pruefer) {
    for (int leaf = 0; leaf < n; ++leaf)
      if (deg[leaf] == 1) {
        g.add_edge(leaf, x);
        --deg[leaf];
        --deg[x];
        break;
      }
  }
  int a = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) {
      if (a < 0)
        a = v;
      else
        g.add_edge(a, v);
    }
  return g;
}

// Erdos-Renyi G(n, p), each pair independently with probability p.
inline Graph gnp(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

// Rejection-sample G(n, p) until the draw is K_{t,t}-free.
inline Graph random_ktt_free(int n, double p, int t, std::uint64_t seed,
                             int max_attempts = 1000, KttCaps caps = {}) {
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.bernoulli(p)) g.add_edge(u, v);
    if (is_ktt_free(g, t, caps)) return g;
  }
  throw std::runtime_error("random_ktt_free: rejection sampling failed after " +
                           std::to_string(max_attempts) + " attempts");
}

}  // namespace widthlab
