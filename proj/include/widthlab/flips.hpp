#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "widthlab/errors.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/partition.hpp"

namespace widthlab {

// Which pairs of blocks of an associated partition get complemented.
// Pairs are unordered block indices (i, j) with i <= j; i == j means
// complementing adjacency inside the block.
struct FlipSpec {
  std::vector<std::pair<int, int>> pairs;

  static FlipSpec of(std::vector<std::pair<int, int>> raw) {
    for (auto& [i, j] : raw)
      if (i > j) std::swap(i, j);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    return FlipSpec{std::move(raw)};
  }

  bool empty() const { return pairs.empty(); }

  friend bool operator==(const FlipSpec& a, const FlipSpec& b) {
    return a.pairs == b.pairs;
  }
};

// Complement the adjacency between a and b: uv is an edge of the result
// iff uv lies in E(G) symmetric-difference {xy : x in a, y in b}, u != v.
// a and b may overlap or coincide; G itself is not modified.
inline Graph flip_pair(const Graph& g, const VertexSet& a, const VertexSet& b) {
  int n = g.vertex_count();
  std::vector<char> in_a(n, 0), in_b(n, 0);
  for (int v : a) {
    if (!g.has_vertex(v)) throw std::out_of_range("flip set member out of range");
    in_a[v] = 1;
  }
  for (int v : b) {
    if (!g.has_vertex(v)) throw std::out_of_range("flip set member out of range");
    in_b[v] = 1;
  }
  Graph h = g;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((in_a[u] && in_b[v]) || (in_b[u] && in_a[v])) h.toggle_edge(u, v);
  return h;
}

// Apply every flip in `spec` over the blocks of p. The result does not
// depend on the order of the pairs: distinct block pairs touch disjoint
// vertex pairs.
inline Graph apply_pflip(const Graph& g, const Partition& p, const FlipSpec& spec) {
  if (p.universe_size() != g.vertex_count())
    throw std::invalid_argument("partition does not cover the graph's vertices");
  Graph h = g;
  for (auto [i, j] : spec.pairs) {
    if (i < 0 || i >= p.block_count() || j < 0 || j >= p.block_count())
      throw std::out_of_range("flip spec block index out of range");
    if (i == j) {
      const auto& blk = p.block(i);
      for (size_t x = 0; x < blk.size(); ++x)
        for (size_t y = x + 1; y < blk.size(); ++y) h.toggle_edge(blk[x], blk[y]);
    } else {
      for (int u : p.block(i))
        for (int v : p.block(j)) h.toggle_edge(u, v);
    }
  }
  return h;
}

// All 2^(b(b+1)/2) flip specifications over a b-block partition, in a fixed
// order: subsets of the pair list (0,0),(0,1),...,(0,b-1),(1,1),... by
// increasing bitmask.
inline std::vector<FlipSpec> enumerate_pflips(const Partition& p, int max_blocks = 4) {
  int b = p.block_count();
  if (b > max_blocks)
    throw CapExceeded("enumerate_pflips: " + std::to_string(b) +
                      " blocks exceeds cap " + std::to_string(max_blocks));
  std::vector<std::pair<int, int>> all_pairs;
  for (int i = 0; i < b; ++i)
    for (int j = i; j < b; ++j) all_pairs.emplace_back(i, j);
  std::vector<FlipSpec> out;
  out.reserve(size_t(1) << all_pairs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << all_pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t k = 0; k < all_pairs.size(); ++k)
      if (mask >> k & 1) pairs.push_back(all_pairs[k]);
    out.push_back(FlipSpec{std::move(pairs)});
  }
  return out;
}

// Express a coarse-partition flip relative to a finer partition: a flipped
// pair (A, B) becomes every pair of fine blocks (A', B') with A' in A and
// B' in B.
inline FlipSpec refine_flip_spec(const FlipSpec& spec, const Partition& coarse,
                                 const Partition& fine) {
  if (!fine.refines(coarse))
    throw std::invalid_argument("refine_flip_spec: partitions do not refine");
  std::vector<std::vector<int>> children(coarse.block_count());
  for (int c = 0; c < fine.block_count(); ++c)
    children[coarse.block_of(fine.block(c).front())].push_back(c);
  std::vector<std::pair<int, int>> pairs;
  for (auto [i, j] : spec.pairs) {
    if (i == j) {
      const auto& ch = children[i];
      for (size_t x = 0; x < ch.size(); ++x)
        for (size_t y = x; y < ch.size(); ++y) pairs.emplace_back(ch[x], ch[y]);
    } else {
      for (int x : children[i])
        for (int y : children[j]) pairs.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  return FlipSpec::of(std::move(pairs));
}

struct DeletedGraph {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for deleted vertices
  std::vector<int> new_to_old;
};

// Remove the vertices in s together with their incident edges; survivors
// are renumbered, keeping their relative order.
inline DeletedGraph delete_vertices(const Graph& g, const VertexSet& s) {
  std::vector<char> del(g.vertex_count(), 0);
  for (int v : s) {
    if (!g.has_vertex(v)) throw std::out_of_range("deleted vertex out of range");
    del[v] = 1;
  }
  DeletedGraph out;
  out.old_to_new.assign(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!del[v]) {
      out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  out.graph = Graph(static_cast<int>(out.new_to_old.size()));
  for (auto [u, v] : g.edges())
    if (!del[u] && !del[v]) out.graph.add_edge(out.old_to_new[u], out.old_to_new[v]);
  return out;
}

// Keep all vertices but drop every edge incident to s.
inline Graph isolate_vertices(const Graph& g, const VertexSet& s) {
  std::vector<char> iso(g.vertex_count(), 0);
  for (int v : s) {
    if (!g.has_vertex(v)) throw std::out_of_range("isolated vertex out of range");
    iso[v] = 1;
  }
  Graph h = g;
  for (auto [u, v] : g.edges())
    if (iso[u] || iso[v]) h.remove_edge(u, v);
  return h;
}

struct IsolationFlip {
  Partition partition;
  FlipSpec flip;
};

// One partition-flip whose application isolates v: over {{v}, N(v), rest},
// flipping the pair ({v}, N(v)) removes exactly the edges at v. Empty
// blocks are dropped (an already isolated v yields the identity flip).
inline IsolationFlip isolation_as_flips(const Graph& g, int v) {
  if (!g.has_vertex(v)) throw std::out_of_range("vertex out of range");
  std::vector<int> nbrs = g.neighbors(v);
  std::vector<char> used(g.vertex_count(), 0);
  used[v] = 1;
  for (int u : nbrs) used[u] = 1;
  std::vector<int> rest;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (!used[u]) rest.push_back(u);

  std::vector<std::vector<int>> blocks;
  blocks.push_back({v});
  if (!nbrs.empty()) blocks.push_back(nbrs);
  if (!rest.empty()) blocks.push_back(rest);
  Partition p(g.vertex_count(), std::move(blocks));

  std::vector<std::pair<int, int>> pairs;
  if (!nbrs.empty()) {
    int bv = p.block_of(v);
    int bn = p.block_of(nbrs.front());
    pairs.emplace_back(std::min(bv, bn), std::max(bv, bn));
  }
  return IsolationFlip{std::move(p), FlipSpec::of(std::move(pairs))};
}

// All distinct graphs obtainable from g by one flip over a partition with
// at most k blocks (the identity flip included), deduplicated by edge set.
// Partitions are enumerated as restricted-growth strings.
inline std::vector<Graph> enumerate_kflips(const Graph& g, int k,
                                           int max_n = 6, int max_k = 6) {
  int n = g.vertex_count();
  if (n > max_n)
    throw CapExceeded("enumerate_kflips: n = " + std::to_string(n) +
                      " exceeds cap " + std::to_string(max_n));
  if (k > max_k)
    throw CapExceeded("enumerate_kflips: k = " + std::to_string(k) +
                      " exceeds cap " + std::to_string(max_k));
  if (k < 1) throw std::invalid_argument("flip budget must be positive");

  std::vector<Graph> out;
  std::unordered_set<Graph, GraphHash> seen;
  auto emit = [&](const Graph& h) {
    if (seen.insert(h).second) out.push_back(h);
  };
  if (n == 0) {
    emit(g);
    return out;
  }

  std::vector<int> assign(n, 0);
  auto flips_of_assignment = [&](int used) {
    std::vector<std::vector<int>> blocks(used);
    for (int v = 0; v < n; ++v) blocks[assign[v]].push_back(v);
    Partition p(n, std::move(blocks));
    for (const FlipSpec& f : enumerate_pflips(p, max_k)) emit(apply_pflip(g, p, f));
  };
  // Restricted growth: vertex 0 is in block 0; vertex i joins an existing
  // block or opens block max+1, capped at k blocks.
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (v == n) {
      flips_of_assignment(used);
      return;
    }
    for (int b = 0; b < used; ++b) {
      assign[v] = b;
      self(self, v + 1, used);
    }
    if (used < k) {
      assign[v] = used;
      self(self, v + 1, used + 1);
    }
  };
  rec(rec, 1, 1);
  return out;
}

}  // namespace widthlab
