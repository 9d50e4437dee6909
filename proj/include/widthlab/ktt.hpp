#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "widthlab/errors.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

struct BicliqueWitness {
  VertexSet left;
  VertexSet right;
};

struct KttCaps {
  int max_n = 64;
  int max_t = 4;
};

// Search for two disjoint t-sets A, B with every A-B pair an edge (a
// K_{t,t} subgraph, not necessarily induced). Branch-and-prune over A-sets:
// candidates are ordered by decreasing degree and the running common
// neighborhood prunes a branch as soon as fewer than t partners remain.
inline std::optional<BicliqueWitness> find_biclique(const Graph& g, int t,
                                                    KttCaps caps = {}) {
  if (t < 1) throw std::invalid_argument("biclique parameter t must be >= 1");
  int n = g.vertex_count();
  if (n > caps.max_n)
    throw CapExceeded("find_biclique: n = " + std::to_string(n) +
                      " exceeds cap " + std::to_string(caps.max_n));
  if (t > caps.max_t)
    throw CapExceeded("find_biclique: t = " + std::to_string(t) +
                      " exceeds cap " + std::to_string(caps.max_t));

  std::vector<int> cand;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= t) cand.push_back(v);
  if (static_cast<int>(cand.size()) < t) return std::nullopt;
  std::sort(cand.begin(), cand.end(), [&](int a, int b) {
    int da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });

  std::vector<char> common(n, 1);  // common neighborhood of the current A
  std::vector<int> a_set;
  std::vector<std::vector<int>> saved;  // members knocked out per level

  auto common_minus_a = [&]() {
    int c = 0;
    for (int v = 0; v < n; ++v)
      if (common[v] && !std::binary_search(a_set.begin(), a_set.end(), v)) ++c;
    return c;
  };

  std::optional<BicliqueWitness> found;
  auto rec = [&](auto&& self, size_t next) -> bool {
    if (static_cast<int>(a_set.size()) == t) {
      VertexSet b;
      for (int v = 0; v < n && static_cast<int>(b.size()) < t; ++v)
        if (common[v] && !std::binary_search(a_set.begin(), a_set.end(), v))
          b.push_back(v);
      if (static_cast<int>(b.size()) == t) {
        VertexSet a = a_set;
        std::sort(a.begin(), a.end());
        found = BicliqueWitness{std::move(a), std::move(b)};
        return true;
      }
      return false;
    }
    int missing = t - static_cast<int>(a_set.size());
    for (size_t i = next; i + missing <= cand.size(); ++i) {
      // A members need not be adjacent to each other (subgraph, not induced),
      // so v joining A is unconstrained; only the common neighborhood shrinks.
      int v = cand[i];
      saved.emplace_back();
      for (int w = 0; w < n; ++w)
        if (common[w] && !g.has_edge(v, w)) {
          common[w] = 0;
          saved.back().push_back(w);
        }
      a_set.push_back(v);
      std::sort(a_set.begin(), a_set.end());
      bool viable = common_minus_a() >= t;
      if (viable && self(self, i + 1)) return true;
      a_set.erase(std::find(a_set.begin(), a_set.end(), v));
      for (int w : saved.back()) common[w] = 1;
      saved.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

inline bool is_ktt_free(const Graph& g, int t, KttCaps caps = {}) {
  return !find_biclique(g, t, caps).has_value();
}

}  // namespace widthlab
