#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "widthlab/errors.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/radius.hpp"

namespace widthlab {

// A total order on the vertices: perm[i] is the vertex at position i.
class Ordering {
 public:
  explicit Ordering(std::vector<int> perm) : perm_(std::move(perm)) {
    pos_.assign(perm_.size(), -1);
    for (size_t i = 0; i < perm_.size(); ++i) {
      int v = perm_[i];
      if (v < 0 || v >= static_cast<int>(perm_.size()) || pos_[v] != -1)
        throw std::invalid_argument("ordering is not a permutation");
      pos_[v] = static_cast<int>(i);
    }
  }

  static Ordering identity(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    return Ordering(std::move(perm));
  }

  int size() const { return static_cast<int>(perm_.size()); }
  int at(int position) const { return perm_.at(position); }
  int position(int v) const { return pos_.at(v); }
  const std::vector<int>& perm() const { return perm_; }

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.perm_ == b.perm_;
  }

 private:
  std::vector<int> perm_;
  std::vector<int> pos_;
};

// Vertices of s reachable from v by a path of length at most r whose inner
// vertices avoid s. BFS runs over the non-s vertices; members of s are
// collected from the frontier but never expanded.
inline VertexSet sep_set(const Graph& g, int v, const VertexSet& s, Radius r) {
  if (!g.has_vertex(v)) throw std::out_of_range("sep_set: vertex out of range");
  std::vector<char> in_s(g.vertex_count(), 0);
  for (int x : s) {
    if (!g.has_vertex(x)) throw std::out_of_range("sep_set: set member out of range");
    in_s[x] = 1;
  }
  if (in_s[v]) throw std::invalid_argument("sep_set: v must lie outside S");
  VertexSet out;
  if (r == Radius(0)) return out;
  std::vector<int> dist = bfs_distances_avoiding(g, v, in_s);
  std::vector<char> hit(g.vertex_count(), 0);
  Radius inner_budget = r.minus(1);
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (dist[w] < 0 || Radius(dist[w]) > inner_budget) continue;
    g.for_each_neighbor(w, [&](int u) {
      if (in_s[u]) hit[u] = 1;
    });
  }
  for (int u = 0; u < g.vertex_count(); ++u)
    if (hit[u]) out.push_back(u);
  return out;
}

// Vertices u <= v reachable from v by a path of length at most r whose inner
// vertices all come after v. Includes v itself (the length-0 path), which
// pins scol_1 to degeneracy + 1.
inline VertexSet sreach_set(const Graph& g, const Ordering& ord, int v, Radius r) {
  std::vector<char> blocked(g.vertex_count(), 0);
  for (int w = 0; w < g.vertex_count(); ++w)
    if (w != v && ord.position(w) <= ord.position(v)) blocked[w] = 1;
  VertexSet out{v};
  if (r == Radius(0)) return out;
  std::vector<int> dist = bfs_distances_avoiding(g, v, blocked);
  std::vector<char> hit(g.vertex_count(), 0);
  Radius inner_budget = r.minus(1);
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (dist[w] < 0 || Radius(dist[w]) > inner_budget) continue;
    g.for_each_neighbor(w, [&](int u) {
      if (u != v && ord.position(u) <= ord.position(v)) hit[u] = 1;
    });
  }
  for (int u = 0; u < g.vertex_count(); ++u)
    if (hit[u]) out.push_back(u);
  return normalized_vertex_set(std::move(out));
}

// Weak reachability: inner vertices only need to come after u. Computed per
// candidate u by a BFS that stays at positions >= pos(u).
inline VertexSet wreach_set(const Graph& g, const Ordering& ord, int v, Radius r) {
  VertexSet out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (ord.position(u) > ord.position(v)) continue;
    std::vector<char> blocked(g.vertex_count(), 0);
    for (int w = 0; w < g.vertex_count(); ++w)
      if (ord.position(w) < ord.position(u)) blocked[w] = 1;
    std::vector<int> dist = bfs_distances_avoiding(g, u, blocked);
    if (dist[v] >= 0 && !Radius(dist[v]).exceeds(r)) out.push_back(u);
  }
  return out;
}

struct WidthResult {
  std::string param;
  Radius r;
  int value = 0;
  bool exact = true;  // greedy results carry false
  Ordering witness{std::vector<int>{}};
  std::vector<int> per_vertex_profile;  // indexed by vertex
};

namespace detail {

// max over u outside the prefix set of |sep_r(u / prefix)|; 0 for the full
// set. The workhorse of everything separation-width shaped.
inline int max_sep_into(const Graph& g, const std::vector<char>& in_prefix,
                        Radius r) {
  int n = g.vertex_count();
  int best = 0;
  if (r == Radius(0)) return 0;
  Radius inner_budget = r.minus(1);
  std::vector<char> hit(n, 0);
  for (int u = 0; u < n; ++u) {
    if (in_prefix[u]) continue;
    std::vector<int> dist = bfs_distances_avoiding(g, u, in_prefix);
    std::fill(hit.begin(), hit.end(), 0);
    int count = 0;
    for (int w = 0; w < n; ++w) {
      if (dist[w] < 0 || Radius(dist[w]) > inner_budget) continue;
      g.for_each_neighbor(w, [&](int x) {
        if (in_prefix[x] && !hit[x]) {
          hit[x] = 1;
          ++count;
        }
      });
    }
    best = std::max(best, count);
  }
  return best;
}

}  // namespace detail

// Width of the given order: the largest r-separator of a later vertex into
// an order prefix. Downward-closed sets of a total order are exactly its
// prefixes, so scanning prefixes covers the whole definition.
inline WidthResult sw_of_order(const Graph& g, const Ordering& ord, Radius r) {
  int n = g.vertex_count();
  if (ord.size() != n) throw std::invalid_argument("ordering size mismatch");
  WidthResult res{"sw", r, 0, true, ord, std::vector<int>(n, 0)};
  if (n == 0 || r == Radius(0)) return res;
  Radius inner_budget = r.minus(1);
  std::vector<char> in_prefix(n, 0);
  std::vector<char> hit(n, 0);
  for (int i = 0; i < n - 1; ++i) {
    in_prefix[ord.at(i)] = 1;
    for (int j = i + 1; j < n; ++j) {
      int u = ord.at(j);
      std::vector<int> dist = bfs_distances_avoiding(g, u, in_prefix);
      std::fill(hit.begin(), hit.end(), 0);
      int count = 0;
      for (int w = 0; w < n; ++w) {
        if (dist[w] < 0 || Radius(dist[w]) > inner_budget) continue;
        g.for_each_neighbor(w, [&](int x) {
          if (in_prefix[x] && !hit[x]) {
            hit[x] = 1;
            ++count;
          }
        });
      }
      res.per_vertex_profile[u] = std::max(res.per_vertex_profile[u], count);
      res.value = std::max(res.value, count);
    }
  }
  return res;
}

inline WidthResult scol_of_order(const Graph& g, const Ordering& ord, Radius r) {
  int n = g.vertex_count();
  if (ord.size() != n) throw std::invalid_argument("ordering size mismatch");
  WidthResult res{"scol", r, 0, true, ord, std::vector<int>(n, 0)};
  for (int v = 0; v < n; ++v) {
    int size = static_cast<int>(sreach_set(g, ord, v, r).size());
    res.per_vertex_profile[v] = size;
    res.value = std::max(res.value, size);
  }
  return res;
}

inline WidthResult wcol_of_order(const Graph& g, const Ordering& ord, Radius r) {
  int n = g.vertex_count();
  if (ord.size() != n) throw std::invalid_argument("ordering size mismatch");
  WidthResult res{"wcol", r, 0, true, ord, std::vector<int>(n, 0)};
  // One BFS per vertex u, restricted to positions >= pos(u): every vertex it
  // reaches within r gains u in its weak reachability set.
  std::vector<char> blocked(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    int u = ord.at(i);
    std::fill(blocked.begin(), blocked.end(), 0);
    for (int w = 0; w < n; ++w)
      if (ord.position(w) < i) blocked[w] = 1;
    std::vector<int> dist = bfs_distances_avoiding(g, u, blocked);
    for (int w = 0; w < n; ++w)
      if (dist[w] >= 0 && !Radius(dist[w]).exceeds(r)) ++res.per_vertex_profile[w];
  }
  for (int v = 0; v < n; ++v) res.value = std::max(res.value, res.per_vertex_profile[v]);
  return res;
}

struct ExactCaps {
  int max_n = 10;
};

// Left-to-right heuristic: append whichever vertex minimizes the largest
// separator from the remaining vertices into the extended prefix.
inline WidthResult sw_greedy(const Graph& g, Radius r) {
  int n = g.vertex_count();
  std::vector<char> in_prefix(n, 0);
  std::vector<int> perm;
  perm.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best_x = -1;
    int best_cost = std::numeric_limits<int>::max();
    for (int x = 0; x < n; ++x) {
      if (in_prefix[x]) continue;
      in_prefix[x] = 1;
      int cost = detail::max_sep_into(g, in_prefix, r);
      in_prefix[x] = 0;
      if (cost < best_cost) {
        best_cost = cost;
        best_x = x;
      }
    }
    in_prefix[best_x] = 1;
    perm.push_back(best_x);
  }
  WidthResult res = sw_of_order(g, Ordering(perm), r);
  res.exact = false;
  return res;
}

namespace detail {

// Memoized depth-first branch-and-bound over vertex orderings for width
// measures whose step cost depends only on (prefix set, next vertex). The
// cost of an order is the max over steps; dominance: a prefix set revisited
// with a partial max no better than before cannot improve.
template <class StepCost>
inline std::pair<int, std::vector<int>> min_order_max_cost(
    int n, int incumbent_value, const std::vector<int>& incumbent_order,
    StepCost&& cost_of) {
  std::uint32_t full = (n >= 32) ? 0 : ((std::uint32_t(1) << n) - 1);
  if (n >= 32) throw CapExceeded("ordering search limited to n < 32");
  int best_value = incumbent_value;
  std::vector<int> best_order = incumbent_order;
  std::unordered_map<std::uint32_t, int> seen;
  std::vector<int> prefix;
  prefix.reserve(n);

  auto dfs = [&](auto&& self, std::uint32_t mask, int partial) -> void {
    if (partial >= best_value) return;
    if (mask == full) {
      best_value = partial;
      best_order = prefix;
      return;
    }
    auto [it, inserted] = seen.try_emplace(mask, partial);
    if (!inserted) {
      if (it->second <= partial) return;
      it->second = partial;
    }
    // Children sorted by cost, ties toward the smaller vertex index.
    std::vector<std::pair<int, int>> children;
    for (int x = 0; x < n; ++x) {
      if (mask >> x & 1) continue;
      children.emplace_back(cost_of(mask, x), x);
    }
    std::sort(children.begin(), children.end());
    for (auto [c, x] : children) {
      prefix.push_back(x);
      self(self, mask | (std::uint32_t(1) << x), std::max(partial, c));
      prefix.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return {best_value, best_order};
}

}  // namespace detail

// Exact separation-width: branch and bound over orderings, greedy incumbent,
// transposition table on prefix sets.
inline WidthResult sw_exact(const Graph& g, Radius r, ExactCaps caps = {}) {
  int n = g.vertex_count();
  if (n > caps.max_n)
    throw CapExceeded("sw_exact: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(caps.max_n) + "; use sw_greedy");
  if (n == 0) return WidthResult{"sw", r, 0, true, Ordering({}), {}};
  WidthResult greedy = sw_greedy(g, r);

  std::vector<char> in_prefix(n, 0);
  auto cost_of = [&](std::uint32_t mask, int x) {
    for (int v = 0; v < n; ++v) in_prefix[v] = (mask >> v & 1);
    in_prefix[x] = 1;
    return detail::max_sep_into(g, in_prefix, r);
  };
  auto [value, order] =
      detail::min_order_max_cost(n, greedy.value, greedy.witness.perm(), cost_of);
  WidthResult res = sw_of_order(g, Ordering(order), r);
  res.exact = true;
  if (res.value != value)
    throw std::logic_error("sw_exact: witness does not re-verify");
  return res;
}

// Exact strong coloring number. The reach set of a vertex depends only on
// the set of earlier vertices, so the same search applies with the cost of
// placing x equal to |sreach(x)| given the prefix.
inline WidthResult scol_exact(const Graph& g, Radius r, ExactCaps caps = {}) {
  int n = g.vertex_count();
  if (n > caps.max_n)
    throw CapExceeded("scol_exact: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(caps.max_n));
  if (n == 0) return WidthResult{"scol", r, 0, true, Ordering({}), {}};

  std::vector<char> in_prefix(n, 0);
  std::vector<char> hit(n, 0);
  auto cost_of = [&](std::uint32_t mask, int x) {
    if (r == Radius(0)) return 1;
    for (int v = 0; v < n; ++v) in_prefix[v] = (mask >> v & 1);
    std::vector<int> dist = bfs_distances_avoiding(g, x, in_prefix);
    std::fill(hit.begin(), hit.end(), 0);
    int count = 1;  // x itself
    Radius inner_budget = r.minus(1);
    for (int w = 0; w < n; ++w) {
      if (dist[w] < 0 || Radius(dist[w]) > inner_budget) continue;
      g.for_each_neighbor(w, [&](int u) {
        if (in_prefix[u] && !hit[u]) {
          hit[u] = 1;
          ++count;
        }
      });
    }
    return count;
  };

  // Incumbent: greedy minimization of the same step cost.
  std::vector<int> greedy_perm;
  {
    std::uint32_t mask = 0;
    for (int step = 0; step < n; ++step) {
      int best_x = -1, best_cost = std::numeric_limits<int>::max();
      for (int x = 0; x < n; ++x) {
        if (mask >> x & 1) continue;
        int c = cost_of(mask, x);
        if (c < best_cost) {
          best_cost = c;
          best_x = x;
        }
      }
      greedy_perm.push_back(best_x);
      mask |= std::uint32_t(1) << best_x;
    }
  }
  int greedy_value = scol_of_order(g, Ordering(greedy_perm), r).value;

  auto [value, order] =
      detail::min_order_max_cost(n, greedy_value, greedy_perm, cost_of);
  WidthResult res = scol_of_order(g, Ordering(order), r);
  res.exact = true;
  if (res.value != value)
    throw std::logic_error("scol_exact: witness does not re-verify");
  return res;
}

struct DegeneracyResult {
  int value = 0;
  Ordering order{std::vector<int>{}};
};

// Repeated minimum-degree removal; the reversed removal sequence gives each
// vertex at most `value` earlier neighbors.
inline DegeneracyResult degeneracy(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  std::vector<int> deg(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> removal;
  removal.reserve(n);
  int value = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    value = std::max(value, deg[best]);
    removed[best] = 1;
    removal.push_back(best);
    g.for_each_neighbor(best, [&](int u) {
      if (!removed[u]) --deg[u];
    });
  }
  std::reverse(removal.begin(), removal.end());
  return DegeneracyResult{value, Ordering(std::move(removal))};
}

// Exact weak coloring number. Weak reach counts depend on the placement
// order, not just the prefix set, so the memo keeps Pareto-minimal
// (partial max, pending counts) pairs per prefix set.
inline WidthResult wcol_exact(const Graph& g, Radius r, ExactCaps caps = {}) {
  int n = g.vertex_count();
  if (n > caps.max_n)
    throw CapExceeded("wcol_exact: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(caps.max_n));
  if (n == 0) return WidthResult{"wcol", r, 0, true, Ordering({}), {}};

  DegeneracyResult degen = degeneracy(g);
  int best_value = wcol_of_order(g, degen.order, r).value;
  std::vector<int> best_order = degen.order.perm();

  struct MemoEntry {
    int partial;
    std::vector<int> counts;
  };
  std::unordered_map<std::uint32_t, std::vector<MemoEntry>> memo;
  std::vector<char> in_prefix(n, 0);
  std::vector<int> prefix;

  auto reach_update = [&](std::uint32_t mask, int x, const std::vector<int>& counts,
                          int partial) {
    for (int v = 0; v < n; ++v) in_prefix[v] = (mask >> v & 1);
    std::vector<int> next = counts;
    std::vector<int> dist = bfs_distances_avoiding(g, x, in_prefix);
    int new_partial = partial;
    for (int w = 0; w < n; ++w)
      if (dist[w] >= 0 && !Radius(dist[w]).exceeds(r)) {
        ++next[w];
        new_partial = std::max(new_partial, next[w]);
      }
    return std::pair<std::vector<int>, int>(std::move(next), new_partial);
  };

  auto dominated = [&](std::uint32_t mask, int partial, const std::vector<int>& counts) {
    auto it = memo.find(mask);
    if (it == memo.end()) return false;
    for (const MemoEntry& e : it->second) {
      if (e.partial > partial) continue;
      bool dom = true;
      for (int v = 0; v < n && dom; ++v)
        if (!(mask >> v & 1) && e.counts[v] > counts[v]) dom = false;
      if (dom) return true;
    }
    return false;
  };

  auto remember = [&](std::uint32_t mask, int partial, const std::vector<int>& counts) {
    auto& entries = memo[mask];
    entries.erase(std::remove_if(entries.begin(), entries.end(),
                                 [&](const MemoEntry& e) {
                                   if (partial > e.partial) return false;
                                   for (int v = 0; v < n; ++v)
                                     if (!(mask >> v & 1) && counts[v] > e.counts[v])
                                       return false;
                                   return true;
                                 }),
                  entries.end());
    if (entries.size() < 64) entries.push_back(MemoEntry{partial, counts});
  };

  std::uint32_t full = (std::uint32_t(1) << n) - 1;
  auto dfs = [&](auto&& self, std::uint32_t mask, int partial,
                 const std::vector<int>& counts) -> void {
    if (partial >= best_value) return;
    if (mask == full) {
      best_value = partial;
      best_order = prefix;
      return;
    }
    if (dominated(mask, partial, counts)) return;
    remember(mask, partial, counts);
    std::vector<std::pair<int, int>> children;
    std::vector<std::pair<std::vector<int>, int>> child_state;
    for (int x = 0; x < n; ++x) {
      if (mask >> x & 1) continue;
      auto [next, new_partial] = reach_update(mask, x, counts, partial);
      children.emplace_back(new_partial, x);
      child_state.emplace_back(std::move(next), new_partial);
    }
    std::vector<int> idx(children.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return children[a] < children[b];
    });
    for (int i : idx) {
      int x = children[i].second;
      prefix.push_back(x);
      self(self, mask | (std::uint32_t(1) << x), child_state[i].second,
           child_state[i].first);
      prefix.pop_back();
    }
  };
  dfs(dfs, 0, 0, std::vector<int>(n, 0));

  WidthResult res = wcol_of_order(g, Ordering(best_order), r);
  res.exact = true;
  if (res.value != best_value)
    throw std::logic_error("wcol_exact: witness does not re-verify");
  return res;
}

// Exact treewidth by dynamic programming over elimination prefixes:
// TW(S) = min over v in S of max(TW(S - v), back-degree of v when the rest
// of S is already eliminated). Kept independent of the separation-width
// machinery on purpose; it serves as the second route for sw at r = infinity.
inline int treewidth_oracle(const Graph& g, int max_n = 12) {
  int n = g.vertex_count();
  if (n > max_n)
    throw CapExceeded("treewidth_oracle: n = " + std::to_string(n) +
                      " exceeds cap " + std::to_string(max_n));
  if (n == 0) return 0;
  std::uint32_t full = (std::uint32_t(1) << n) - 1;
  std::vector<int> tw(full + 1, 0);
  tw[0] = -1;
  std::vector<int> stack;
  std::vector<char> seen(n, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int best = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      std::uint32_t prev = mask & ~(std::uint32_t(1) << v);
      // Count vertices outside `mask` reachable from v through `prev`.
      std::fill(seen.begin(), seen.end(), 0);
      stack.clear();
      stack.push_back(v);
      seen[v] = 1;
      int q = 0;
      while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        g.for_each_neighbor(w, [&](int u) {
          if (seen[u]) return;
          seen[u] = 1;
          if (prev >> u & 1)
            stack.push_back(u);
          else if (u != v && !(mask >> u & 1))
            ++q;
        });
      }
      best = std::min(best, std::max(tw[prev], q));
    }
    tw[mask] = best;
  }
  return tw[full];
}

struct SandwichReport {
  // Values on the supplied order.
  int scol_r = 0, sw_r = 0, wcol_r = 0, scol_2r1 = 0;
  bool order_ok = true;
  // Filled when exact checking was requested and within caps.
  bool exact_checked = false;
  int exact_scol_r = 0, exact_sw_r = 0, exact_wcol_r = 0, exact_scol_2r1 = 0;
  bool exact_ok = true;

  bool ok() const { return order_ok && (!exact_checked || exact_ok); }
};

// The two inequality chains, checked order-wise (the proofs are order-wise)
// and optionally on exact values:
//   scol_r <= sw_r + 1 <= wcol_r     and     sw_r + 1 <= scol_{2r-1}.
inline SandwichReport check_sandwich(const Graph& g, const Ordering& ord, Radius r,
                                     bool check_exact = false, ExactCaps caps = {}) {
  if (r < Radius(1)) throw std::invalid_argument("check_sandwich needs r >= 1");
  Radius r2 = r.times(2).minus(1);
  SandwichReport rep;
  rep.scol_r = scol_of_order(g, ord, r).value;
  rep.sw_r = sw_of_order(g, ord, r).value;
  rep.wcol_r = wcol_of_order(g, ord, r).value;
  rep.scol_2r1 = scol_of_order(g, ord, r2).value;
  rep.order_ok = rep.scol_r <= rep.sw_r + 1 && rep.sw_r + 1 <= rep.wcol_r &&
                 rep.sw_r + 1 <= rep.scol_2r1;
  if (check_exact && g.vertex_count() <= caps.max_n) {
    rep.exact_checked = true;
    rep.exact_scol_r = scol_exact(g, r, caps).value;
    rep.exact_sw_r = sw_exact(g, r, caps).value;
    rep.exact_wcol_r = wcol_exact(g, r, caps).value;
    rep.exact_scol_2r1 = scol_exact(g, r2, caps).value;
    rep.exact_ok = rep.exact_scol_r <= rep.exact_sw_r + 1 &&
                   rep.exact_sw_r + 1 <= rep.exact_wcol_r &&
                   rep.exact_sw_r + 1 <= rep.exact_scol_2r1;
  }
  return rep;
}

}  // namespace widthlab
