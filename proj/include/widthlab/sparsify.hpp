#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "widthlab/flips.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/ktt.hpp"
#include "widthlab/partition.hpp"
#include "widthlab/radius.hpp"

namespace widthlab {

// A part is small when it has fewer than t^2 vertices.
inline bool is_t_small(const std::vector<int>& block, int t) {
  return static_cast<int>(block.size()) < t * t;
}

// v is t-complete to a part when it misses fewer than t of its vertices.
// When v lies in the part, v itself counts as one of the misses (v is not
// its own neighbor).
inline bool is_t_complete(const Graph& g, int v, const std::vector<int>& block,
                          int t) {
  int missing = 0;
  for (int u : block)
    if (u == v || !g.has_edge(v, u)) {
      if (++missing >= t) return false;
    }
  return true;
}

// All vertices of g that are t-complete to the given part. On a K_{t,t}-free
// graph with a t-big part there are fewer than t of them.
inline VertexSet complete_vertices(const Graph& g, const std::vector<int>& block,
                                   int t) {
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (is_t_complete(g, v, block, t)) out.push_back(v);
  return out;
}

enum class DeleteReason { small_part, complete_to_big };

struct ReasonTag {
  DeleteReason kind;
  int block;  // the small part containing v, or the big part v is complete to
};

struct SparsifyReport {
  VertexSet deleted;
  std::vector<std::pair<int, ReasonTag>> reasons;  // one entry per deleted vertex
  int size_bound;  // |P| * t^2
  bool passed;     // |deleted| < size_bound
};

// The deletion set: vertices in a t-small part, plus vertices t-complete to
// at least one t-big part. Each deleted vertex carries a re-checkable reason
// (own small part first, otherwise the first big part it is complete to).
inline SparsifyReport sparsify_set(const Graph& g, const Partition& p, int t) {
  if (p.universe_size() != g.vertex_count())
    throw std::invalid_argument("partition does not cover the graph");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  SparsifyReport report;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int own = p.block_of(v);
    std::optional<ReasonTag> tag;
    if (is_t_small(p.block(own), t)) {
      tag = ReasonTag{DeleteReason::small_part, own};
    } else {
      for (int b = 0; b < p.block_count() && !tag; ++b)
        if (!is_t_small(p.block(b), t) && is_t_complete(g, v, p.block(b), t))
          tag = ReasonTag{DeleteReason::complete_to_big, b};
    }
    if (tag) {
      report.deleted.push_back(v);
      report.reasons.emplace_back(v, *tag);
    }
  }
  report.size_bound = p.block_count() * t * t;
  report.passed = static_cast<int>(report.deleted.size()) < report.size_bound;
  return report;
}

// Re-validate a report's reason tags against the definition.
inline bool revalidate_reasons(const Graph& g, const Partition& p, int t,
                               const SparsifyReport& report) {
  for (const auto& [v, tag] : report.reasons) {
    const auto& block = p.block(tag.block);
    switch (tag.kind) {
      case DeleteReason::small_part:
        if (p.block_of(v) != tag.block || !is_t_small(block, t)) return false;
        break;
      case DeleteReason::complete_to_big:
        if (is_t_small(block, t) || !is_t_complete(g, v, block, t)) return false;
        break;
    }
  }
  return report.reasons.size() == report.deleted.size();
}

enum class EngineCheck { edge_distance, distance_ratio, set_size };

struct EngineReport {
  bool passed = true;
  EngineCheck failed_check = EngineCheck::edge_distance;
  std::pair<int, int> violating_pair{-1, -1};
  Radius dist_flipped;  // distance of the violating pair in the flipped graph
  Radius dist_deleted;  // distance of the violating pair in G minus S
  SparsifyReport sparsify;
};

// Check, for S = sparsify_set(g, p, t) and H = apply_pflip(g, p, f):
//   (a) every edge uv of G - S has dist_H(u, v) <= 3,
//   (b) dist_H(u, v) <= 3 * dist_{G-S}(u, v) for all u, v outside S,
//   (c) |S| < |P| * t^2.
// The graph must be K_{t,t}-free; every lemma behind these checks carries
// that hypothesis, so a non-free input is refused rather than reported.
inline EngineReport verify_engine(const Graph& g, const Partition& p, int t,
                                  const FlipSpec& f, KttCaps kcaps = {},
                                  std::optional<VertexSet> override_deleted = {}) {
  if (auto w = find_biclique(g, t, kcaps))
    throw std::invalid_argument("verify_engine: input graph contains a K_{" +
                                std::to_string(t) + "," + std::to_string(t) + "}");
  EngineReport report;
  report.sparsify = sparsify_set(g, p, t);
  const VertexSet& deleted =
      override_deleted ? *override_deleted : report.sparsify.deleted;

  int n = g.vertex_count();
  std::vector<char> in_s(n, 0);
  for (int v : deleted) in_s[v] = 1;
  Graph h = apply_pflip(g, p, f);

  auto radius_of = [](int d) { return d < 0 ? Radius::infinity() : Radius(d); };

  for (int u = 0; u < n; ++u) {
    if (in_s[u]) continue;
    std::vector<int> dh = h.bfs_distances(u);
    std::vector<int> dg = bfs_distances_avoiding(g, u, in_s);
    for (int v = 0; v < n; ++v) {
      if (in_s[v] || v == u) continue;
      Radius dist_h = radius_of(dh[v]);
      Radius dist_g = radius_of(dg[v]);
      if (g.has_edge(u, v) && dist_h.exceeds(3)) {
        report.passed = false;
        report.failed_check = EngineCheck::edge_distance;
        report.violating_pair = {u, v};
        report.dist_flipped = dist_h;
        report.dist_deleted = Radius(1);
        return report;
      }
      // Plain order comparison: an infinite flipped distance next to an
      // infinite deleted distance satisfies the ratio.
      if (dist_h > dist_g.times(3)) {
        report.passed = false;
        report.failed_check = EngineCheck::distance_ratio;
        report.violating_pair = {u, v};
        report.dist_flipped = dist_h;
        report.dist_deleted = dist_g;
        return report;
      }
    }
  }
  if (!override_deleted && !report.sparsify.passed) {
    report.passed = false;
    report.failed_check = EngineCheck::set_size;
  }
  return report;
}

// Sparsify(g, p', t) minus Sparsify(g, p, t), where p' refines p with exactly
// one extra block. The difference has fewer than 2t^2 elements on any
// K_{t,t}-free graph; a larger difference indicates a bug and throws.
inline VertexSet refinement_delta(const Graph& g, const Partition& p,
                                  const Partition& p_refined, int t,
                                  KttCaps kcaps = {}) {
  if (!p_refined.refines(p) || p_refined.block_count() != p.block_count() + 1)
    throw std::invalid_argument(
        "refinement_delta: second partition must refine the first with exactly "
        "one extra block");
  if (auto w = find_biclique(g, t, kcaps))
    throw std::invalid_argument("refinement_delta: input graph contains a K_{" +
                                std::to_string(t) + "," + std::to_string(t) + "}");
  VertexSet before = sparsify_set(g, p, t).deleted;
  VertexSet after = sparsify_set(g, p_refined, t).deleted;
  VertexSet delta;
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::back_inserter(delta));
  if (static_cast<int>(delta.size()) >= 2 * t * t)
    throw std::logic_error("refinement_delta: delta of size " +
                           std::to_string(delta.size()) + " reaches 2t^2");
  return delta;
}

enum class PairFate { separated, inside_deleted, not_separated };

struct PairVerdict {
  int u, v;
  PairFate fate;
  Radius dist_flipped;
  Radius dist_deleted;  // meaningful unless inside_deleted
};

struct DeletionWitness {
  VertexSet deleted;
  std::vector<PairVerdict> pairs;
  bool ok = true;  // every pair separated or flagged inside the deleted set
};

// Realize a flip-based separation as a deletion-based one: pairs that are
// far apart (distance exceeding 3r) in the flipped graph stay far apart
// (distance exceeding r) once Sparsify(g, p, t) is deleted. Pairs violating
// the flipped-distance precondition are an error; pairs that land inside the
// deleted set are flagged rather than judged.
inline DeletionWitness deletion_witness_from_flip(
    const Graph& g, int t, const Partition& p, const FlipSpec& f,
    const std::vector<std::pair<int, int>>& pairs, Radius r, KttCaps kcaps = {}) {
  if (auto w = find_biclique(g, t, kcaps))
    throw std::invalid_argument(
        "deletion_witness_from_flip: input graph contains a K_{" +
        std::to_string(t) + "," + std::to_string(t) + "}");
  Graph h = apply_pflip(g, p, f);
  auto radius_of = [](int d) { return d < 0 ? Radius::infinity() : Radius(d); };

  DeletionWitness out;
  out.deleted = sparsify_set(g, p, t).deleted;
  std::vector<char> in_s(g.vertex_count(), 0);
  for (int v : out.deleted) in_s[v] = 1;

  for (auto [u, v] : pairs) {
    Radius dist_h = h.distance(u, v);
    if (!dist_h.exceeds(r.times(3)))
      throw std::invalid_argument(
          "deletion_witness_from_flip: pair (" + std::to_string(u) + ", " +
          std::to_string(v) + ") is at flipped distance " + dist_h.to_string() +
          ", not exceeding 3r = " + r.times(3).to_string());
    PairVerdict verdict{u, v, PairFate::separated, dist_h, Radius(0)};
    if (in_s[u] || in_s[v]) {
      verdict.fate = PairFate::inside_deleted;
    } else {
      int d = bfs_distances_avoiding(g, u, in_s)[v];
      verdict.dist_deleted = radius_of(d);
      if (!verdict.dist_deleted.exceeds(r)) {
        verdict.fate = PairFate::not_separated;
        out.ok = false;
      }
    }
    out.pairs.push_back(verdict);
  }
  return out;
}

}  // namespace widthlab
