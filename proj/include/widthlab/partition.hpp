#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

// An ordered partition of {0..n-1} into disjoint nonempty blocks, kept in
// canonical form: each block sorted ascending, blocks ordered by their
// smallest element. Canonical form makes partition equality a plain
// comparison and keeps block indices deterministic.
class Partition {
 public:
  Partition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
    if (n < 0) throw std::invalid_argument("partition universe must be nonnegative");
    for (auto& b : blocks) {
      if (b.empty()) throw std::invalid_argument("partition block is empty");
      std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    block_of_.assign(n, -1);
    for (size_t i = 0; i < blocks.size(); ++i) {
      for (int v : blocks[i]) {
        if (v < 0 || v >= n)
          throw std::invalid_argument("partition member " + std::to_string(v) +
                                      " out of range");
        if (block_of_[v] != -1)
          throw std::invalid_argument("vertex " + std::to_string(v) +
                                      " appears in two blocks");
        block_of_[v] = static_cast<int>(i);
      }
    }
    for (int v = 0; v < n; ++v)
      if (block_of_[v] == -1)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " missing from partition");
    blocks_ = std::move(blocks);
  }

  static Partition single_block(int n) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return Partition(n, {std::move(all)});
  }

  static Partition singletons(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(n);
    for (int v = 0; v < n; ++v) blocks.push_back({v});
    return Partition(n, std::move(blocks));
  }

  int universe_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& block(int i) const { return blocks_.at(i); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int v) const { return block_of_.at(v); }

  // True when every block of *this is contained in some block of `coarser`.
  bool refines(const Partition& coarser) const {
    if (n_ != coarser.n_) return false;
    for (const auto& b : blocks_) {
      int target = coarser.block_of(b.front());
      for (int v : b)
        if (coarser.block_of(v) != target) return false;
    }
    return true;
  }

  // Blocks intersected with s, empty ones dropped, vertices renumbered to
  // 0..|s|-1 by ascending order of s. Matches Graph::induced numbering.
  Partition restricted_to(const VertexSet& s_in) const {
    VertexSet s = normalized_vertex_set(s_in);
    std::vector<int> old_to_new(n_, -1);
    for (size_t i = 0; i < s.size(); ++i) old_to_new[s[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> blocks;
    for (const auto& b : blocks_) {
      std::vector<int> nb;
      for (int v : b)
        if (old_to_new[v] != -1) nb.push_back(old_to_new[v]);
      if (!nb.empty()) blocks.push_back(std::move(nb));
    }
    return Partition(static_cast<int>(s.size()), std::move(blocks));
  }

  static Partition common_refinement(const Partition& a, const Partition& b) {
    if (a.n_ != b.n_)
      throw std::invalid_argument("partitions over different universes");
    std::vector<std::vector<int>> cells(
        static_cast<size_t>(a.block_count()) * b.block_count());
    for (int v = 0; v < a.n_; ++v)
      cells[static_cast<size_t>(a.block_of(v)) * b.block_count() + b.block_of(v)]
          .push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& c : cells)
      if (!c.empty()) blocks.push_back(std::move(c));
    return Partition(a.n_, std::move(blocks));
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

}  // namespace widthlab
