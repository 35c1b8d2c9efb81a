#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "clonelab/combinatorics/coloring.hpp"

namespace clonelab::combinatorics {

struct PartitionResult {
  bool holds = false;
  /// A coloring of the r-subsets (in lexicographic subset order) without a homogeneous
  /// m-subset, when one exists.
  std::optional<std::vector<unsigned>> counterexample;
  std::uint64_t colorings_checked = 0;
};

/// Finite instance of n -> (m)^r_c: every c-coloring of the r-subsets of {0..n-1} has a
/// homogeneous m-subset. Throws ResourceLimit when c^C(n,r) exceeds `budget`.
PartitionResult partition_check(unsigned n, unsigned m, unsigned r, unsigned c,
                                std::uint64_t budget = std::uint64_t{1} << 26);

/// Pairwise disjoint finite blocks of one common size.
class BlockSequence {
 public:
  explicit BlockSequence(std::vector<std::vector<Nat>> blocks);

  const std::vector<std::vector<Nat>>& blocks() const { return blocks_; }
  std::size_t block_size() const { return blocks_.empty() ? 0 : blocks_.front().size(); }

 private:
  std::vector<std::vector<Nat>> blocks_;
};

/// First (i, j), i < j in lexicographic order, with c constantly c0 on block_i × block_j.
std::optional<std::pair<std::size_t, std::size_t>> anti_ramsey_search(const Coloring& c,
                                                                      const BlockSequence& blocks,
                                                                      unsigned c0);

}  // namespace clonelab::combinatorics
