#include "clonelab/combinatorics/ramsey.hpp"

#include <algorithm>
#include <set>

namespace clonelab::combinatorics {

namespace {

// All r-subsets of {0..n-1} in lexicographic order, as bit masks.
std::vector<std::uint32_t> subsets_of_size(unsigned n, unsigned r) {
  std::vector<std::uint32_t> out;
  std::vector<unsigned> pick(r);
  for (unsigned i = 0; i < r; ++i) pick[i] = i;
  if (r > n) return out;
  while (true) {
    std::uint32_t mask = 0;
    for (unsigned p : pick) mask |= 1u << p;
    out.push_back(mask);
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && pick[i] == n - r + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

PartitionResult partition_check(unsigned n, unsigned m, unsigned r, unsigned c,
                                std::uint64_t budget) {
  if (n > 20) throw ResourceLimit("partition_check supports n <= 20");
  if (c < 1) throw InvalidArgument("at least one color is required");
  PartitionResult result;
  if (m > n) {
    result.holds = false;
    return result;
  }
  const auto edges = subsets_of_size(n, r);
  const auto candidates = subsets_of_size(n, m);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (total > budget / c) throw ResourceLimit("c^C(n,r) colorings exceed the budget");
    total *= c;
  }

  // For each candidate m-set, the indices of the r-subsets inside it.
  std::vector<std::vector<std::size_t>> inside(candidates.size());
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if ((edges[e] & candidates[a]) == edges[e]) inside[a].push_back(e);
    }
  }

  std::vector<unsigned> color(edges.size(), 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    ++result.colorings_checked;
    const bool homogeneous = std::any_of(inside.begin(), inside.end(), [&](const auto& es) {
      return std::all_of(es.begin(), es.end(), [&](std::size_t e) {
        return color[e] == color[es.front()];
      });
    });
    if (!homogeneous) {
      result.holds = false;
      result.counterexample = color;
      return result;
    }
    for (std::size_t p = edges.size(); p-- > 0;) {
      if (++color[p] < c) break;
      color[p] = 0;
    }
  }
  result.holds = true;
  return result;
}

BlockSequence::BlockSequence(std::vector<std::vector<Nat>> blocks) : blocks_(std::move(blocks)) {
  std::set<Nat> seen;
  for (const auto& b : blocks_) {
    if (b.size() != blocks_.front().size()) throw InvalidArgument("blocks must share one size");
    for (Nat x : b) {
      if (!seen.insert(x).second) throw InvalidArgument("blocks must be pairwise disjoint");
    }
  }
}

std::optional<std::pair<std::size_t, std::size_t>> anti_ramsey_search(const Coloring& c,
                                                                      const BlockSequence& blocks,
                                                                      unsigned c0) {
  if (c0 >= c.mu()) throw InvalidArgument("target color must be below mu");
  const auto& bs = blocks.blocks();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      bool mono = true;
      for (Nat a : bs[i]) {
        for (Nat b : bs[j]) {
          if (c.checked(a, b) != c0) {
            mono = false;
            break;
          }
        }
        if (!mono) break;
      }
      if (mono) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace clonelab::combinatorics
