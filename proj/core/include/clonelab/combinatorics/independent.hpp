#pragma once

#include <cstdint>
#include <vector>

#include "clonelab/combinatorics/coloring.hpp"

namespace clonelab::combinatorics {

/// Base element of the finite Hausdorff construction: a set s ⊆ {0..q-1} (bit mask) and a
/// family A of subsets of s (bit j of `family` stands for the j-th subset of s, subsets
/// numbered by their bits relative to s).
struct HausdorffPoint {
  std::uint32_t s;
  std::uint32_t family;
  friend bool operator==(const HausdorffPoint&, const HausdorffPoint&) = default;
};

struct IndependentFamily {
  std::size_t base_size = 0;
  /// Filled for families built by hausdorff_family.
  std::vector<HausdorffPoint> base;
  std::vector<ColorSet> sets;

  static IndependentFamily from_sets(std::size_t base_size, std::vector<ColorSet> sets);
};

/// Every signed combination over disjoint J0, J1 with |J0| + |J1| <= width is nonempty.
bool verify_independent(const IndependentFamily& family, unsigned width);

/// Number of signed combinations verify_independent examines at the given width.
std::uint64_t signed_combination_count(std::size_t index_count, unsigned width);

/// Finite Hausdorff construction with m threshold cuts T_i = {0..i} of a ground order of
/// size q. The base holds every (s, A) with |s| <= max_s; index i selects the points with
/// s ∩ T_i ∈ A. Verified at min(width, m) before it is returned.
IndependentFamily hausdorff_family(unsigned m, unsigned q, unsigned max_s = 3, unsigned width = 3);

}  // namespace clonelab::combinatorics
