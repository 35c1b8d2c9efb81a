#pragma once

#include <vector>

#include "clonelab/finite/closure.hpp"

namespace clonelab::finite {

struct IntervalClone {
  CloneSlices slices;
  /// Sizes of slices 1..cap.
  std::vector<std::size_t> slice_sizes;
  std::size_t total_size = 0;
};

struct ChainReport {
  Carrier carrier;
  unsigned arity_cap;
  unsigned working_cap;
  /// Operations outside the bottom clone, and how many symmetry classes they fall into.
  std::size_t candidates = 0;
  std::size_t orbit_representatives = 0;
  /// Distinct clones above O^(1), ordered by size.
  std::vector<IntervalClone> clones;
  bool is_chain = false;
};

/// The symmetry class representative of f: the least table among σ∘f∘(τ_1, …, τ_n) with
/// argument permutations applied, σ and τ_i ranging over carrier permutations.
OpTable orbit_representative(const OpTable& f);

/// Clones between O^(1) and O, compared on slices up to arity_cap.
ChainReport unary_interval_chain(Carrier carrier, unsigned arity_cap, unsigned working_cap,
                                 ClosureLimits limits = {});

}  // namespace clonelab::finite
