#pragma once

#include <optional>
#include <vector>

#include "clonelab/symbolic/symbolic_fn.hpp"
#include "clonelab/terms/term.hpp"

namespace clonelab::terms {

struct SearchOptions {
  unsigned max_depth = 3;
  std::vector<SymbolicFn> unary_library;
  std::vector<Nat> constants;
  /// Cap on distinct functions kept; exceeding it raises ResourceLimit.
  std::size_t max_functions = std::size_t{1} << 20;
};

struct SearchReport {
  std::optional<Term> found;
  unsigned depth_reached = 0;
  /// Distinct functions (by value table on the box) first reached at each depth.
  std::vector<std::size_t> frontier_sizes;
  std::size_t candidates_evaluated = 0;
};

inline constexpr unsigned kMaxSearchDepth = 4;

/// Iterative deepening over the term grammar. Terms are kept only when their value table
/// on the box is new, and the first term (in generation order) agreeing with the target on
/// the whole box is returned. Applications that overflow are dropped.
SearchReport bounded_term_search(const SymbolicFn& target, const std::vector<SymbolicFn>& symbols,
                                 const symbolic::Box& box, const SearchOptions& options);

}  // namespace clonelab::terms
