#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clonelab/symbolic/symbolic_fn.hpp"
#include "clonelab/terms/term.hpp"

namespace clonelab::canonical {

using symbolic::Box;
using symbolic::Region;
using symbolic::SymbolicFn;
using Quad = std::array<Nat, 4>;

/// The comparison profile of a 4-tuple: one of <, =, > for each of the six index pairs,
/// packed in base 3.
struct OrderPattern {
  unsigned code = 0;
  friend bool operator==(const OrderPattern&, const OrderPattern&) = default;
};

/// Requires α1 ≠ α2 and α3 ≠ α4.
OrderPattern tuple_pattern(const Quad& a);
bool similar(const Quad& a, const Quad& b);
/// Every pattern realized by an admissible 4-tuple.
std::vector<OrderPattern> admissible_patterns();

struct Violation {
  Quad first;
  Quad second;
};

struct CanonicalCheck {
  bool canonical = true;
  std::optional<Violation> violation;
};

/// Exhaustive over admissible 4-tuples from the sample: for each pattern the comparison of
/// F(α1, α2) with F(α3, α4) must come out the same way.
CanonicalCheck is_canonical(const SymbolicFn& f, const std::vector<Nat>& sample);

/// Greedy: scans the candidates in order and keeps a point when no violation arises with
/// the points already kept.
std::vector<Nat> canonical_subset(const SymbolicFn& f, const std::vector<Nat>& candidates);
std::vector<Nat> canonical_subset(const SymbolicFn& f, const Box& box);

class NotCanonical : public InvalidArgument {
 public:
  NotCanonical(const std::string& what, Violation v) : InvalidArgument(what), violation(v) {}
  Violation violation;
};

struct CanonicalClassification {
  enum class Kind { injective_on_region, first_coordinate, second_coordinate, constant_on_region };
  Kind kind = Kind::constant_on_region;
  Region region = Region::delta;
  Nat value = 0;
  /// argument -> value for the coordinate variants.
  std::vector<std::pair<Nat, Nat>> map;
  bool degenerate = false;
  std::size_t sample_size = 0;
  /// The value the variant predicts at a region point; nullopt for injective_on_region.
  std::optional<Nat> predict(Nat alpha, Nat beta) const;
};

std::string to_string(CanonicalClassification::Kind kind);

/// Requires F canonical on the sample (NotCanonical otherwise). Regions with fewer than
/// three points are reported constant and flagged degenerate. Throws Inconclusive if no
/// variant fits.
CanonicalClassification classify_on_region(const SymbolicFn& f, Region region, const std::vector<Nat>& sample);

enum class Interaction { disjoint_ranges, symmetric, neither_precondition, overlapping };

std::string to_string(Interaction i);

struct InteractionReport {
  Interaction verdict = Interaction::neither_precondition;
  bool injective_on_delta = false;
  bool injective_on_nabla = false;
  /// For `overlapping`: a Δ point and a ∇ point with the same value.
  std::optional<std::pair<std::pair<Nat, Nat>, std::pair<Nat, Nat>>> witness;
};

/// `overlapping` can only occur for non-canonical inputs.
InteractionReport delta_nabla_interaction(const SymbolicFn& f, const Box& box);

struct RegionUnary {
  bool member = false;
  char side = 'x';
  /// Same first coordinate, different values; likewise for the second coordinate.
  std::optional<std::pair<std::pair<Nat, Nat>, std::pair<Nat, Nat>>> x_witness;
  std::optional<std::pair<std::pair<Nat, Nat>, std::pair<Nat, Nat>>> y_witness;
};

/// Whether t restricted to the region of the box is f(α) or f(β); side x wins ties.
RegionUnary unary_on_region(const terms::Term& t, const Box& box, Region region);
RegionUnary u_delta_membership(const terms::Term& t, const Box& box);
RegionUnary u_nabla_membership(const terms::Term& t, const Box& box);

struct HeavySubterm {
  std::vector<unsigned> path;
  terms::Term term;
  Region failed_region;
};

/// The smallest subterm (by size, then path order) that is not unary on both Δ and ∇.
std::optional<HeavySubterm> minimal_heavy_subterm(const terms::Term& t, const Box& box);

}  // namespace clonelab::canonical
