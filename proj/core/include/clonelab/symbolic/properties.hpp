#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clonelab/symbolic/symbolic_fn.hpp"

namespace clonelab::symbolic {

struct PairCollision {
  std::pair<Nat, Nat> first;
  std::pair<Nat, Nat> second;
  Nat value = 0;
};

/// Scans the box region with x outer; returns the first pair found to repeat an earlier value.
std::optional<PairCollision> check_injective_on(const SymbolicFn& f, const Box& box);

/// Calls visit(span) for every tuple of [lo, hi)^n in lexicographic order. For binary
/// functions the box region filters the pairs.
void for_each_tuple(unsigned arity, const Box& box,
                    const std::function<void(std::span<const Nat>)>& visit);

struct FiberProfile {
  unsigned coordinate = 1;
  Nat half_width_max = 0;  // largest fiber over the lower half of the box
  Nat full_width_max = 0;  // largest fiber over the whole box
  bool within_slack = false;
};

enum class AlmostUnaryKind { verified_witness, witness_refuted, almost_unary_on_box, not_almost_unary_on_box };

std::string to_string(AlmostUnaryKind kind);

struct AlmostUnaryVerdict {
  AlmostUnaryKind kind = AlmostUnaryKind::not_almost_unary_on_box;
  Box box;
  std::vector<Nat> counterexample;
  std::vector<FiberProfile> profile;
  bool passed() const {
    return kind == AlmostUnaryKind::verified_witness || kind == AlmostUnaryKind::almost_unary_on_box;
  }
};

/// Slack for the fiber census: the largest fiber size allowed at probe x and box width w.
using SlackFn = std::function<Nat(Nat x, Nat width)>;

/// With a witness, checks g(x̄) ∈ G(x_k) on the box. Without one, fixes coordinate k at
/// probes in the first quarter of the box, counts the values over the other coordinates
/// at half and at full width, and accepts the coordinate when the full-width count stays
/// within the slack. The default slack is the half-width count: fibers must not grow.
AlmostUnaryVerdict almost_unary_check(const SymbolicFn& f,
                                      const std::optional<AlmostUnaryWitness>& witness,
                                      const Box& box, const SlackFn& slack = {});

/// True when fixing the other coordinates somewhere in the lower half of the box leaves a
/// fiber over coordinate k (1-based) with as many values as the box is wide.
bool depends_heavily(const SymbolicFn& f, unsigned k, const Box& box);

struct SgEstimate {
  std::vector<std::set<unsigned>> sets;
  bool pairwise_intersecting = true;
  Nat threshold = 0;
};

/// Every nonempty s ⊆ {1..n} for which some assignment of the complement from the lower
/// half of the box gives at least `threshold` values as s ranges over the box.
SgEstimate s_g_estimate(const SymbolicFn& g, const Box& box, Nat threshold);

struct SpreadWitness {
  enum class Kind { q_style, p_style };
  Kind kind = Kind::q_style;
  std::function<std::vector<Nat>(Nat)> map;
  std::optional<Nat> uniform_bound;
};

enum class SpreadKind { verified, refuted, bound_refuted };

std::string to_string(SpreadKind kind);

struct SpreadVerdict {
  SpreadKind kind = SpreadKind::verified;
  std::vector<Nat> tuple;
};

/// f(x̄) ∈ Q(x_1) ∪ ... ∪ Q(x_n) on every box tuple; P-style witnesses also need |P(x)| < k.
SpreadVerdict witnessed_spread_check(const SymbolicFn& f, const SpreadWitness& w, const Box& box);

}  // namespace clonelab::symbolic
