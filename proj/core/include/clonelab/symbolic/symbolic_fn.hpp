#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clonelab/common.hpp"

namespace clonelab::symbolic {

/// g(x̄) ∈ G(x_k). G is either an explicit finite set or, in ordinal form, {0..bound(x)}.
class AlmostUnaryWitness {
 public:
  using SetMap = std::function<std::vector<Nat>(Nat)>;
  using BoundMap = std::function<Nat(Nat)>;

  static AlmostUnaryWitness from_set(unsigned coordinate, SetMap set, std::string description);
  static AlmostUnaryWitness from_bound(unsigned coordinate, BoundMap bound,
                                       std::string description);

  /// 1-based.
  unsigned coordinate() const { return coordinate_; }
  bool contains(Nat x, Nat value) const;
  /// Largest element of G(x).
  Nat bound(Nat x) const;
  const std::string& description() const { return description_; }

 private:
  unsigned coordinate_ = 1;
  SetMap set_;
  BoundMap bound_;
  std::string description_;
};

struct Annotations {
  bool injective_off_diagonal = false;
  bool symmetric = false;
  bool canonical_claimed = false;
  /// Member of the F_B family: vanishes on distinct positive arguments whose color lies
  /// outside B. The term engine's crucial case relies on this flag.
  bool cross_vanishing = false;
};

/// A computable operation on the naturals.
class SymbolicFn {
 public:
  using Evaluator = std::function<Nat(std::span<const Nat>)>;

  SymbolicFn(std::string name, unsigned arity, Evaluator evaluator);

  static SymbolicFn unary(std::string name, std::function<Nat(Nat)> f);
  static SymbolicFn binary(std::string name, std::function<Nat(Nat, Nat)> f);

  const std::string& name() const { return name_; }
  unsigned arity() const { return arity_; }

  Nat operator()(std::span<const Nat> args) const;
  Nat operator()(std::initializer_list<Nat> args) const;
  Nat operator()(Nat x) const;
  Nat operator()(Nat x, Nat y) const;

  const std::optional<AlmostUnaryWitness>& witness() const { return witness_; }
  SymbolicFn& with_witness(AlmostUnaryWitness w);
  const Annotations& annotations() const { return annotations_; }
  SymbolicFn& with_annotations(Annotations a);
  SymbolicFn& renamed(std::string name);

 private:
  std::string name_;
  unsigned arity_;
  Evaluator evaluator_;
  std::optional<AlmostUnaryWitness> witness_;
  Annotations annotations_;
};

enum class Region { full, delta, nabla, offdiag };

std::string to_string(Region r);

/// The window [lo, hi) with a region of the square: Δ = {(α, β) : α > β}, ∇ = {α < β},
/// offdiag = α ≠ β.
struct Box {
  Nat lo = 0;
  Nat hi = 0;
  Region region = Region::full;

  Box() = default;
  Box(Nat lo, Nat hi, Region region = Region::full);

  Nat width() const { return hi - lo; }
  bool admits(Nat x, Nat y) const;
  /// Calls visit(x, y) for every admitted pair, x outer and y inner, ascending.
  template <typename Visit>
  void for_each_pair(Visit visit) const {
    for (Nat x = lo; x < hi; ++x) {
      for (Nat y = lo; y < hi; ++y) {
        if (admits(x, y)) visit(x, y);
      }
    }
  }
  std::string to_string() const;
};

/// Parses `lo..hi:(delta|nabla|offdiag|full)`; the region suffix is optional.
Box parse_box(const std::string& text);

}  // namespace clonelab::symbolic
