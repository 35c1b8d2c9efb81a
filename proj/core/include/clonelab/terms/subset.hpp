#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clonelab/common.hpp"

namespace clonelab::terms {

/// A subset of the naturals given by membership and increasing enumeration. Thinned sets
/// are built by greedy selection over a parent, so they stay infinite as long as the
/// selection rule keeps accepting.
class SubsetSpec {
 public:
  using Accept = std::function<bool(const std::vector<Nat>& kept, Nat candidate)>;

  static SubsetSpec naturals(Nat from = 0);
  static SubsetSpec arithmetic(Nat start, Nat step);
  static SubsetSpec filter(const SubsetSpec& parent, std::string name, std::function<bool(Nat)> keep);
  /// Walks the parent in increasing order and keeps a candidate when accept(kept, candidate).
  static SubsetSpec greedy(const SubsetSpec& parent, std::string name, Accept accept);

  const std::string& name() const;
  bool contains(Nat v) const;
  /// Smallest member >= v; nullopt when the scan limit runs out first.
  std::optional<Nat> next(Nat v) const;
  /// The n smallest members. Throws Inconclusive when the scan limit runs out.
  std::vector<Nat> first(std::size_t n) const;

  struct State;

 private:
  explicit SubsetSpec(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

}  // namespace clonelab::terms
