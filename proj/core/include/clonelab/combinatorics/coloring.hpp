#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clonelab/common.hpp"

namespace clonelab::combinatorics {

/// A subset of {0, ..., universe-1}.
class ColorSet {
 public:
  explicit ColorSet(std::size_t universe = 0) : bits_(universe, false) {}
  ColorSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static ColorSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  bool contains(std::size_t e) const { return e < bits_.size() && bits_[e]; }
  void insert(std::size_t e);
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> members() const;

  ColorSet complement() const;
  ColorSet operator|(const ColorSet& other) const;
  ColorSet operator&(const ColorSet& other) const;
  bool subset_of(const ColorSet& other) const;

  std::string to_string() const;

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  std::vector<bool> bits_;
};

/// A symmetric map on pairs of naturals with values below mu.
class Coloring {
 public:
  using Fn = std::function<unsigned(Nat, Nat)>;

  Coloring(std::string name, unsigned mu, Fn fn);

  static Coloring constant(unsigned mu, unsigned value);
  static Coloring sum_mod(unsigned mu);
  static Coloring product_mod(unsigned mu);
  /// Bits of min and max interleaved, reduced mod mu.
  static Coloring bit_interleave(unsigned mu);
  /// A finite table over {0..n-1}^2; pairs outside the table are rejected.
  static Coloring table(unsigned mu, std::vector<std::vector<unsigned>> rows);
  /// Builtins by name: constant, sum-mod, product-mod, bit-interleave.
  static Coloring builtin(const std::string& name, unsigned mu, unsigned constant_value = 0);

  const std::string& name() const { return name_; }
  unsigned mu() const { return mu_; }
  /// Set for table colorings: arguments must lie below this bound.
  std::optional<Nat> domain() const { return domain_; }

  /// Value with range check; throws InvalidColoring when the value is >= mu.
  unsigned operator()(Nat a, Nat b) const;
  /// Value after checking c(a, b) = c(b, a).
  unsigned checked(Nat a, Nat b) const;

 private:
  std::string name_;
  unsigned mu_;
  Fn fn_;
  std::optional<Nat> domain_;
};

/// Checks symmetry and range on `samples` pseudorandom pairs below `bound`; throws
/// InvalidColoring on the first failure.
void audit_symmetry(const Coloring& c, std::uint64_t seed, std::size_t samples = 2000,
                    Nat bound = 1 << 12);

}  // namespace clonelab::combinatorics
