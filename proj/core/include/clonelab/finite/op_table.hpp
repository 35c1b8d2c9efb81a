#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "clonelab/common.hpp"

namespace clonelab::finite {

using Element = std::uint8_t;

/// A finite carrier {0, ..., size-1} with size >= 2.
class Carrier {
 public:
  explicit Carrier(unsigned size);

  unsigned size() const { return size_; }
  bool contains(unsigned e) const { return e < size_; }

  friend bool operator==(Carrier, Carrier) = default;

 private:
  unsigned size_;
};

/// Number of n-tuples over a carrier of size k; throws ResourceLimit past 2^32.
std::size_t tuple_count(unsigned k, unsigned n);

/// Digits of the tuple with the given lexicographic index, leftmost most significant.
std::vector<Element> tuple_at(std::size_t index, unsigned k, unsigned n);

std::size_t tuple_index(std::span<const Element> tuple, unsigned k);

/// A total operation X^n -> X stored as its value table in lexicographic tuple order.
class OpTable {
 public:
  OpTable(Carrier carrier, unsigned arity, std::vector<Element> table);

  static OpTable from_function(Carrier carrier, unsigned arity,
                               const std::function<unsigned(std::span<const Element>)>& f);
  static OpTable constant(Carrier carrier, unsigned arity, Element value);

  Carrier carrier() const { return carrier_; }
  unsigned arity() const { return arity_; }
  const std::vector<Element>& table() const { return table_; }
  std::size_t size() const { return table_.size(); }

  Element at(std::size_t index) const { return table_[index]; }
  Element operator()(std::span<const Element> args) const;
  Element operator()(std::initializer_list<Element> args) const;

  /// True when the value depends on at most one argument.
  bool essentially_unary() const;
  bool surjective() const;

  std::string to_string() const;

  friend bool operator==(const OpTable& a, const OpTable& b) {
    return a.carrier_ == b.carrier_ && a.arity_ == b.arity_ && a.table_ == b.table_;
  }
  friend std::strong_ordering operator<=>(const OpTable& a, const OpTable& b) {
    if (auto c = a.carrier_.size() <=> b.carrier_.size(); c != 0) return c;
    if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
    return a.table_ <=> b.table_;
  }

 private:
  Carrier carrier_;
  unsigned arity_;
  std::vector<Element> table_;
};

/// pi^n_k with 1-based coordinate k.
OpTable make_projection(unsigned n, unsigned k, Carrier carrier);

/// (x_1..x_n) -> g(f_1(x), ..., f_m(x)).
OpTable compose(const OpTable& g, std::span<const OpTable> fs);

/// All operations of the given arity in table order; throws ResourceLimit above `limit`.
std::vector<OpTable> all_operations(Carrier carrier, unsigned arity, std::size_t limit = 1u << 22);

namespace testing {
/// Mutation hook used by the suite's self-check: compose() reverses its inner list when set.
void set_compose_argument_swap(bool enabled);
bool compose_argument_swap();
}  // namespace testing

}  // namespace clonelab::finite
