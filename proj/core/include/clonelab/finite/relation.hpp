#pragma once

#include <span>
#include <vector>

#include "clonelab/finite/closure.hpp"

namespace clonelab::finite {

/// A relation R ⊆ X^m stored as a sorted, deduplicated list of m-tuples.
class RelationTable {
 public:
  RelationTable(Carrier carrier, unsigned width, std::vector<std::vector<Element>> tuples);

  /// All m-tuples over the carrier.
  static RelationTable full(Carrier carrier, unsigned width);
  /// The unary relation given by a subset of the carrier.
  static RelationTable unary(Carrier carrier, std::span<const Element> subset);
  /// Width k^n relation whose tuples are the value tables of the given n-ary operations.
  static RelationTable from_slice(Carrier carrier, unsigned arity, std::span<const OpTable> ops);

  Carrier carrier() const { return carrier_; }
  unsigned width() const { return width_; }
  const std::vector<std::vector<Element>>& tuples() const { return tuples_; }
  bool contains(std::span<const Element> tuple) const;

  friend bool operator==(const RelationTable&, const RelationTable&) = default;

 private:
  Carrier carrier_;
  unsigned width_;
  std::vector<std::vector<Element>> tuples_;
};

/// f respects R: applying f coordinatewise to any n tuples of R yields a tuple of R.
bool respects(const OpTable& f, const RelationTable& r);

/// Every operation of arity <= arity_cap respecting R.
OpSet pol(const RelationTable& r, unsigned arity_cap);

}  // namespace clonelab::finite
