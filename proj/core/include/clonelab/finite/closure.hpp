#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "clonelab/finite/op_table.hpp"

namespace clonelab::finite {

/// A deduplicated set of operations of arity <= arity_cap on one carrier, ordered by
/// (arity, table).
class OpSet {
 public:
  OpSet(Carrier carrier, unsigned arity_cap);
  OpSet(Carrier carrier, unsigned arity_cap, std::span<const OpTable> ops);

  Carrier carrier() const { return carrier_; }
  unsigned arity_cap() const { return arity_cap_; }

  /// Returns false when already present.
  bool insert(OpTable op);
  bool contains(const OpTable& op) const { return ops_.count(op) != 0; }

  std::size_t size() const { return ops_.size(); }
  std::size_t slice_size(unsigned arity) const;
  std::vector<OpTable> slice(unsigned arity) const;
  std::vector<OpTable> to_vector() const { return {ops_.begin(), ops_.end()}; }
  unsigned max_arity() const;

  /// Every member of `other` is a member of *this.
  bool includes(const OpSet& other) const;

  auto begin() const { return ops_.begin(); }
  auto end() const { return ops_.end(); }

  friend bool operator==(const OpSet& a, const OpSet& b) {
    return a.carrier_ == b.carrier_ && a.ops_ == b.ops_;
  }

 private:
  Carrier carrier_;
  unsigned arity_cap_;
  std::set<OpTable> ops_;
};

struct ClosureLimits {
  /// Maximum number of elements one arity slice may hold.
  std::size_t max_slice_elements = std::size_t{1} << 22;
  /// Stop as soon as a conjugate of max(x, y) + 1 mod k appears (the slice is then full).
  bool sheffer_shortcut = true;
};

/// The n-ary slice of a generated clone: the subpower of X^(k^n) generated by the n
/// projections under the generators. Every intermediate term of an n-ary term is itself
/// n-ary, so the slice is exact for any generator arity. Generators can be added
/// incrementally; closure work is semi-naive (each tuple of elements is visited once per
/// generator).
class SliceClosure {
 public:
  SliceClosure(Carrier carrier, unsigned arity, ClosureLimits limits = {});

  Carrier carrier() const { return carrier_; }
  unsigned arity() const { return arity_; }

  /// Adds a generator and closes. Returns false when it was already a generator.
  bool add_generator(const OpTable& op);

  bool contains(std::span<const Element> table) const;
  bool contains(const OpTable& op) const { return op.arity() == arity_ && contains(op.table()); }
  std::size_t size() const { return count_; }
  /// k^(k^n) when representable, else 0.
  std::size_t full_size() const { return full_size_; }
  bool full() const { return full_size_ != 0 && count_ == full_size_; }

  OpTable element(std::size_t i) const;
  std::vector<OpTable> elements() const;
  const std::vector<OpTable>& generators() const { return generators_; }

 private:
  std::uint64_t encode(std::span<const Element> digits) const;
  bool add_element(std::span<const Element> digits);
  bool add_encoded(std::uint64_t code, std::span<const Element> digits);
  void apply_all(const OpTable& g, std::size_t low, std::size_t high, bool require_new);
  void run();
  void fill_everything();
  const Element* row(std::size_t i) const { return elements_.data() + i * width_; }

  Carrier carrier_;
  unsigned arity_;
  ClosureLimits limits_;
  std::size_t width_;
  std::size_t full_size_ = 0;
  std::size_t count_ = 0;
  std::size_t processed_ = 0;
  std::vector<Element> elements_;
  std::vector<std::uint64_t> weights_;
  std::vector<bool> dense_;
  std::unordered_set<std::uint64_t> sparse_;
  bool use_dense_ = false;
  std::vector<std::uint64_t> sheffer_codes_;
  std::vector<OpTable> generators_;
  std::set<OpTable> generator_set_;
};

/// Slices 1..cap of a generated clone together with an irredundant generating list.
class CloneSlices {
 public:
  CloneSlices(Carrier carrier, unsigned arity_cap, ClosureLimits limits = {});

  Carrier carrier() const { return carrier_; }
  unsigned arity_cap() const { return static_cast<unsigned>(slices_.size()); }

  /// Adds `op` as a generator unless it is already in the closure. Returns true if added.
  bool absorb(const OpTable& op);
  bool contains(const OpTable& op) const;
  const SliceClosure& slice(unsigned arity) const { return slices_.at(arity - 1); }
  const std::vector<OpTable>& basis() const { return basis_; }

  OpSet to_opset() const;

 private:
  Carrier carrier_;
  std::vector<SliceClosure> slices_;
  std::vector<OpTable> basis_;
};

/// Least set of operations of arity <= cap containing the generators and all projections
/// (and all unary operations when requested) closed under composition.
OpSet clone_closure(const OpSet& gens, unsigned arity_cap, bool include_all_unary,
                    ClosureLimits limits = {});

/// Closes over explicit generators; the returned slices keep a reduced basis.
CloneSlices close_generators(Carrier carrier, std::span<const OpTable> gens, unsigned arity_cap,
                             bool include_all_unary, ClosureLimits limits = {});

/// Size of the given slice of cl(base ∪ {extra}); `base` is reused without recomputation.
std::size_t extended_slice_size(const CloneSlices& base, const OpTable& extra, unsigned arity);

enum class PrecompleteKind { precomplete_evidence, not_maximal, improper };

struct PrecompleteVerdict {
  PrecompleteKind kind;
  std::optional<OpTable> witness;  // set for not_maximal
  unsigned arity_cap = 0;
  unsigned working_cap = 0;
  std::size_t candidates_checked = 0;

  std::string kind_name() const;
};

/// Bounded maximality test: every operation of arity <= arity_cap outside cl(gens) must,
/// together with gens, regenerate every operation of arity <= arity_cap.
PrecompleteVerdict is_precomplete_bounded(const OpSet& gens, unsigned arity_cap,
                                          unsigned working_cap, ClosureLimits limits = {});

/// Checks a single candidate against an already closed base.
bool regenerates_all(const CloneSlices& base, const OpTable& f, unsigned arity);

}  // namespace clonelab::finite
