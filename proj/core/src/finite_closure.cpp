#include "clonelab/finite/closure.hpp"

#include <algorithm>

namespace clonelab::finite {

// ---------------------------------------------------------------- OpSet

OpSet::OpSet(Carrier carrier, unsigned arity_cap) : carrier_(carrier), arity_cap_(arity_cap) {}

OpSet::OpSet(Carrier carrier, unsigned arity_cap, std::span<const OpTable> ops)
    : OpSet(carrier, arity_cap) {
  for (const auto& op : ops) insert(op);
}

bool OpSet::insert(OpTable op) {
  if (op.carrier() != carrier_) throw InvalidArgument("OpSet: carrier mismatch");
  if (op.arity() > arity_cap_) throw InvalidArgument("OpSet: operation arity exceeds the cap");
  return ops_.insert(std::move(op)).second;
}

std::size_t OpSet::slice_size(unsigned arity) const {
  return static_cast<std::size_t>(std::count_if(
      ops_.begin(), ops_.end(), [arity](const OpTable& op) { return op.arity() == arity; }));
}

std::vector<OpTable> OpSet::slice(unsigned arity) const {
  std::vector<OpTable> out;
  for (const auto& op : ops_) {
    if (op.arity() == arity) out.push_back(op);
  }
  return out;
}

unsigned OpSet::max_arity() const { return ops_.empty() ? 0 : ops_.rbegin()->arity(); }

bool OpSet::includes(const OpSet& other) const {
  return std::includes(ops_.begin(), ops_.end(), other.ops_.begin(), other.ops_.end());
}

// ---------------------------------------------------------------- SliceClosure

namespace {
constexpr std::size_t kDenseLimit = std::size_t{1} << 26;
}

SliceClosure::SliceClosure(Carrier carrier, unsigned arity, ClosureLimits limits)
    : carrier_(carrier), arity_(arity), limits_(limits) {
  if (arity < 1) throw InvalidArgument("slice arity must be >= 1");
  const unsigned k = carrier.size();
  width_ = tuple_count(k, arity);
  weights_.assign(width_, 0);
  std::uint64_t w = 1;
  bool overflow = false;
  for (std::size_t t = width_; t-- > 0;) {
    weights_[t] = w;
    if (t > 0 && __builtin_mul_overflow(w, std::uint64_t{k}, &w)) overflow = true;
  }
  if (overflow) throw ResourceLimit("slice encoding k^(k^n) exceeds 64 bits");
  std::uint64_t full = 0;
  if (!__builtin_mul_overflow(weights_[0], std::uint64_t{k}, &full)) full_size_ = full;
  use_dense_ = full_size_ != 0 && full_size_ <= kDenseLimit;
  if (use_dense_) dense_.assign(full_size_, false);

  if (limits.sheffer_shortcut && use_dense_ && arity >= 2 && k <= 5) {
    // Conjugates of max(x, y) + 1 mod k generate every operation, so reaching one means
    // the slice is everything.
    std::vector<unsigned> perm(k);
    for (unsigned i = 0; i < k; ++i) perm[i] = i;
    do {
      std::vector<unsigned> inv(k);
      for (unsigned i = 0; i < k; ++i) inv[perm[i]] = i;
      auto sheffer = OpTable::from_function(carrier, arity, [&](std::span<const Element> t) {
        const unsigned x = inv[t[0]];
        const unsigned y = inv[t[1]];
        return perm[(std::max(x, y) + 1) % k];
      });
      sheffer_codes_.push_back(encode(sheffer.table()));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  for (unsigned c = 1; c <= arity; ++c) add_element(make_projection(arity, c, carrier).table());
}

void SliceClosure::fill_everything() {
  const unsigned k = carrier_.size();
  std::vector<Element> digits(width_, 0);
  for (std::uint64_t code = 0; code < full_size_; ++code) {
    if (!dense_[code]) {
      dense_[code] = true;
      elements_.insert(elements_.end(), digits.begin(), digits.end());
      ++count_;
    }
    for (std::size_t p = width_; p-- > 0;) {
      if (++digits[p] < k) break;
      digits[p] = 0;
    }
  }
}

std::uint64_t SliceClosure::encode(std::span<const Element> digits) const {
  std::uint64_t code = 0;
  for (std::size_t t = 0; t < width_; ++t) code += weights_[t] * digits[t];
  return code;
}

bool SliceClosure::contains(std::span<const Element> table) const {
  if (table.size() != width_) return false;
  const auto code = encode(table);
  return use_dense_ ? bool(dense_[code]) : sparse_.count(code) != 0;
}

bool SliceClosure::add_element(std::span<const Element> digits) {
  return add_encoded(encode(digits), digits);
}

bool SliceClosure::add_encoded(std::uint64_t code, std::span<const Element> digits) {
  if (use_dense_) {
    if (dense_[code]) return false;
    dense_[code] = true;
  } else if (!sparse_.insert(code).second) {
    return false;
  }
  if (count_ >= limits_.max_slice_elements) {
    throw ResourceLimit("closure slice exceeds max_slice_elements");
  }
  elements_.insert(elements_.end(), digits.begin(), digits.end());
  ++count_;
  if (std::find(sheffer_codes_.begin(), sheffer_codes_.end(), code) != sheffer_codes_.end()) {
    if (full_size_ > limits_.max_slice_elements) {
      throw ResourceLimit("closure slice exceeds max_slice_elements");
    }
    fill_everything();
  }
  return true;
}

OpTable SliceClosure::element(std::size_t i) const {
  return OpTable(carrier_, arity_, std::vector<Element>(row(i), row(i) + width_));
}

std::vector<OpTable> SliceClosure::elements() const {
  std::vector<OpTable> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back(element(i));
  std::sort(out.begin(), out.end());
  return out;
}

// Applies g to every index tuple over [0, high) whose largest index is >= low (all tuples
// when low == 0 and require_new is false).
void SliceClosure::apply_all(const OpTable& g, std::size_t low, std::size_t high,
                             bool require_new) {
  const unsigned m = g.arity();
  const unsigned k = carrier_.size();
  const auto& table = g.table();
  std::vector<std::size_t> idx(m, 0);
  std::vector<Element> result(width_);

  auto emit = [&]() {
    for (std::size_t t = 0; t < width_; ++t) {
      std::size_t index = 0;
      for (unsigned j = 0; j < m; ++j) index = index * k + elements_[idx[j] * width_ + t];
      result[t] = table[index];
    }
    add_element(result);
  };

  if (m == 2 && require_new) {
    // Tuples (a, i) and (i, a) with a <= i; evaluation and encoding are fused.
    auto emit2 = [&](std::size_t a, std::size_t b) {
      const Element* ra = elements_.data() + a * width_;
      const Element* rb = elements_.data() + b * width_;
      std::uint64_t code = 0;
      for (std::size_t t = 0; t < width_; ++t) {
        const Element v = table[ra[t] * k + rb[t]];
        result[t] = v;
        code = code * k + v;
      }
      add_encoded(code, result);
    };
    for (std::size_t i = low; i < high; ++i) {
      for (std::size_t a = 0; a <= i; ++a) {
        emit2(a, i);
        if (full()) return;
        if (a != i) {
          emit2(i, a);
          if (full()) return;
        }
      }
    }
    return;
  }

  if (!require_new) {
    if (high == 0) return;
    while (true) {
      emit();
      if (full()) return;
      unsigned p = m;
      while (p-- > 0) {
        if (++idx[p] < high) break;
        idx[p] = 0;
      }
      if (p == static_cast<unsigned>(-1)) return;
    }
  }

  for (std::size_t i = low; i < high; ++i) {
    // first position holding i is `first`; earlier positions < i, later positions <= i.
    for (unsigned first = 0; first < m; ++first) {
      std::fill(idx.begin(), idx.end(), 0);
      idx[first] = i;
      if (first > 0 && i == 0) continue;
      while (true) {
        emit();
        if (full()) return;
        unsigned p = m;
        bool done = true;
        while (p-- > 0) {
          if (p == first) continue;
          const std::size_t bound = p < first ? i : i + 1;
          if (++idx[p] < bound) {
            done = false;
            break;
          }
          idx[p] = 0;
        }
        if (done) break;
      }
    }
  }
}

void SliceClosure::run() {
  while (processed_ < count_ && !full()) {
    const std::size_t i = processed_;
    for (const auto& g : generators_) {
      apply_all(g, i, i + 1, true);
      if (full()) break;
    }
    ++processed_;
  }
}

bool SliceClosure::add_generator(const OpTable& op) {
  if (op.carrier() != carrier_) throw InvalidArgument("generator carrier mismatch");
  if (!generator_set_.insert(op).second) return false;
  generators_.push_back(op);
  if (!full()) apply_all(op, 0, processed_, false);
  run();
  return true;
}

// ---------------------------------------------------------------- CloneSlices

CloneSlices::CloneSlices(Carrier carrier, unsigned arity_cap, ClosureLimits limits)
    : carrier_(carrier) {
  if (arity_cap < 1) throw InvalidArgument("arity cap must be >= 1");
  slices_.reserve(arity_cap);
  for (unsigned n = 1; n <= arity_cap; ++n) slices_.emplace_back(carrier, n, limits);
}

bool CloneSlices::contains(const OpTable& op) const {
  if (op.carrier() != carrier_ || op.arity() > arity_cap()) return false;
  return slices_[op.arity() - 1].contains(op);
}

bool CloneSlices::absorb(const OpTable& op) {
  if (op.carrier() != carrier_) throw InvalidArgument("generator carrier mismatch");
  if (op.arity() > arity_cap()) throw InvalidArgument("generator arity exceeds the cap");
  if (contains(op)) return false;
  for (auto& s : slices_) s.add_generator(op);
  basis_.push_back(op);
  return true;
}

OpSet CloneSlices::to_opset() const {
  OpSet out(carrier_, arity_cap());
  for (const auto& s : slices_) {
    for (std::size_t i = 0; i < s.size(); ++i) out.insert(s.element(i));
  }
  return out;
}

CloneSlices close_generators(Carrier carrier, std::span<const OpTable> gens, unsigned arity_cap,
                             bool include_all_unary, ClosureLimits limits) {
  std::vector<OpTable> ordered(gens.begin(), gens.end());
  for (const auto& g : ordered) {
    if (g.arity() > arity_cap) throw InvalidArgument("arity cap below a generator's arity");
  }
  CloneSlices slices(carrier, arity_cap, limits);
  if (include_all_unary) {
    for (const auto& u : all_operations(carrier, 1)) slices.absorb(u);
  }
  std::sort(ordered.begin(), ordered.end());
  for (const auto& g : ordered) slices.absorb(g);
  return slices;
}

OpSet clone_closure(const OpSet& gens, unsigned arity_cap, bool include_all_unary,
                    ClosureLimits limits) {
  if (arity_cap < gens.max_arity()) throw InvalidArgument("arity cap below a generator's arity");
  const auto ops = gens.to_vector();
  return close_generators(gens.carrier(), ops, arity_cap, include_all_unary, limits).to_opset();
}

std::size_t extended_slice_size(const CloneSlices& base, const OpTable& extra, unsigned arity) {
  SliceClosure slice = base.slice(arity);
  slice.add_generator(extra);
  return slice.size();
}

bool regenerates_all(const CloneSlices& base, const OpTable& f, unsigned arity) {
  SliceClosure slice = base.slice(arity);
  slice.add_generator(f);
  return slice.full();
}

std::string PrecompleteVerdict::kind_name() const {
  switch (kind) {
    case PrecompleteKind::precomplete_evidence:
      return "precomplete-evidence";
    case PrecompleteKind::not_maximal:
      return "not-maximal";
    case PrecompleteKind::improper:
      return "improper";
  }
  return "unknown";
}

PrecompleteVerdict is_precomplete_bounded(const OpSet& gens, unsigned arity_cap,
                                          unsigned working_cap, ClosureLimits limits) {
  if (working_cap < arity_cap + 1) throw InvalidArgument("working cap must be >= arity cap + 1");
  if (arity_cap < gens.max_arity()) throw InvalidArgument("arity cap below a generator's arity");
  const auto ops = gens.to_vector();
  const auto base = close_generators(gens.carrier(), ops, arity_cap, false, limits);

  PrecompleteVerdict verdict{PrecompleteKind::precomplete_evidence, std::nullopt, arity_cap,
                             working_cap, 0};
  if (base.slice(arity_cap).full()) {
    verdict.kind = PrecompleteKind::improper;
    return verdict;
  }
  for (unsigned m = 1; m <= arity_cap; ++m) {
    for (const auto& f : all_operations(gens.carrier(), m)) {
      if (base.contains(f)) continue;
      ++verdict.candidates_checked;
      if (!regenerates_all(base, f, arity_cap)) {
        verdict.kind = PrecompleteKind::not_maximal;
        verdict.witness = f;
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace clonelab::finite
