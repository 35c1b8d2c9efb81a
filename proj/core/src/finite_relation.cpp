#include "clonelab/finite/relation.hpp"

#include <algorithm>

namespace clonelab::finite {

RelationTable::RelationTable(Carrier carrier, unsigned width,
                             std::vector<std::vector<Element>> tuples)
    : carrier_(carrier), width_(width), tuples_(std::move(tuples)) {
  if (width_ < 1) throw InvalidArgument("relation width must be >= 1");
  for (const auto& t : tuples_) {
    if (t.size() != width_) throw InvalidArgument("relation tuple has the wrong length");
    for (Element e : t) {
      if (!carrier_.contains(e)) throw InvalidArgument("relation entry outside the carrier");
    }
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

RelationTable RelationTable::full(Carrier carrier, unsigned width) {
  const std::size_t count = tuple_count(carrier.size(), width);
  std::vector<std::vector<Element>> tuples;
  tuples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) tuples.push_back(tuple_at(i, carrier.size(), width));
  return RelationTable(carrier, width, std::move(tuples));
}

RelationTable RelationTable::unary(Carrier carrier, std::span<const Element> subset) {
  std::vector<std::vector<Element>> tuples;
  for (Element e : subset) tuples.push_back({e});
  return RelationTable(carrier, 1, std::move(tuples));
}

RelationTable RelationTable::from_slice(Carrier carrier, unsigned arity,
                                        std::span<const OpTable> ops) {
  std::vector<std::vector<Element>> tuples;
  for (const auto& op : ops) {
    if (op.carrier() != carrier || op.arity() != arity) {
      throw InvalidArgument("slice relation needs operations of one arity and carrier");
    }
    tuples.push_back(op.table());
  }
  return RelationTable(carrier, static_cast<unsigned>(tuple_count(carrier.size(), arity)),
                       std::move(tuples));
}

bool RelationTable::contains(std::span<const Element> tuple) const {
  return std::binary_search(tuples_.begin(), tuples_.end(), tuple,
                            [](const auto& a, const auto& b) {
                              return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                                  b.end());
                            });
}

bool respects(const OpTable& f, const RelationTable& r) {
  if (f.carrier() != r.carrier()) throw InvalidArgument("respects: carrier mismatch");
  const auto& rows = r.tuples();
  if (rows.empty()) return true;
  const unsigned n = f.arity();
  const unsigned k = f.carrier().size();
  std::vector<std::size_t> pick(n, 0);
  std::vector<Element> image(r.width());
  while (true) {
    for (unsigned i = 0; i < r.width(); ++i) {
      std::size_t index = 0;
      for (unsigned j = 0; j < n; ++j) index = index * k + rows[pick[j]][i];
      image[i] = f.at(index);
    }
    if (!r.contains(image)) return false;
    unsigned p = n;
    while (p-- > 0) {
      if (++pick[p] < rows.size()) break;
      pick[p] = 0;
    }
    if (p == static_cast<unsigned>(-1)) return true;
  }
}

OpSet pol(const RelationTable& r, unsigned arity_cap) {
  if (arity_cap < 1) throw InvalidArgument("pol: arity cap must be >= 1");
  OpSet out(r.carrier(), arity_cap);
  for (unsigned n = 1; n <= arity_cap; ++n) {
    for (auto& f : all_operations(r.carrier(), n)) {
      if (respects(f, r)) out.insert(std::move(f));
    }
  }
  return out;
}

}  // namespace clonelab::finite
