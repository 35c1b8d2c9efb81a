#include "clonelab/finite/op_table.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace clonelab::finite {

namespace {
std::atomic<bool> g_compose_swap{false};
}

namespace testing {
void set_compose_argument_swap(bool enabled) { g_compose_swap = enabled; }
bool compose_argument_swap() { return g_compose_swap; }
}  // namespace testing

Carrier::Carrier(unsigned size) : size_(size) {
  if (size < 2 || size > 255) throw InvalidArgument("carrier size must lie in [2, 255]");
}

std::size_t tuple_count(unsigned k, unsigned n) {
  std::size_t count = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (count > (std::size_t{1} << 32) / k) throw ResourceLimit("tuple space k^n exceeds 2^32");
    count *= k;
  }
  return count;
}

std::vector<Element> tuple_at(std::size_t index, unsigned k, unsigned n) {
  std::vector<Element> digits(n);
  for (unsigned i = n; i-- > 0;) {
    digits[i] = static_cast<Element>(index % k);
    index /= k;
  }
  return digits;
}

std::size_t tuple_index(std::span<const Element> tuple, unsigned k) {
  std::size_t index = 0;
  for (Element e : tuple) index = index * k + e;
  return index;
}

OpTable::OpTable(Carrier carrier, unsigned arity, std::vector<Element> table)
    : carrier_(carrier), arity_(arity), table_(std::move(table)) {
  if (arity_ < 1) throw InvalidArgument("operation arity must be >= 1");
  if (table_.size() != tuple_count(carrier_.size(), arity_)) {
    throw InvalidArgument("table length must equal k^n");
  }
  for (Element e : table_) {
    if (!carrier_.contains(e)) throw InvalidArgument("table entry outside the carrier");
  }
}

OpTable OpTable::from_function(Carrier carrier, unsigned arity,
                               const std::function<unsigned(std::span<const Element>)>& f) {
  const unsigned k = carrier.size();
  const std::size_t count = tuple_count(k, arity);
  std::vector<Element> table(count);
  std::vector<Element> tuple(arity, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned v = f(tuple);
    if (v >= k) throw InvalidArgument("function value outside the carrier");
    table[i] = static_cast<Element>(v);
    for (unsigned p = arity; p-- > 0;) {
      if (++tuple[p] < k) break;
      tuple[p] = 0;
    }
  }
  return OpTable(carrier, arity, std::move(table));
}

OpTable OpTable::constant(Carrier carrier, unsigned arity, Element value) {
  return OpTable(carrier, arity, std::vector<Element>(tuple_count(carrier.size(), arity), value));
}

Element OpTable::operator()(std::span<const Element> args) const {
  if (args.size() != arity_) throw InvalidArgument("argument count does not match arity");
  for (Element a : args) {
    if (!carrier_.contains(a)) throw InvalidArgument("argument outside the carrier");
  }
  return table_[tuple_index(args, carrier_.size())];
}

Element OpTable::operator()(std::initializer_list<Element> args) const {
  return (*this)(std::span<const Element>(args.begin(), args.size()));
}

bool OpTable::essentially_unary() const {
  const unsigned k = carrier_.size();
  unsigned relevant = 0;
  std::size_t stride = 1;
  for (unsigned p = arity_; p-- > 0;) {
    bool depends = false;
    for (std::size_t i = 0; i < table_.size() && !depends; ++i) {
      const std::size_t digit = (i / stride) % k;
      if (digit + 1 < k && table_[i] != table_[i + stride]) depends = true;
    }
    if (depends) ++relevant;
    stride *= k;
  }
  return relevant <= 1;
}

bool OpTable::surjective() const {
  std::vector<bool> hit(carrier_.size(), false);
  for (Element e : table_) hit[e] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string OpTable::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < table_.size(); ++i) os << (i ? "," : "") << unsigned(table_[i]);
  os << "]";
  return os.str();
}

OpTable make_projection(unsigned n, unsigned k, Carrier carrier) {
  if (k < 1 || k > n) throw InvalidArgument("projection coordinate out of range");
  return OpTable::from_function(carrier, n, [k](std::span<const Element> t) { return t[k - 1]; });
}

OpTable compose(const OpTable& g, std::span<const OpTable> fs) {
  if (fs.size() != g.arity()) throw InvalidArgument("compose: |fs| must equal the outer arity");
  if (fs.empty()) throw InvalidArgument("compose: empty inner list");
  const unsigned n = fs.front().arity();
  for (const auto& f : fs) {
    if (f.carrier() != g.carrier()) throw InvalidArgument("compose: carrier mismatch");
    if (f.arity() != n) throw InvalidArgument("compose: inner arities differ");
  }
  const unsigned k = g.carrier().size();
  const std::size_t count = fs.front().size();
  const bool swap = g_compose_swap.load();
  std::vector<Element> table(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      const auto& f = swap ? fs[fs.size() - 1 - j] : fs[j];
      index = index * k + f.at(i);
    }
    table[i] = g.at(index);
  }
  return OpTable(g.carrier(), n, std::move(table));
}

std::vector<OpTable> all_operations(Carrier carrier, unsigned arity, std::size_t limit) {
  const unsigned k = carrier.size();
  const std::size_t width = tuple_count(k, arity);
  std::size_t total = 1;
  for (std::size_t i = 0; i < width; ++i) {
    if (total > limit / k) throw ResourceLimit("operation space exceeds the enumeration limit");
    total *= k;
  }
  std::vector<OpTable> ops;
  ops.reserve(total);
  std::vector<Element> table(width, 0);
  for (std::size_t n = 0; n < total; ++n) {
    ops.emplace_back(carrier, arity, table);
    for (std::size_t p = width; p-- > 0;) {
      if (++table[p] < k) break;
      table[p] = 0;
    }
  }
  return ops;
}

}  // namespace clonelab::finite
