#include "clonelab/combinatorics/coloring.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace clonelab::combinatorics {

ColorSet::ColorSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : bits_(universe, false) {
  for (auto m : members) insert(m);
}

ColorSet ColorSet::full(std::size_t universe) {
  ColorSet s(universe);
  s.bits_.assign(universe, true);
  return s;
}

void ColorSet::insert(std::size_t e) {
  if (e >= bits_.size()) throw InvalidArgument("element outside the universe");
  bits_[e] = true;
}

std::size_t ColorSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::size_t> ColorSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

ColorSet ColorSet::complement() const {
  ColorSet s(*this);
  s.bits_.flip();
  return s;
}

ColorSet ColorSet::operator|(const ColorSet& other) const {
  if (other.universe() != universe()) throw InvalidArgument("universe mismatch");
  ColorSet s(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = bits_[i] || other.bits_[i];
  return s;
}

ColorSet ColorSet::operator&(const ColorSet& other) const {
  if (other.universe() != universe()) throw InvalidArgument("universe mismatch");
  ColorSet s(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = bits_[i] && other.bits_[i];
  return s;
}

bool ColorSet::subset_of(const ColorSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.contains(i)) return false;
  }
  return true;
}

std::string ColorSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto m : members()) {
    os << (first ? "" : ",") << m;
    first = false;
  }
  os << "}";
  return os.str();
}

Coloring::Coloring(std::string name, unsigned mu, Fn fn)
    : name_(std::move(name)), mu_(mu), fn_(std::move(fn)) {
  if (mu_ < 1) throw InvalidArgument("a coloring needs at least one color");
}

Coloring Coloring::constant(unsigned mu, unsigned value) {
  if (value >= mu) throw InvalidArgument("constant color must be below mu");
  return Coloring("constant", mu, [value](Nat, Nat) { return value; });
}

Coloring Coloring::sum_mod(unsigned mu) {
  return Coloring("sum-mod", mu, [mu](Nat a, Nat b) { return unsigned((a % mu + b % mu) % mu); });
}

Coloring Coloring::product_mod(unsigned mu) {
  return Coloring("product-mod", mu,
                  [mu](Nat a, Nat b) { return unsigned((a % mu) * (b % mu) % mu); });
}

Coloring Coloring::bit_interleave(unsigned mu) {
  return Coloring("bit-interleave", mu, [mu](Nat a, Nat b) {
    Nat lo = std::min(a, b);
    Nat hi = std::max(a, b);
    Nat mixed = 0;
    for (unsigned bit = 0; bit < 32; ++bit) {
      mixed |= ((hi >> bit) & 1u) << (2 * bit + 1);
      mixed |= ((lo >> bit) & 1u) << (2 * bit);
    }
    return unsigned(mixed % mu);
  });
}

Coloring Coloring::table(unsigned mu, std::vector<std::vector<unsigned>> rows) {
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw InvalidArgument("coloring table must be square");
  }
  const Nat n = rows.size();
  Coloring c("table", mu, [rows = std::move(rows)](Nat a, Nat b) {
    if (a >= rows.size() || b >= rows.size()) {
      throw InvalidArgument("pair outside the coloring table");
    }
    return rows[a][b];
  });
  c.domain_ = n;
  return c;
}

Coloring Coloring::builtin(const std::string& name, unsigned mu, unsigned constant_value) {
  if (name == "constant") return constant(mu, constant_value);
  if (name == "sum-mod") return sum_mod(mu);
  if (name == "product-mod") return product_mod(mu);
  if (name == "bit-interleave") return bit_interleave(mu);
  throw InvalidArgument("unknown coloring '" + name + "'");
}

unsigned Coloring::operator()(Nat a, Nat b) const {
  const unsigned v = fn_(a, b);
  if (v >= mu_) throw InvalidColoring("coloring " + name_ + " produced a value >= mu");
  return v;
}

unsigned Coloring::checked(Nat a, Nat b) const {
  const unsigned v = (*this)(a, b);
  if ((*this)(b, a) != v) {
    throw InvalidColoring("coloring " + name_ + " is not symmetric at (" + std::to_string(a) +
                          "," + std::to_string(b) + ")");
  }
  return v;
}

void audit_symmetry(const Coloring& c, std::uint64_t seed, std::size_t samples, Nat bound) {
  std::mt19937_64 rng(seed);
  if (c.domain()) bound = std::min(bound, *c.domain());
  if (bound == 0) return;
  std::uniform_int_distribution<Nat> pick(0, bound - 1);
  for (std::size_t i = 0; i < samples; ++i) c.checked(pick(rng), pick(rng));
}

}  // namespace clonelab::combinatorics
