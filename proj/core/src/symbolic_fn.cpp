#include "clonelab/symbolic/symbolic_fn.hpp"

#include <algorithm>
#include <charconv>

namespace clonelab::symbolic {

AlmostUnaryWitness AlmostUnaryWitness::from_set(unsigned coordinate, SetMap set,
                                                std::string description) {
  AlmostUnaryWitness w;
  w.coordinate_ = coordinate;
  w.set_ = std::move(set);
  w.description_ = std::move(description);
  return w;
}

AlmostUnaryWitness AlmostUnaryWitness::from_bound(unsigned coordinate, BoundMap bound,
                                                  std::string description) {
  AlmostUnaryWitness w;
  w.coordinate_ = coordinate;
  w.bound_ = std::move(bound);
  w.description_ = std::move(description);
  return w;
}

bool AlmostUnaryWitness::contains(Nat x, Nat value) const {
  if (bound_) return value <= bound_(x);
  const auto s = set_(x);
  return std::find(s.begin(), s.end(), value) != s.end();
}

Nat AlmostUnaryWitness::bound(Nat x) const {
  if (bound_) return bound_(x);
  const auto s = set_(x);
  return s.empty() ? 0 : *std::max_element(s.begin(), s.end());
}

SymbolicFn::SymbolicFn(std::string name, unsigned arity, Evaluator evaluator)
    : name_(std::move(name)), arity_(arity), evaluator_(std::move(evaluator)) {
  if (arity_ < 1) throw InvalidArgument("symbolic function arity must be >= 1");
}

SymbolicFn SymbolicFn::unary(std::string name, std::function<Nat(Nat)> f) {
  return SymbolicFn(std::move(name), 1, [f = std::move(f)](std::span<const Nat> a) { return f(a[0]); });
}

SymbolicFn SymbolicFn::binary(std::string name, std::function<Nat(Nat, Nat)> f) {
  return SymbolicFn(std::move(name), 2,
                    [f = std::move(f)](std::span<const Nat> a) { return f(a[0], a[1]); });
}

Nat SymbolicFn::operator()(std::span<const Nat> args) const {
  if (args.size() != arity_) {
    throw InvalidArgument(name_ + ": expected " + std::to_string(arity_) + " arguments");
  }
  return evaluator_(args);
}

Nat SymbolicFn::operator()(std::initializer_list<Nat> args) const {
  return (*this)(std::span<const Nat>(args.begin(), args.size()));
}

Nat SymbolicFn::operator()(Nat x) const {
  const Nat a[1] = {x};
  return (*this)(std::span<const Nat>(a, 1));
}

Nat SymbolicFn::operator()(Nat x, Nat y) const {
  const Nat a[2] = {x, y};
  return (*this)(std::span<const Nat>(a, 2));
}

SymbolicFn& SymbolicFn::with_witness(AlmostUnaryWitness w) {
  if (w.coordinate() < 1 || w.coordinate() > arity_) {
    throw InvalidArgument("witness coordinate out of range");
  }
  witness_ = std::move(w);
  return *this;
}

SymbolicFn& SymbolicFn::with_annotations(Annotations a) {
  annotations_ = a;
  return *this;
}

SymbolicFn& SymbolicFn::renamed(std::string name) {
  name_ = std::move(name);
  return *this;
}

std::string to_string(Region r) {
  switch (r) {
    case Region::full:
      return "full";
    case Region::delta:
      return "delta";
    case Region::nabla:
      return "nabla";
    case Region::offdiag:
      return "offdiag";
  }
  return "full";
}

Box::Box(Nat lo_, Nat hi_, Region region_) : lo(lo_), hi(hi_), region(region_) {
  if (hi < lo) throw InvalidArgument("box needs lo <= hi");
}

bool Box::admits(Nat x, Nat y) const {
  if (x < lo || x >= hi || y < lo || y >= hi) return false;
  switch (region) {
    case Region::full:
      return true;
    case Region::delta:
      return x > y;
    case Region::nabla:
      return x < y;
    case Region::offdiag:
      return x != y;
  }
  return false;
}

std::string Box::to_string() const {
  return std::to_string(lo) + ".." + std::to_string(hi) + ":" + symbolic::to_string(region);
}

Box parse_box(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("box must look like lo..hi[:region]");
  const auto colon = text.find(':', dots);
  const std::string lo_text = text.substr(0, dots);
  const std::string hi_text =
      text.substr(dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2);
  auto number = [&](const std::string& s) {
    Nat v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw ParseError("bad box bound '" + s + "'");
    }
    return v;
  };
  Region region = Region::full;
  if (colon != std::string::npos) {
    const std::string r = text.substr(colon + 1);
    if (r == "delta") {
      region = Region::delta;
    } else if (r == "nabla") {
      region = Region::nabla;
    } else if (r == "offdiag") {
      region = Region::offdiag;
    } else if (r == "full") {
      region = Region::full;
    } else {
      throw ParseError("unknown box region '" + r + "'");
    }
  }
  const Nat lo = number(lo_text);
  const Nat hi = number(hi_text);
  if (hi < lo) throw ParseError("box needs lo <= hi");
  return Box(lo, hi, region);
}

}  // namespace clonelab::symbolic
