#include "clonelab/symbolic/registry.hpp"

#include "clonelab/symbolic/constructions.hpp"

namespace clonelab::symbolic {

Registry Registry::standard() {
  Registry r;
  const SymbolicFn pr = std_pairing();
  r.add(SymbolicFn::unary("id", [](Nat x) { return x; }));
  r.add(SymbolicFn::unary("succ", [](Nat x) { return checked_add(x, 1); }));
  r.add(SymbolicFn::unary("half", [](Nat x) { return x / 2; }));
  r.add(SymbolicFn::unary("double", [](Nat x) { return checked_mul(x, 2); }));
  r.add(SymbolicFn::unary("zero", [](Nat) { return Nat{0}; }));
  r.add(pr);
  r.add(pr_delta(pr));
  r.add(max_fn());
  r.add(min_fn());
  r.add(med());
  r.add(h_standard());
  r.add(dr_boundary_h());
  r.add(projection_fn(2, 1).with_annotations({.canonical_claimed = true}));
  r.add(projection_fn(2, 2).with_annotations({.canonical_claimed = true}));
  return r;
}

void Registry::add(SymbolicFn fn) {
  const std::string name = fn.name();
  add(name, std::move(fn));
}

void Registry::add(const std::string& name, SymbolicFn fn) {
  table_.insert_or_assign(name, std::move(fn));
}

const SymbolicFn& Registry::lookup(const std::string& name) const {
  auto it = table_.find(name);
  if (it == table_.end()) throw RegistryError("unknown function '" + name + "'");
  return it->second;
}

const SymbolicFn& Registry::lookup(const std::string& name, unsigned arity) const {
  const SymbolicFn& fn = lookup(name);
  if (fn.arity() != arity) {
    throw RegistryError("function '" + name + "' has arity " + std::to_string(fn.arity()) +
                        ", expected " + std::to_string(arity));
  }
  return fn;
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, fn] : table_) out.push_back(name);
  return out;
}

}  // namespace clonelab::symbolic
