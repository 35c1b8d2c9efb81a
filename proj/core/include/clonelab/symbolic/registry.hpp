#pragma once

#include <map>
#include <string>
#include <vector>

#include "clonelab/symbolic/symbolic_fn.hpp"

namespace clonelab::symbolic {

/// Named functions addressable from term files and the command line.
class Registry {
 public:
  /// id, succ, half, double, zero, pr, pr_delta, max, min, med, h, h_dr and the binary
  /// projections pi2_1, pi2_2.
  static Registry standard();

  /// Replaces any earlier entry with the same name.
  void add(SymbolicFn fn);
  void add(const std::string& name, SymbolicFn fn);
  bool contains(const std::string& name) const { return table_.count(name) > 0; }
  /// Throws RegistryError for unknown names.
  const SymbolicFn& lookup(const std::string& name) const;
  /// Throws RegistryError when the arity does not match.
  const SymbolicFn& lookup(const std::string& name, unsigned arity) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, SymbolicFn> table_;
};

}  // namespace clonelab::symbolic
