#pragma once

#include <memory>
#include <string>
#include <vector>

#include "clonelab/symbolic/registry.hpp"

namespace clonelab::terms {

using symbolic::SymbolicFn;

/// x | y | constant | (f, σ) | (F, σ1, σ2), immutable and cheap to copy.
class Term {
 public:
  enum class Kind { var_x, var_y, constant, unary, binary };

  static Term x();
  static Term y();
  static Term constant(Nat value);
  static Term unary(SymbolicFn f, Term arg);
  static Term binary(SymbolicFn f, Term left, Term right);

  Kind kind() const;
  Nat value() const;
  /// The function symbol of an application.
  const SymbolicFn& symbol() const;
  const std::vector<Term>& children() const;
  unsigned depth() const;
  std::size_t size() const;
  bool mentions_x() const;
  bool mentions_y() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Nat eval(const Term& t, Nat alpha, Nat beta);

/// s-expression form: x, y, <nat>, (u:<name> t), (b:<name> t t).
std::string to_string(const Term& t);
Term parse_term(const std::string& text, const symbolic::Registry& registry);
/// One term per nonblank line; `#` starts a comment.
std::vector<Term> parse_term_list(const std::string& text, const symbolic::Registry& registry);

/// Every cross-vanishing binary symbol occurring in t, by name.
std::vector<SymbolicFn> vanishing_symbols(const Term& t);

}  // namespace clonelab::terms
