#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clonelab/finite/op_table.hpp"

namespace clonelab::finite {

/// The maximal ideal {A ⊆ X : a ∉ A} on a finite carrier.
class PrincipalIdeal {
 public:
  PrincipalIdeal(Carrier carrier, Element excluded_point);

  Carrier carrier() const { return carrier_; }
  Element excluded_point() const { return excluded_; }
  /// X \ {a}, the largest member of the ideal.
  std::vector<Element> largest_small_set() const;
  bool contains(std::span<const Element> subset) const;

 private:
  Carrier carrier_;
  Element excluded_;
};

/// f ∈ C_I, decided through the largest small set: f[(X∖{a})^n] avoids a.
bool ci_membership(const OpTable& f, const PrincipalIdeal& ideal);

/// The same predicate straight from the definition, ranging over every small set A.
bool ci_membership_by_definition(const OpTable& f, const PrincipalIdeal& ideal);

/// Every operation of arity <= arity_cap in C_I.
std::vector<OpTable> ci_operations(const PrincipalIdeal& ideal, unsigned arity_cap);

enum class DecompositionMode {
  /// Selector values, fillers and the two constants are the two smallest elements of
  /// B_0 (the excluded point ordered last). Needs |B_0| >= 2.
  standard,
  /// Selector values are chosen in X so that χ stays in C_I, the g0 filler is taken from
  /// B_0 and the g1 filler avoids the excluded point. Works whenever f ∉ C_I.
  adapted,
};

std::string to_string(DecompositionMode mode);

/// Ingredients of g = H(χ, g0, g1) with g0 = f ∘ g0'.
struct DecompositionCertificate {
  DecompositionMode mode;
  Element excluded_point;
  std::vector<Element> witness_set;  // A
  std::vector<Element> b0;           // f[A^k]
  Element selector0;                 // value of χ on C_0
  Element selector1;                 // value of χ on C_1
  Element filler0;                   // value of g0 on C_1
  Element filler1;                   // value of g1 on C_0
  OpTable h;
  OpTable chi;
  OpTable g0;
  OpTable g1;
  /// f*(b) for every carrier element b (right inverse of f on B_0).
  std::vector<std::vector<Element>> f_star;
  /// Component operations of g0'.
  std::vector<OpTable> g0_prime;

  bool h_conservative = false;
  bool chi_two_valued = false;
  bool chi_in_ci = false;
  bool g1_in_ci = false;
  bool g0_prime_in_ci = false;
  bool f_star_right_inverse = false;
  bool g0_factorization = false;
  bool identity = false;

  /// All checks that the construction needs for membership in cl(C_I ∪ {f}).
  bool valid() const;
};

/// Builds and verifies the certificate. Throws InvalidArgument when f ∈ C_I and
/// DegenerateWitness in standard mode when |B_0| < 2.
DecompositionCertificate decompose_via_witness(const OpTable& g, const OpTable& f,
                                               const PrincipalIdeal& ideal,
                                               DecompositionMode mode = DecompositionMode::standard);

/// Checks I = {A ⊆ X : every unary f with ran(f) ⊆ A lies in C_I} by exhaustion.
bool reconstruct_ideal(const PrincipalIdeal& ideal);

}  // namespace clonelab::finite
