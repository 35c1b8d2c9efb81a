#pragma once

#include <vector>

#include "clonelab/combinatorics/coloring.hpp"
#include "clonelab/combinatorics/independent.hpp"
#include "clonelab/symbolic/symbolic_fn.hpp"

namespace clonelab::symbolic {

using combinatorics::ColorSet;
using combinatorics::Coloring;

/// (x+y)(x+y+1)/2 + y with overflow checks.
Nat cantor(Nat x, Nat y);

/// pr(x, y) = 2·cantor(x, y) + 2: injective on all pairs, even values >= 2.
SymbolicFn std_pairing();

/// pr(x, y) for x > y, else 0. Carries the witness G(x) = pr[{x}×{0..x}] ∪ {0}.
SymbolicFn pr_delta(const SymbolicFn& pr);
SymbolicFn med();
SymbolicFn max_fn();
/// Carries the witness min(x, y) <= x.
SymbolicFn min_fn();
/// H(0, x) = x, H(x, 1) = x for x > 0, and 0 elsewhere.
SymbolicFn h_standard();
SymbolicFn constant_fn(unsigned arity, Nat value);
SymbolicFn projection_fn(unsigned arity, unsigned coordinate);

struct PairingBijection {
  SymbolicFn bijection;  // (x, y) -> g(pr(g1 x, g2 y))
  SymbolicFn g;          // rank of a value in the image of pr ∘ (g1 × g2)
  SymbolicFn g1;         // x -> 2x
  SymbolicFn g2;         // y -> 2y + 1
};

/// Builds the bijection. pr must be strictly increasing in each argument (used to count
/// ranks) and injective off the diagonal; both are checked on the verification box and a
/// failure raises ConstructionRefuted.
PairingBijection pairing_to_bijection(const SymbolicFn& pr, const Box& verification_box);

/// Smallest square side (doubling from 8 up to max_side) whose image under the bijection
/// covers [0, target), with each value hit exactly once in that square; 0 if none.
Nat bijection_coverage_side(const SymbolicFn& bijection, Nat target, Nat max_side);

/// max on the degenerate cases (a zero argument or equal arguments), pr when the color
/// lies in A, otherwise 0.
SymbolicFn f_A(const ColorSet& a, const Coloring& c, const SymbolicFn& pr);

/// pr'(α, β) = F_A(F_A(α, β), F_B(α, β)); requires A ∪ B to be every color.
SymbolicFn fact_many_pairing(const ColorSet& a, const ColorSet& b, const Coloring& c,
                             const SymbolicFn& pr);

/// The injections x -> 4x+1 and x -> 4x+3 of the Davies–Rosenberg construction.
Nat dr_p1(Nat x);
Nat dr_p2(Nat x);

/// H(u, v) = u if v = p2(0), v if u = p1(0), 0 elsewhere.
SymbolicFn dr_boundary_h();

/// (x, y) -> H(p1(pr_Δ(x, y)), p2(pr_Δ(y, x))). The boundary identities H(u, p2 0) = u and
/// H(p1 0, v) = v are checked for u ∈ p1[pr[Δ]], v ∈ p2[pr[Δ]] on the box; a violation
/// raises InvalidH.
SymbolicFn dr_pairing(const SymbolicFn& h, const SymbolicFn& pr, const Box& check_box);

/// (x, y) -> G(x, G(x, y)) with G = h ∘ F normalized so that G > max pointwise. F must be
/// symmetric and injective on Δ; both are checked on the box, and the composite is
/// checked injective off the diagonal. Failures raise ConstructionRefuted.
SymbolicFn hh_pairing_symmetric(const SymbolicFn& f, const Box& box);

/// (x, y) -> H(G(x, y), G(y, x) + 1) with G = h ∘ F sending F[Δ] to 0 and F[∇] to even
/// positive values. Requires F[Δ] ∩ F[∇] = ∅ and F injective on ∇ on the box.
SymbolicFn hh_pairing_asymmetric(const SymbolicFn& f, const SymbolicFn& h, const Box& box);

struct FamilyGenerator {
  std::size_t index;
  bool complemented;
  ColorSet set;
  SymbolicFn fn;
};

/// F_{A_i} for i ∈ J and F_{-A_i} for i ∉ J; the family's base is the color space.
std::vector<FamilyGenerator> clone_family_generators(
    const combinatorics::IndependentFamily& family, const std::vector<bool>& in_j,
    const Coloring& c, const SymbolicFn& pr);

/// (x̄) -> outer(inner_1(x̄), ..., inner_m(x̄)) for inner functions of one arity.
SymbolicFn compose(const SymbolicFn& outer, const std::vector<SymbolicFn>& inner);

/// med(g1, g2, g3) for witnessed binary almost unary g_i, with the witness built from the
/// two arguments that share a coordinate: med is at most the larger of those two.
SymbolicFn med_of_witnessed(const SymbolicFn& g1, const SymbolicFn& g2, const SymbolicFn& g3);

}  // namespace clonelab::symbolic
