#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clonelab/combinatorics/coloring.hpp"
#include "clonelab/terms/subset.hpp"
#include "clonelab/terms/term.hpp"

namespace clonelab::terms {

struct UnaryMap {
  std::string text;
  std::function<Nat(Nat)> fn;
  Nat operator()(Nat v) const { return fn(v); }
  static UnaryMap identity();
};

enum class MapClass { injective, constant, neither };

struct Classification {
  MapClass kind = MapClass::neither;
  Nat value = 0;  // the constant value
  /// For `neither`: two members with equal images and one with a different image.
  std::vector<Nat> witness;
};

/// Sampled on the first `probe_budget` members of S. Throws Inconclusive when S does not
/// yield two members.
Classification classify_on(const UnaryMap& h, const SubsetSpec& s, std::size_t probe_budget);

enum class PartialKind { constant, unary_x, unary_y, undefined };

std::string to_string(PartialKind kind);

/// τ^S. `rule` names the case of the definition that produced it (see partial_eval).
struct PartialEvalResult {
  PartialKind kind = PartialKind::undefined;
  Nat constant = 0;
  UnaryMap map;
  std::string rule;
  /// Set when the crucial case (mixed x/y arguments under a vanishing symbol) was used
  /// somewhere below; such results only predict τ at agreement pairs.
  bool uses_crucial_case = false;
  std::string reason;
  std::vector<unsigned> path;
  /// The map that was neither 1-1 nor constant, for thinning.
  std::optional<UnaryMap> blocking;

  bool defined() const { return kind != PartialKind::undefined; }
  /// The value τ^S predicts at (α, β).
  Nat at(Nat alpha, Nat beta) const;
  std::string describe() const;
};

/// The partial evaluator. Cases, with σ^S written c (constant), (f,x) or (f,y):
///   1    x, y, c are their own τ^S
///   2    (f, σ), σ^S = c                      -> f(c)
///   3x   (f, σ), σ^S = (g,x)                  -> (f∘g, x) or constant, if 1-1 or constant on S
///   3y   as 3x with y
///   4    (F, σ1, σ2), both constant           -> F(c1, c2)
///   5x   (F, σ1, σ2), (f,x) and d             -> x ↦ F(f x, d), if 1-1 or constant
///   5x'  (F, σ1, σ2), d and (f,x)             -> x ↦ F(d, f x), if 1-1 or constant
///   5y, 5y'  as 5x, 5x' with y
///   6x   (F, σ1, σ2), (f1,x) and (f2,x)       -> x ↦ F(f1 x, f2 x), if 1-1 or constant
///   6y   as 6x with y
///   7    (F, σ1, σ2), (f1,x) and (f2,y)       -> 0, when F is cross-vanishing
///   7'   (F, σ1, σ2), (f1,y) and (f2,x)       -> 0, when F is cross-vanishing
/// A mixed application of a symbol that does not vanish across is undefined.
PartialEvalResult partial_eval(const Term& t, const SubsetSpec& s, std::size_t probe_budget);

struct SubtermResult {
  std::vector<unsigned> path;
  Term term;
  PartialEvalResult result;
};

/// τ^S for every subterm, children before parents.
std::vector<SubtermResult> partial_eval_all(const Term& t, const SubsetSpec& s, std::size_t probe_budget);

/// The 1-1 maps used by the defined subterms, identity included, deduplicated by text.
std::vector<UnaryMap> unary_family(const std::vector<SubtermResult>& results);

/// S' ⊆ S on which h is 1-1 (greedy: one member per image value) or constant (the most
/// frequent value among the first `probe_budget` members), whichever the sample favors.
SubsetSpec thin_by(const SubsetSpec& s, const UnaryMap& h, std::size_t probe_budget);

/// Thins S until every listed term has a defined τ^S. Throws Inconclusive when
/// `max_rounds` thinnings do not suffice or a term is undefined for a reason thinning
/// cannot cure.
SubsetSpec thin_for(const std::vector<Term>& terms, const SubsetSpec& s, std::size_t probe_budget,
                    std::size_t max_rounds = 32);

/// The three thinnings used against a term, in this order: the images {f(α) : f ∈ F} pairwise
/// disjoint across members; f(α) ≠ pr(α, β) ≠ f(β) for distinct members; f(α) ∉ S unless
/// f(α) = α, and no listed constant equals pr(α, β).
SubsetSpec main_lemma_thinning(const SubsetSpec& s, const std::vector<UnaryMap>& family,
                               const std::vector<Nat>& constants, const SymbolicFn& pr);

struct Agreement {
  Nat alpha = 0;
  Nat beta = 0;
  Nat term_value = 0;
  Nat predicted = 0;
};

/// First α < β among the first `search_bound` members of S (α outer) with c(α, β) = c0,
/// every vanishing symbol of t zero on every cross pair (f α, g β) and (g β, f α) with
/// f(α) ≠ g(β), and eval(t, α, β) = τ^S(α, β). Requires τ^S to be defined.
std::optional<Agreement> find_agreement(const Term& t, const SubsetSpec& s,
                                        const combinatorics::Coloring& c, unsigned c0,
                                        std::size_t search_bound, std::size_t probe_budget = 64);

/// Re-checks both conjuncts for a reported pair.
bool verify_agreement(const Term& t, const PartialEvalResult& r, const Agreement& a,
                      const combinatorics::Coloring& c, unsigned c0);

}  // namespace clonelab::terms
