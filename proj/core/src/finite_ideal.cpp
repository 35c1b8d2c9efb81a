#include "clonelab/finite/ideal.hpp"

#include <algorithm>
#include <set>

namespace clonelab::finite {

PrincipalIdeal::PrincipalIdeal(Carrier carrier, Element excluded_point)
    : carrier_(carrier), excluded_(excluded_point) {
  if (!carrier.contains(excluded_point)) throw InvalidArgument("excluded point outside the carrier");
}

std::vector<Element> PrincipalIdeal::largest_small_set() const {
  std::vector<Element> out;
  for (unsigned e = 0; e < carrier_.size(); ++e) {
    if (e != excluded_) out.push_back(static_cast<Element>(e));
  }
  return out;
}

bool PrincipalIdeal::contains(std::span<const Element> subset) const {
  return std::find(subset.begin(), subset.end(), excluded_) == subset.end();
}

namespace {

// Calls visit(index) for the table index of every n-tuple over `domain`.
template <typename Visit>
bool all_tuples_over(std::span<const Element> domain, unsigned n, unsigned k, Visit visit) {
  if (domain.empty()) return true;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::size_t index = 0;
    for (unsigned j = 0; j < n; ++j) index = index * k + domain[pick[j]];
    if (!visit(index)) return false;
    unsigned p = n;
    while (p-- > 0) {
      if (++pick[p] < domain.size()) break;
      pick[p] = 0;
    }
    if (p == static_cast<unsigned>(-1)) return true;
  }
}

void require_same_carrier(const OpTable& f, const PrincipalIdeal& ideal) {
  if (f.carrier() != ideal.carrier()) throw InvalidArgument("operation and ideal carriers differ");
}

}  // namespace

bool ci_membership(const OpTable& f, const PrincipalIdeal& ideal) {
  require_same_carrier(f, ideal);
  const auto small = ideal.largest_small_set();
  const Element a = ideal.excluded_point();
  return all_tuples_over(small, f.arity(), f.carrier().size(),
                         [&](std::size_t i) { return f.at(i) != a; });
}

bool ci_membership_by_definition(const OpTable& f, const PrincipalIdeal& ideal) {
  require_same_carrier(f, ideal);
  const unsigned k = f.carrier().size();
  if (k > 16) throw ResourceLimit("subset enumeration limited to carriers of size <= 16");
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<Element> subset;
    for (unsigned e = 0; e < k; ++e) {
      if (mask & (1u << e)) subset.push_back(static_cast<Element>(e));
    }
    if (!ideal.contains(subset)) continue;
    std::vector<Element> image;
    all_tuples_over(subset, f.arity(), k, [&](std::size_t i) {
      image.push_back(f.at(i));
      return true;
    });
    if (!ideal.contains(image)) return false;
  }
  return true;
}

std::vector<OpTable> ci_operations(const PrincipalIdeal& ideal, unsigned arity_cap) {
  std::vector<OpTable> out;
  for (unsigned n = 1; n <= arity_cap; ++n) {
    for (auto& f : all_operations(ideal.carrier(), n)) {
      if (ci_membership(f, ideal)) out.push_back(std::move(f));
    }
  }
  return out;
}

std::string to_string(DecompositionMode mode) {
  return mode == DecompositionMode::standard ? "standard" : "adapted";
}

bool DecompositionCertificate::valid() const {
  return h_conservative && chi_two_valued && chi_in_ci && g1_in_ci && g0_prime_in_ci &&
         f_star_right_inverse && g0_factorization && identity;
}

DecompositionCertificate decompose_via_witness(const OpTable& g, const OpTable& f,
                                               const PrincipalIdeal& ideal,
                                               DecompositionMode mode) {
  require_same_carrier(f, ideal);
  require_same_carrier(g, ideal);
  if (ci_membership(f, ideal)) throw InvalidArgument("the witness f already lies in C_I");

  const Carrier carrier = f.carrier();
  const unsigned k = carrier.size();
  const Element a = ideal.excluded_point();
  const auto witness = ideal.largest_small_set();

  // B_0 = f[A^k] with one preimage per value, the lexicographically first one.
  std::vector<std::vector<Element>> f_star(k);
  std::vector<bool> in_b0(k, false);
  all_tuples_over(witness, f.arity(), k, [&](std::size_t i) {
    const Element v = f.at(i);
    if (!in_b0[v]) {
      in_b0[v] = true;
      f_star[v] = tuple_at(i, k, f.arity());
    }
    return true;
  });
  std::vector<Element> b0;
  for (unsigned e = 0; e < k; ++e) {
    if (in_b0[e]) b0.push_back(static_cast<Element>(e));
  }
  const std::vector<Element> fallback(f.arity(), witness.front());
  for (unsigned e = 0; e < k; ++e) {
    if (!in_b0[e]) f_star[e] = fallback;
  }

  Element s0 = 0;
  Element s1 = 0;
  Element filler0 = 0;
  Element filler1 = 0;
  if (mode == DecompositionMode::standard) {
    std::vector<Element> ordered;
    for (Element e : b0) {
      if (e != a) ordered.push_back(e);
    }
    if (in_b0[a]) ordered.push_back(a);
    if (ordered.size() < 2) {
      throw DegenerateWitness("B_0 = f[A^k] has fewer than two elements");
    }
    s0 = filler0 = filler1 = ordered[0];
    s1 = ordered[1];
  } else {
    filler0 = b0.front();
    filler1 = witness.front();
    if (witness.size() >= 2) {
      s0 = witness[0];
      s1 = witness[1];
    } else {
      // Only one small tuple exists; its selector value must avoid a.
      const Element b = witness.front();
      const std::vector<Element> diagonal(g.arity(), b);
      const bool routed_to_g0 = in_b0[g(diagonal)];
      s0 = routed_to_g0 ? b : a;
      s1 = routed_to_g0 ? a : b;
    }
  }

  const std::size_t size = g.size();
  std::vector<Element> chi(size), g0(size), g1(size);
  for (std::size_t i = 0; i < size; ++i) {
    const Element v = g.at(i);
    const bool c0 = in_b0[v];
    chi[i] = c0 ? s0 : s1;
    g0[i] = c0 ? v : filler0;
    g1[i] = c0 ? filler1 : v;
  }
  const Element sel = s0;
  auto h = OpTable::from_function(carrier, 3, [sel](std::span<const Element> t) {
    return unsigned(t[0] == sel ? t[1] : t[2]);
  });

  DecompositionCertificate cert{mode,
                                a,
                                witness,
                                b0,
                                s0,
                                s1,
                                filler0,
                                filler1,
                                h,
                                OpTable(carrier, g.arity(), chi),
                                OpTable(carrier, g.arity(), g0),
                                OpTable(carrier, g.arity(), g1),
                                f_star,
                                {}};
  for (unsigned j = 0; j < f.arity(); ++j) {
    std::vector<Element> component(size);
    for (std::size_t i = 0; i < size; ++i) component[i] = f_star[g0[i]][j];
    cert.g0_prime.emplace_back(carrier, g.arity(), std::move(component));
  }

  cert.h_conservative = true;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto args = tuple_at(i, k, 3);
    if (std::find(args.begin(), args.end(), h.at(i)) == args.end()) cert.h_conservative = false;
  }
  std::set<Element> chi_values(chi.begin(), chi.end());
  cert.chi_two_valued = chi_values.size() <= 2;
  cert.chi_in_ci = ci_membership(cert.chi, ideal);
  cert.g1_in_ci = ci_membership(cert.g1, ideal) &&
                  std::find(g1.begin(), g1.end(), a) == g1.end();
  cert.g0_prime_in_ci = std::all_of(cert.g0_prime.begin(), cert.g0_prime.end(),
                                    [&](const OpTable& c) { return ci_membership(c, ideal); });
  cert.f_star_right_inverse = std::all_of(b0.begin(), b0.end(), [&](Element b) {
    return f(f_star[b]) == b && ideal.contains(f_star[b]);
  });
  cert.g0_factorization = compose(f, cert.g0_prime) == cert.g0;
  const std::vector<OpTable> parts{cert.chi, cert.g0, cert.g1};
  cert.identity = compose(h, parts) == g;
  return cert;
}

bool reconstruct_ideal(const PrincipalIdeal& ideal) {
  const unsigned k = ideal.carrier().size();
  if (k > 4) throw ResourceLimit("ideal reconstruction is exhaustive and limited to k <= 4");
  const auto unary = all_operations(ideal.carrier(), 1);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<Element> subset;
    for (unsigned e = 0; e < k; ++e) {
      if (mask & (1u << e)) subset.push_back(static_cast<Element>(e));
    }
    bool displayed = true;
    for (const auto& u : unary) {
      const bool range_inside = std::all_of(u.table().begin(), u.table().end(), [&](Element v) {
        return (mask >> v) & 1u;
      });
      if (range_inside && !ci_membership(u, ideal)) {
        displayed = false;
        break;
      }
    }
    if (displayed != ideal.contains(subset)) return false;
  }
  return true;
}

}  // namespace clonelab::finite
