#include "clonelab/symbolic/constructions.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <unordered_map>

#include "clonelab/symbolic/properties.hpp"

namespace clonelab::symbolic {

namespace {

std::string pair_text(Nat x, Nat y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

void require_injective(const SymbolicFn& f, const Box& box, const std::string& what) {
  if (auto hit = check_injective_on(f, box)) {
    throw ConstructionRefuted(what + ": " + f.name() + " collides at " +
                              pair_text(hit->first.first, hit->first.second) + " and " +
                              pair_text(hit->second.first, hit->second.second) + " on " +
                              box.to_string());
  }
}

}  // namespace

Nat cantor(Nat x, Nat y) {
  const Nat s = checked_add(x, y);
  const Nat t = checked_mul(s, checked_add(s, 1)) / 2;
  return checked_add(t, y);
}

SymbolicFn std_pairing() {
  return SymbolicFn::binary("pr", [](Nat x, Nat y) { return checked_add(checked_mul(2, cantor(x, y)), 2); })
      .with_annotations({.injective_off_diagonal = true});
}

SymbolicFn pr_delta(const SymbolicFn& pr) {
  SymbolicFn fn = SymbolicFn::binary("pr_delta", [pr](Nat x, Nat y) { return x > y ? pr(x, y) : Nat{0}; });
  fn.with_witness(AlmostUnaryWitness::from_set(
      1,
      [pr](Nat x) {
        std::vector<Nat> g{0};
        for (Nat y = 0; y <= x; ++y) g.push_back(pr(x, y));
        return g;
      },
      "G(x) = pr[{x} x {0..x}] + {0}"));
  return fn;
}

SymbolicFn med() {
  return SymbolicFn("med", 3, [](std::span<const Nat> a) {
    return std::max({std::min(a[0], a[1]), std::min(a[1], a[2]), std::min(a[0], a[2])});
  });
}

SymbolicFn max_fn() {
  return SymbolicFn::binary("max", [](Nat x, Nat y) { return std::max(x, y); })
      .with_annotations({.symmetric = true, .canonical_claimed = true});
}

SymbolicFn min_fn() {
  SymbolicFn fn = SymbolicFn::binary("min", [](Nat x, Nat y) { return std::min(x, y); });
  fn.with_annotations({.symmetric = true, .canonical_claimed = true});
  fn.with_witness(AlmostUnaryWitness::from_bound(1, [](Nat x) { return x; }, "min(x, y) <= x"));
  return fn;
}

SymbolicFn h_standard() {
  return SymbolicFn::binary("h", [](Nat x, Nat y) -> Nat {
    if (x == 0) return y;
    if (y == 1) return x;
    return 0;
  });
}

SymbolicFn constant_fn(unsigned arity, Nat value) {
  return SymbolicFn("const" + std::to_string(value), arity,
                    [value](std::span<const Nat>) { return value; });
}

SymbolicFn projection_fn(unsigned arity, unsigned coordinate) {
  if (coordinate < 1 || coordinate > arity) throw InvalidArgument("projection coordinate out of range");
  return SymbolicFn("pi" + std::to_string(arity) + "_" + std::to_string(coordinate), arity,
                    [coordinate](std::span<const Nat> a) { return a[coordinate - 1]; });
}

PairingBijection pairing_to_bijection(const SymbolicFn& pr, const Box& verification_box) {
  SymbolicFn g1 = SymbolicFn::unary("g1", [](Nat x) { return checked_mul(2, x); });
  SymbolicFn g2 = SymbolicFn::unary("g2", [](Nat y) { return checked_add(checked_mul(2, y), 1); });
  SymbolicFn inner = SymbolicFn::binary("pr_split", [pr](Nat x, Nat y) {
    return pr(checked_mul(2, x), checked_add(checked_mul(2, y), 1));
  });

  const Box off(verification_box.lo, verification_box.hi, Region::offdiag);
  require_injective(pr, off, "pairing_to_bijection");
  for (Nat x = verification_box.lo; x < verification_box.hi; ++x) {
    for (Nat y = verification_box.lo; y < verification_box.hi; ++y) {
      if ((x + 1 < verification_box.hi && pr(x + 1, y) <= pr(x, y)) ||
          (y + 1 < verification_box.hi && pr(x, y + 1) <= pr(x, y))) {
        throw ConstructionRefuted("pairing_to_bijection: pr is not increasing at " + pair_text(x, y));
      }
    }
  }

  // Rank of v in the image: the number of (a, b) with inner(a, b) < v.
  SymbolicFn g = SymbolicFn::unary("g", [inner](Nat v) {
    Nat rank = 0;
    for (Nat a = 0; inner(a, 0) < v; ++a) {
      Nat lo = 0;
      Nat hi = 1;
      while (inner(a, hi) < v) hi *= 2;
      while (lo < hi) {
        const Nat mid = lo + (hi - lo) / 2;
        if (inner(a, mid) < v) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      rank += lo;
    }
    return rank;
  });
  SymbolicFn bijection = SymbolicFn::binary("bij_" + pr.name(), [g, inner](Nat x, Nat y) { return g(inner(x, y)); });
  return {bijection, g, g1, g2};
}

Nat bijection_coverage_side(const SymbolicFn& bijection, Nat target, Nat max_side) {
  for (Nat side = 8; side <= max_side; side *= 2) {
    std::vector<unsigned> hits(target, 0);
    bool duplicate = false;
    std::set<Nat> seen;
    for (Nat x = 0; x < side; ++x) {
      for (Nat y = 0; y < side; ++y) {
        const Nat v = bijection(x, y);
        if (!seen.insert(v).second) duplicate = true;
        if (v < target) ++hits[v];
      }
    }
    if (duplicate) return 0;
    if (std::all_of(hits.begin(), hits.end(), [](unsigned h) { return h == 1; })) return side;
  }
  return 0;
}

SymbolicFn f_A(const ColorSet& a, const Coloring& c, const SymbolicFn& pr) {
  if (a.universe() != c.mu()) throw InvalidArgument("F_A: the set must live in the color space");
  SymbolicFn fn = SymbolicFn::binary("F_" + a.to_string(), [a, c, pr](Nat x, Nat y) {
    if (x == 0 || y == 0 || x == y) return std::max(x, y);
    return a.contains(c.checked(x, y)) ? pr(x, y) : Nat{0};
  });
  fn.with_annotations({.symmetric = false, .cross_vanishing = true});
  return fn;
}

SymbolicFn fact_many_pairing(const ColorSet& a, const ColorSet& b, const Coloring& c,
                             const SymbolicFn& pr) {
  if (a.universe() != c.mu() || b.universe() != c.mu()) {
    throw InvalidArgument("fact_many_pairing: sets must live in the color space");
  }
  if ((a | b).count() != c.mu()) throw InvalidArgument("fact_many_pairing: A ∪ B must cover every color");
  const SymbolicFn fa = f_A(a, c, pr);
  const SymbolicFn fb = f_A(b, c, pr);
  return SymbolicFn::binary("pr'", [fa, fb](Nat x, Nat y) { return fa(fa(x, y), fb(x, y)); })
      .with_annotations({.injective_off_diagonal = true});
}

Nat dr_p1(Nat x) { return checked_add(checked_mul(4, x), 1); }
Nat dr_p2(Nat x) { return checked_add(checked_mul(4, x), 3); }

SymbolicFn dr_boundary_h() {
  return SymbolicFn::binary("h_dr", [](Nat u, Nat v) -> Nat {
    if (v == dr_p2(0)) return u;
    if (u == dr_p1(0)) return v;
    return 0;
  });
}

SymbolicFn dr_pairing(const SymbolicFn& h, const SymbolicFn& pr, const Box& check_box) {
  const SymbolicFn pd = pr_delta(pr);
  for (Nat x = check_box.lo; x < check_box.hi; ++x) {
    for (Nat y = check_box.lo; y < x; ++y) {
      const Nat u = dr_p1(pr(x, y));
      const Nat v = dr_p2(pr(x, y));
      if (h(u, dr_p2(0)) != u) {
        throw InvalidH("H(u, p2 0) != u for u = " + std::to_string(u));
      }
      if (h(dr_p1(0), v) != v) {
        throw InvalidH("H(p1 0, v) != v for v = " + std::to_string(v));
      }
    }
  }
  return SymbolicFn::binary("dr[" + h.name() + "]", [h, pd](Nat x, Nat y) {
    return h(dr_p1(pd(x, y)), dr_p2(pd(y, x)));
  });
}

SymbolicFn hh_pairing_symmetric(const SymbolicFn& f, const Box& box) {
  for (Nat x = box.lo; x < box.hi; ++x) {
    for (Nat y = box.lo; y < x; ++y) {
      if (f(x, y) != f(y, x)) {
        throw ConstructionRefuted("hh_pairing_symmetric: " + f.name() + " is not symmetric at " +
                                  pair_text(x, y));
      }
    }
  }
  require_injective(f, Box(box.lo, box.hi, Region::delta), "hh_pairing_symmetric");

  // h is defined through the unordered preimage of each value; the dictionary refutes the
  // premise as soon as one value shows two preimages.
  auto preimage = std::make_shared<std::unordered_map<Nat, std::pair<Nat, Nat>>>();
  const SymbolicFn pr = std_pairing();
  auto normalized = [f, preimage, pr](Nat x, Nat y) {
    const Nat v = f(x, y);
    const auto key = std::minmax(x, y);
    auto [it, fresh] = preimage->emplace(v, std::make_pair(key.first, key.second));
    if (!fresh && it->second != std::make_pair(key.first, key.second)) {
      throw ConstructionRefuted("hh_pairing_symmetric: value " + std::to_string(v) +
                                " has preimages " + pair_text(it->second.first, it->second.second) +
                                " and " + pair_text(key.first, key.second));
    }
    const Nat m = key.second;
    return v > m ? checked_add(checked_mul(2, v), 1) : pr(v, m);
  };
  SymbolicFn composite = SymbolicFn::binary("hh_sym[" + f.name() + "]", [normalized](Nat x, Nat y) {
    return normalized(x, normalized(x, y));
  });
  require_injective(composite, Box(box.lo, box.hi, Region::offdiag), "hh_pairing_symmetric");
  return composite;
}

SymbolicFn hh_pairing_asymmetric(const SymbolicFn& f, const SymbolicFn& h, const Box& box) {
  std::map<Nat, std::pair<Nat, Nat>> delta_values;
  std::map<Nat, std::pair<Nat, Nat>> nabla_values;
  for (Nat x = box.lo; x < box.hi; ++x) {
    for (Nat y = box.lo; y < box.hi; ++y) {
      if (x == y) continue;
      const Nat v = f(x, y);
      if (x > y) {
        delta_values.emplace(v, std::make_pair(x, y));
      } else if (!nabla_values.emplace(v, std::make_pair(x, y)).second) {
        const auto& p = nabla_values[v];
        throw ConstructionRefuted("hh_pairing_asymmetric: " + f.name() + " is not 1-1 on nabla: " +
                                  pair_text(p.first, p.second) + " and " + pair_text(x, y));
      }
    }
  }
  for (const auto& [v, where] : delta_values) {
    if (auto it = nabla_values.find(v); it != nabla_values.end()) {
      throw ConstructionRefuted("hh_pairing_asymmetric: F[delta] and F[nabla] share " +
                                std::to_string(v) + " at " + pair_text(where.first, where.second) +
                                " and " + pair_text(it->second.first, it->second.second));
    }
  }

  auto normalized = [f](Nat x, Nat y) -> Nat {
    return x > y ? 0 : checked_add(checked_mul(2, f(x, y)), 2);
  };
  for (Nat x = box.lo; x < box.hi; ++x) {
    for (Nat y = box.lo; y < box.hi; ++y) {
      if (x >= y) continue;
      const Nat even = normalized(x, y);
      if (h(even, 1) != even || h(0, even + 1) != even + 1) {
        throw InvalidH("H(0, v) = v = H(v, 1) fails near " + std::to_string(even));
      }
    }
  }
  SymbolicFn composite = SymbolicFn::binary("hh_asym[" + f.name() + "]", [normalized, h](Nat x, Nat y) {
    return h(normalized(x, y), checked_add(normalized(y, x), 1));
  });
  require_injective(composite, Box(box.lo, box.hi, Region::offdiag), "hh_pairing_asymmetric");
  return composite;
}

std::vector<FamilyGenerator> clone_family_generators(
    const combinatorics::IndependentFamily& family, const std::vector<bool>& in_j,
    const Coloring& c, const SymbolicFn& pr) {
  if (in_j.size() != family.sets.size()) throw InvalidArgument("J must be given for every index");
  if (family.base_size != c.mu()) throw InvalidArgument("family base must be the color space");
  std::vector<FamilyGenerator> out;
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    const bool complemented = !in_j[i];
    ColorSet set = complemented ? family.sets[i].complement() : family.sets[i];
    SymbolicFn fn = f_A(set, c, pr);
    fn.renamed(std::string(complemented ? "F_-A" : "F_A") + std::to_string(i));
    out.push_back({i, complemented, std::move(set), std::move(fn)});
  }
  return out;
}

SymbolicFn compose(const SymbolicFn& outer, const std::vector<SymbolicFn>& inner) {
  if (inner.size() != outer.arity()) throw InvalidArgument("compose: arity mismatch");
  const unsigned n = inner.front().arity();
  for (const auto& g : inner) {
    if (g.arity() != n) throw InvalidArgument("compose: inner arities differ");
  }
  std::string name = outer.name() + "(";
  for (std::size_t i = 0; i < inner.size(); ++i) name += (i ? "," : "") + inner[i].name();
  name += ")";
  return SymbolicFn(name, n, [outer, inner](std::span<const Nat> args) {
    std::vector<Nat> values;
    values.reserve(inner.size());
    for (const auto& g : inner) values.push_back(g(args));
    return outer(values);
  });
}

SymbolicFn med_of_witnessed(const SymbolicFn& g1, const SymbolicFn& g2, const SymbolicFn& g3) {
  const std::vector<SymbolicFn> args{g1, g2, g3};
  for (const auto& g : args) {
    if (g.arity() != 2 || !g.witness()) {
      throw InvalidArgument("med_of_witnessed needs witnessed binary arguments");
    }
  }
  // Two of the three witnesses share a coordinate.
  std::size_t i = 0, j = 1;
  if (args[0].witness()->coordinate() != args[1].witness()->coordinate()) {
    i = args[2].witness()->coordinate() == args[0].witness()->coordinate() ? 0 : 1;
    j = 2;
  }
  const unsigned k = args[i].witness()->coordinate();
  const AlmostUnaryWitness wi = *args[i].witness();
  const AlmostUnaryWitness wj = *args[j].witness();
  SymbolicFn fn = compose(med(), args);
  fn.with_witness(AlmostUnaryWitness::from_bound(
      k, [wi, wj](Nat x) { return std::max(wi.bound(x), wj.bound(x)); },
      "med <= max of the arguments " + std::to_string(i + 1) + " and " + std::to_string(j + 1)));
  return fn;
}

}  // namespace clonelab::symbolic
