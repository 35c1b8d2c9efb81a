#include "clonelab/symbolic/properties.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace clonelab::symbolic {

namespace {

Nat lower_half_end(const Box& box) { return box.lo + std::max<Nat>(1, (box.width() + 1) / 2); }

// Odometer over coordinates `free` in [lo, hi), with the remaining coordinates held at `base`.
template <typename Visit>
void odometer(std::vector<Nat>& args, const std::vector<unsigned>& free, Nat lo, Nat hi, Visit visit) {
  if (lo >= hi) return;
  for (unsigned c : free) args[c] = lo;
  while (true) {
    if (!visit()) return;
    std::size_t i = free.size();
    while (i > 0) {
      --i;
      if (++args[free[i]] < hi) break;
      args[free[i]] = lo;
      if (i == 0) return;
    }
    if (free.empty()) return;
  }
}

std::size_t distinct_values(const SymbolicFn& f, std::vector<Nat> args, const std::vector<unsigned>& free,
                            Nat lo, Nat hi) {
  std::unordered_set<Nat> seen;
  odometer(args, free, lo, hi, [&] {
    seen.insert(f(args));
    return true;
  });
  return seen.size();
}

}  // namespace

std::optional<PairCollision> check_injective_on(const SymbolicFn& f, const Box& box) {
  if (f.arity() != 2) throw InvalidArgument("check_injective_on needs a binary function");
  std::unordered_map<Nat, std::pair<Nat, Nat>> seen;
  for (Nat x = box.lo; x < box.hi; ++x) {
    for (Nat y = box.lo; y < box.hi; ++y) {
      if (!box.admits(x, y)) continue;
      const Nat v = f(x, y);
      auto [it, fresh] = seen.emplace(v, std::make_pair(x, y));
      if (!fresh) return PairCollision{it->second, {x, y}, v};
    }
  }
  return std::nullopt;
}

void for_each_tuple(unsigned arity, const Box& box,
                    const std::function<void(std::span<const Nat>)>& visit) {
  std::vector<Nat> args(arity, box.lo);
  std::vector<unsigned> all(arity);
  for (unsigned i = 0; i < arity; ++i) all[i] = i;
  odometer(args, all, box.lo, box.hi, [&] {
    if (arity != 2 || box.admits(args[0], args[1])) visit(args);
    return true;
  });
}

std::string to_string(AlmostUnaryKind kind) {
  switch (kind) {
    case AlmostUnaryKind::verified_witness:
      return "verified-witness";
    case AlmostUnaryKind::witness_refuted:
      return "witness-refuted";
    case AlmostUnaryKind::almost_unary_on_box:
      return "almost-unary-on-box";
    case AlmostUnaryKind::not_almost_unary_on_box:
      return "not-almost-unary-on-box";
  }
  return "unknown";
}

AlmostUnaryVerdict almost_unary_check(const SymbolicFn& f,
                                      const std::optional<AlmostUnaryWitness>& witness,
                                      const Box& box, const SlackFn& slack) {
  AlmostUnaryVerdict verdict;
  verdict.box = box;
  if (witness) {
    const unsigned k = witness->coordinate();
    if (k < 1 || k > f.arity()) throw InvalidArgument("witness coordinate out of range");
    verdict.kind = AlmostUnaryKind::verified_witness;
    bool refuted = false;
    std::vector<Nat> args(f.arity(), box.lo);
    std::vector<unsigned> all(f.arity());
    for (unsigned i = 0; i < f.arity(); ++i) all[i] = i;
    odometer(args, all, box.lo, box.hi, [&] {
      if (f.arity() == 2 && !box.admits(args[0], args[1])) return true;
      if (!witness->contains(args[k - 1], f(args))) {
        refuted = true;
        verdict.counterexample = args;
        return false;
      }
      return true;
    });
    if (refuted) verdict.kind = AlmostUnaryKind::witness_refuted;
    return verdict;
  }

  const Nat width = box.width();
  const Nat half = lower_half_end(box);
  const Nat probes = box.lo + std::max<Nat>(1, width / 4);
  bool any = false;
  for (unsigned k = 0; k < f.arity(); ++k) {
    FiberProfile p;
    p.coordinate = k + 1;
    p.within_slack = true;
    std::vector<unsigned> others;
    for (unsigned i = 0; i < f.arity(); ++i) {
      if (i != k) others.push_back(i);
    }
    for (Nat x = box.lo; x < std::min(probes, box.hi); ++x) {
      std::vector<Nat> args(f.arity(), box.lo);
      args[k] = x;
      const Nat at_half = distinct_values(f, args, others, box.lo, half);
      const Nat at_full = distinct_values(f, args, others, box.lo, box.hi);
      p.half_width_max = std::max(p.half_width_max, at_half);
      p.full_width_max = std::max(p.full_width_max, at_full);
      const Nat allowed = slack ? slack(x, width) : at_half;
      if (at_full > allowed) p.within_slack = false;
    }
    any = any || p.within_slack;
    verdict.profile.push_back(p);
  }
  verdict.kind = any ? AlmostUnaryKind::almost_unary_on_box : AlmostUnaryKind::not_almost_unary_on_box;
  return verdict;
}

bool depends_heavily(const SymbolicFn& f, unsigned k, const Box& box) {
  if (k < 1 || k > f.arity()) throw InvalidArgument("depends_heavily: coordinate out of range");
  if (box.width() == 0) return false;
  std::vector<unsigned> others;
  for (unsigned i = 0; i < f.arity(); ++i) {
    if (i != k - 1) others.push_back(i);
  }
  std::vector<Nat> args(f.arity(), box.lo);
  bool heavy = false;
  odometer(args, others, box.lo, lower_half_end(box), [&] {
    heavy = distinct_values(f, args, {k - 1}, box.lo, box.hi) == box.width();
    return !heavy;
  });
  return heavy;
}

SgEstimate s_g_estimate(const SymbolicFn& g, const Box& box, Nat threshold) {
  if (threshold > box.width()) throw InvalidArgument("s_g_estimate: threshold exceeds the box width");
  const unsigned n = g.arity();
  if (n > 16) throw ResourceLimit("s_g_estimate: arity too large");
  SgEstimate out;
  out.threshold = threshold;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<unsigned> free;
    std::vector<unsigned> fixed;
    for (unsigned i = 0; i < n; ++i) ((mask >> i) & 1u ? free : fixed).push_back(i);
    std::vector<Nat> args(n, box.lo);
    bool hit = false;
    odometer(args, fixed, box.lo, lower_half_end(box), [&] {
      hit = distinct_values(g, args, free, box.lo, box.hi) >= threshold;
      return !hit;
    });
    if (hit) {
      std::set<unsigned> s;
      for (unsigned i : free) s.insert(i + 1);
      out.sets.push_back(std::move(s));
    }
  }
  for (std::size_t i = 0; i < out.sets.size() && out.pairwise_intersecting; ++i) {
    for (std::size_t j = i + 1; j < out.sets.size(); ++j) {
      const bool meets = std::any_of(out.sets[i].begin(), out.sets[i].end(),
                                     [&](unsigned c) { return out.sets[j].count(c) > 0; });
      if (!meets) {
        out.pairwise_intersecting = false;
        break;
      }
    }
  }
  return out;
}

std::string to_string(SpreadKind kind) {
  switch (kind) {
    case SpreadKind::verified:
      return "verified";
    case SpreadKind::refuted:
      return "refuted";
    case SpreadKind::bound_refuted:
      return "bound-refuted";
  }
  return "unknown";
}

SpreadVerdict witnessed_spread_check(const SymbolicFn& f, const SpreadWitness& w, const Box& box) {
  SpreadVerdict verdict;
  if (w.kind == SpreadWitness::Kind::p_style) {
    if (!w.uniform_bound) throw InvalidArgument("P-style witness needs a uniform bound");
    for (Nat x = box.lo; x < box.hi; ++x) {
      auto s = w.map(x);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (s.size() >= *w.uniform_bound) {
        verdict.kind = SpreadKind::bound_refuted;
        verdict.tuple = {x};
        return verdict;
      }
    }
  }
  std::vector<Nat> args(f.arity(), box.lo);
  std::vector<unsigned> all(f.arity());
  for (unsigned i = 0; i < f.arity(); ++i) all[i] = i;
  odometer(args, all, box.lo, box.hi, [&] {
    if (f.arity() == 2 && !box.admits(args[0], args[1])) return true;
    const Nat v = f(args);
    for (Nat x : args) {
      const auto s = w.map(x);
      if (std::find(s.begin(), s.end(), v) != s.end()) return true;
    }
    verdict.kind = SpreadKind::refuted;
    verdict.tuple = args;
    return false;
  });
  return verdict;
}

}  // namespace clonelab::symbolic
