#include "clonelab/canonical/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace clonelab::canonical {

namespace {

constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
constexpr unsigned kNoOutcome = 3;

int cmp(Nat a, Nat b) { return (a > b) - (a < b); }

unsigned pattern_code(const Quad& a) {
  unsigned code = 0;
  for (auto [i, j] : kPairs) code = code * 3 + static_cast<unsigned>(cmp(a[i], a[j]) + 1);
  return code;
}

// F on the off-diagonal pairs of a sample, indexed by sample position.
class ValueTable {
 public:
  ValueTable(const SymbolicFn& f, const std::vector<Nat>& s) : n_(s.size()), values_(n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j) values_[i * n_ + j] = f(s[i], s[j]);
      }
    }
  }
  Nat at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Nat> values_;
};

struct Bucket {
  unsigned outcome = kNoOutcome;
  Quad example{};
};

}  // namespace

OrderPattern tuple_pattern(const Quad& a) {
  if (a[0] == a[1] || a[2] == a[3]) throw InvalidArgument("4-tuple needs α1 ≠ α2 and α3 ≠ α4");
  return {pattern_code(a)};
}

bool similar(const Quad& a, const Quad& b) { return tuple_pattern(a) == tuple_pattern(b); }

std::vector<OrderPattern> admissible_patterns() {
  std::set<unsigned> codes;
  for (Nat a = 0; a < 4; ++a) {
    for (Nat b = 0; b < 4; ++b) {
      for (Nat c = 0; c < 4; ++c) {
        for (Nat d = 0; d < 4; ++d) {
          if (a != b && c != d) codes.insert(pattern_code({a, b, c, d}));
        }
      }
    }
  }
  std::vector<OrderPattern> out;
  for (unsigned c : codes) out.push_back({c});
  return out;
}

CanonicalCheck is_canonical(const SymbolicFn& f, const std::vector<Nat>& sample) {
  std::vector<Nat> s = sample;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const ValueTable values(f, s);
  std::unordered_map<unsigned, Bucket> buckets;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          if (k == l) continue;
          const Quad q{s[i], s[j], s[k], s[l]};
          const unsigned outcome = static_cast<unsigned>(cmp(values.at(i, j), values.at(k, l)) + 1);
          Bucket& b = buckets[pattern_code(q)];
          if (b.outcome == kNoOutcome) {
            b = {outcome, q};
          } else if (b.outcome != outcome) {
            return {false, Violation{b.example, q}};
          }
        }
      }
    }
  }
  return {};
}

std::vector<Nat> canonical_subset(const SymbolicFn& f, const std::vector<Nat>& candidates) {
  std::vector<Nat> kept;
  std::unordered_map<unsigned, unsigned> outcomes;
  // Values of F among kept points and the candidate, cached per pair.
  std::map<std::pair<Nat, Nat>, Nat> cache;
  auto value = [&](Nat a, Nat b) {
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;
    const Nat v = f(a, b);
    cache.emplace(std::make_pair(a, b), v);
    return v;
  };
  for (Nat p : candidates) {
    if (std::find(kept.begin(), kept.end(), p) != kept.end()) continue;
    std::vector<Nat> pts = kept;
    pts.push_back(p);
    const std::size_t n = pts.size();
    const std::size_t last = n - 1;
    std::unordered_map<unsigned, unsigned> fresh;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i == j) continue;
        for (std::size_t k = 0; k < n && ok; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            if (k == l) continue;
            if (i != last && j != last && k != last && l != last) continue;
            const Quad q{pts[i], pts[j], pts[k], pts[l]};
            const unsigned code = pattern_code(q);
            const unsigned outcome = static_cast<unsigned>(cmp(value(q[0], q[1]), value(q[2], q[3])) + 1);
            auto old = outcomes.find(code);
            if (old != outcomes.end() && old->second != outcome) {
              ok = false;
              break;
            }
            auto [it, inserted] = fresh.emplace(code, outcome);
            if (!inserted && it->second != outcome) {
              ok = false;
              break;
            }
          }
        }
      }
    }
    if (ok) {
      kept.push_back(p);
      outcomes.insert(fresh.begin(), fresh.end());
    }
  }
  return kept;
}

std::vector<Nat> canonical_subset(const SymbolicFn& f, const Box& box) {
  std::vector<Nat> candidates;
  for (Nat v = box.lo; v < box.hi; ++v) candidates.push_back(v);
  return canonical_subset(f, candidates);
}

std::optional<Nat> CanonicalClassification::predict(Nat alpha, Nat beta) const {
  switch (kind) {
    case Kind::injective_on_region:
      return std::nullopt;
    case Kind::constant_on_region:
      return value;
    case Kind::first_coordinate:
    case Kind::second_coordinate: {
      const Nat key = kind == Kind::first_coordinate ? alpha : beta;
      for (auto [a, v] : map) {
        if (a == key) return v;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string to_string(CanonicalClassification::Kind kind) {
  switch (kind) {
    case CanonicalClassification::Kind::injective_on_region:
      return "injective";
    case CanonicalClassification::Kind::first_coordinate:
      return "first-coordinate";
    case CanonicalClassification::Kind::second_coordinate:
      return "second-coordinate";
    case CanonicalClassification::Kind::constant_on_region:
      return "constant";
  }
  return "unknown";
}

namespace {

std::vector<std::pair<Nat, Nat>> region_points(const std::vector<Nat>& s, Region region) {
  std::vector<std::pair<Nat, Nat>> pts;
  for (Nat a : s) {
    for (Nat b : s) {
      const bool in = region == Region::delta ? a > b : region == Region::nabla ? a < b : a != b;
      if (in) pts.emplace_back(a, b);
    }
  }
  return pts;
}

// Checks whether the values factor through one coordinate; fills the map when they do.
template <typename Key>
bool factors(const std::vector<std::pair<Nat, Nat>>& pts, const std::vector<Nat>& vals, Key key,
             std::vector<std::pair<Nat, Nat>>& map) {
  std::map<Nat, Nat> by_key;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto [it, fresh] = by_key.emplace(key(pts[i]), vals[i]);
    if (!fresh && it->second != vals[i]) return false;
  }
  map.assign(by_key.begin(), by_key.end());
  return true;
}

bool injective_values(const std::vector<std::pair<Nat, Nat>>& map) {
  std::set<Nat> seen;
  for (auto [k, v] : map) {
    if (!seen.insert(v).second) return false;
  }
  return true;
}

}  // namespace

CanonicalClassification classify_on_region(const SymbolicFn& f, Region region, const std::vector<Nat>& sample) {
  if (region != Region::delta && region != Region::nabla) {
    throw InvalidArgument("classification region must be delta or nabla");
  }
  const CanonicalCheck check = is_canonical(f, sample);
  if (!check.canonical) throw NotCanonical(f.name() + " is not canonical on the sample", *check.violation);
  std::vector<Nat> s = sample;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const auto pts = region_points(s, region);
  std::vector<Nat> vals;
  for (auto [a, b] : pts) vals.push_back(f(a, b));

  CanonicalClassification out;
  out.region = region;
  out.sample_size = s.size();
  using Kind = CanonicalClassification::Kind;
  if (pts.size() < 3) {
    out.kind = Kind::constant_on_region;
    out.value = vals.empty() ? 0 : vals.front();
    out.degenerate = true;
    return out;
  }
  const std::set<Nat> distinct(vals.begin(), vals.end());
  if (distinct.size() == vals.size()) {
    out.kind = Kind::injective_on_region;
    return out;
  }
  if (distinct.size() == 1) {
    out.kind = Kind::constant_on_region;
    out.value = vals.front();
    return out;
  }
  if (factors(pts, vals, [](auto p) { return p.first; }, out.map) && injective_values(out.map)) {
    out.kind = Kind::first_coordinate;
    return out;
  }
  if (factors(pts, vals, [](auto p) { return p.second; }, out.map) && injective_values(out.map)) {
    out.kind = Kind::second_coordinate;
    return out;
  }
  throw Inconclusive(f.name() + " fits no variant on " + symbolic::to_string(region));
}

std::string to_string(Interaction i) {
  switch (i) {
    case Interaction::disjoint_ranges:
      return "disjoint-ranges";
    case Interaction::symmetric:
      return "symmetric";
    case Interaction::neither_precondition:
      return "neither-precondition";
    case Interaction::overlapping:
      return "overlapping";
  }
  return "unknown";
}

InteractionReport delta_nabla_interaction(const SymbolicFn& f, const Box& box) {
  InteractionReport r;
  std::unordered_map<Nat, std::pair<Nat, Nat>> delta, nabla;
  r.injective_on_delta = true;
  r.injective_on_nabla = true;
  bool symmetric = true;
  for (Nat x = box.lo; x < box.hi; ++x) {
    for (Nat y = box.lo; y < box.hi; ++y) {
      if (x == y) continue;
      const Nat v = f(x, y);
      if (x > y) {
        if (!delta.emplace(v, std::make_pair(x, y)).second) r.injective_on_delta = false;
        if (v != f(y, x)) symmetric = false;
      } else if (!nabla.emplace(v, std::make_pair(x, y)).second) {
        r.injective_on_nabla = false;
      }
    }
  }
  if (!r.injective_on_delta && !r.injective_on_nabla) {
    r.verdict = Interaction::neither_precondition;
    return r;
  }
  if (symmetric) {
    r.verdict = Interaction::symmetric;
    return r;
  }
  // Deterministic witness: the smallest shared value.
  std::optional<Nat> shared;
  for (const auto& [v, p] : delta) {
    if (nabla.count(v) && (!shared || v < *shared)) shared = v;
  }
  if (shared) {
    r.verdict = Interaction::overlapping;
    r.witness = {delta[*shared], nabla[*shared]};
  } else {
    r.verdict = Interaction::disjoint_ranges;
  }
  return r;
}

RegionUnary unary_on_region(const terms::Term& t, const Box& box, Region region) {
  std::map<Nat, std::pair<std::pair<Nat, Nat>, Nat>> by_x, by_y;
  RegionUnary r;
  for (Nat a = box.lo; a < box.hi; ++a) {
    for (Nat b = box.lo; b < box.hi; ++b) {
      const bool in = region == Region::delta ? a > b : region == Region::nabla ? a < b : a != b;
      if (!in) continue;
      const Nat v = terms::eval(t, a, b);
      auto [ix, fx] = by_x.emplace(a, std::make_pair(std::make_pair(a, b), v));
      if (!fx && ix->second.second != v && !r.x_witness) r.x_witness = {{ix->second.first, {a, b}}};
      auto [iy, fy] = by_y.emplace(b, std::make_pair(std::make_pair(a, b), v));
      if (!fy && iy->second.second != v && !r.y_witness) r.y_witness = {{iy->second.first, {a, b}}};
    }
  }
  if (!r.x_witness) {
    r.member = true;
    r.side = 'x';
  } else if (!r.y_witness) {
    r.member = true;
    r.side = 'y';
  }
  return r;
}

RegionUnary u_delta_membership(const terms::Term& t, const Box& box) {
  return unary_on_region(t, box, Region::delta);
}

RegionUnary u_nabla_membership(const terms::Term& t, const Box& box) {
  return unary_on_region(t, box, Region::nabla);
}

namespace {

void collect(const terms::Term& t, std::vector<unsigned>& path, std::vector<HeavySubterm>& out) {
  for (unsigned i = 0; i < t.children().size(); ++i) {
    path.push_back(i);
    collect(t.children()[i], path, out);
    path.pop_back();
  }
  out.push_back({path, t, Region::delta});
}

}  // namespace

std::optional<HeavySubterm> minimal_heavy_subterm(const terms::Term& t, const Box& box) {
  std::vector<HeavySubterm> all;
  std::vector<unsigned> path;
  collect(t, path, all);
  std::stable_sort(all.begin(), all.end(), [](const HeavySubterm& a, const HeavySubterm& b) {
    if (a.term.size() != b.term.size()) return a.term.size() < b.term.size();
    return a.path < b.path;
  });
  for (auto& s : all) {
    if (!u_delta_membership(s.term, box).member) {
      s.failed_region = Region::delta;
      return s;
    }
    if (!u_nabla_membership(s.term, box).member) {
      s.failed_region = Region::nabla;
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace clonelab::canonical
