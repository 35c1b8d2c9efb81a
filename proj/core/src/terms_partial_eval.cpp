#include "clonelab/terms/partial_eval.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace clonelab::terms {

UnaryMap UnaryMap::identity() {
  return {"id", [](Nat v) { return v; }};
}

Classification classify_on(const UnaryMap& h, const SubsetSpec& s, std::size_t probe_budget) {
  if (probe_budget < 2) throw InvalidArgument("classification needs a probe budget of at least 2");
  const std::vector<Nat> sample = s.first(probe_budget);
  std::unordered_map<Nat, Nat> first_with;
  std::optional<std::pair<Nat, Nat>> collision;
  std::vector<Nat> values;
  values.reserve(sample.size());
  for (Nat a : sample) {
    const Nat v = h(a);
    values.push_back(v);
    auto [it, fresh] = first_with.emplace(v, a);
    if (!fresh && !collision) collision = {it->second, a};
  }
  Classification out;
  if (first_with.size() == 1) {
    out.kind = MapClass::constant;
    out.value = values.front();
  } else if (!collision) {
    out.kind = MapClass::injective;
  } else {
    out.kind = MapClass::neither;
    const Nat shared = h(collision->first);
    for (std::size_t i = 0; i < sample.size(); ++i) {
      if (values[i] != shared) {
        out.witness = {collision->first, collision->second, sample[i]};
        break;
      }
    }
  }
  return out;
}

std::string to_string(PartialKind kind) {
  switch (kind) {
    case PartialKind::constant:
      return "constant";
    case PartialKind::unary_x:
      return "unary-x";
    case PartialKind::unary_y:
      return "unary-y";
    case PartialKind::undefined:
      return "undefined";
  }
  return "undefined";
}

Nat PartialEvalResult::at(Nat alpha, Nat beta) const {
  switch (kind) {
    case PartialKind::constant:
      return constant;
    case PartialKind::unary_x:
      return map(alpha);
    case PartialKind::unary_y:
      return map(beta);
    case PartialKind::undefined:
      break;
  }
  throw InvalidArgument("τ^S is undefined: " + reason);
}

std::string PartialEvalResult::describe() const {
  switch (kind) {
    case PartialKind::constant:
      return std::to_string(constant);
    case PartialKind::unary_x:
      return "(" + map.text + ", x)";
    case PartialKind::unary_y:
      return "(" + map.text + ", y)";
    case PartialKind::undefined:
      break;
  }
  std::string p;
  for (unsigned i : path) p += (p.empty() ? "" : ".") + std::to_string(i);
  return "undefined [" + rule + "] at " + (p.empty() ? "root" : p) + ": " + reason;
}

namespace {

enum class Side { constant, x, y };

Side side_of(const PartialEvalResult& r) {
  if (r.kind == PartialKind::constant) return Side::constant;
  return r.kind == PartialKind::unary_x ? Side::x : Side::y;
}

PartialEvalResult constant_result(Nat c, std::string rule) {
  PartialEvalResult r;
  r.kind = PartialKind::constant;
  r.constant = c;
  r.rule = std::move(rule);
  return r;
}

class Evaluator {
 public:
  Evaluator(const SubsetSpec& s, std::size_t budget, std::vector<SubtermResult>* trace)
      : s_(s), budget_(budget), trace_(trace) {}

  PartialEvalResult run(const Term& t, std::vector<unsigned>& path) {
    PartialEvalResult r = step(t, path);
    if (trace_) trace_->push_back({path, t, r});
    return r;
  }

 private:
  PartialEvalResult classified(UnaryMap h, Side side, std::string rule, const std::vector<unsigned>& path) {
    const Classification c = classify_on(h, s_, budget_);
    if (c.kind == MapClass::constant) return constant_result(c.value, rule);
    PartialEvalResult r;
    r.rule = std::move(rule);
    if (c.kind == MapClass::injective) {
      r.kind = side == Side::x ? PartialKind::unary_x : PartialKind::unary_y;
      r.map = std::move(h);
      return r;
    }
    r.kind = PartialKind::undefined;
    r.path = path;
    r.reason = h.text + " is neither 1-1 nor constant on " + s_.name() + " (" +
               std::to_string(c.witness[0]) + " and " + std::to_string(c.witness[1]) +
               " collide, " + std::to_string(c.witness[2]) + " differs)";
    r.blocking = std::move(h);
    return r;
  }

  PartialEvalResult step(const Term& t, std::vector<unsigned>& path) {
    switch (t.kind()) {
      case Term::Kind::var_x: {
        PartialEvalResult r;
        r.kind = PartialKind::unary_x;
        r.map = UnaryMap::identity();
        r.rule = "1";
        return r;
      }
      case Term::Kind::var_y: {
        PartialEvalResult r;
        r.kind = PartialKind::unary_y;
        r.map = UnaryMap::identity();
        r.rule = "1";
        return r;
      }
      case Term::Kind::constant:
        return constant_result(t.value(), "1");
      case Term::Kind::unary:
        return unary(t, path);
      case Term::Kind::binary:
        return binary(t, path);
    }
    return {};
  }

  PartialEvalResult child(const Term& t, unsigned i, std::vector<unsigned>& path) {
    path.push_back(i);
    PartialEvalResult r = run(t.children()[i], path);
    path.pop_back();
    return r;
  }

  PartialEvalResult unary(const Term& t, std::vector<unsigned>& path) {
    const PartialEvalResult inner = child(t, 0, path);
    if (!inner.defined()) return inner;
    const SymbolicFn f = t.symbol();
    if (inner.kind == PartialKind::constant) {
      PartialEvalResult r = constant_result(f(inner.constant), "2");
      r.uses_crucial_case = inner.uses_crucial_case;
      return r;
    }
    const Side side = side_of(inner);
    UnaryMap composite{f.name() + "∘" + inner.map.text, [f, g = inner.map](Nat v) { return f(g(v)); }};
    PartialEvalResult r = classified(std::move(composite), side, side == Side::x ? "3x" : "3y", path);
    r.uses_crucial_case = inner.uses_crucial_case;
    return r;
  }

  PartialEvalResult binary(const Term& t, std::vector<unsigned>& path) {
    const PartialEvalResult a = child(t, 0, path);
    if (!a.defined()) return a;
    const PartialEvalResult b = child(t, 1, path);
    if (!b.defined()) return b;
    const SymbolicFn f = t.symbol();
    const bool crucial_below = a.uses_crucial_case || b.uses_crucial_case;
    const Side sa = side_of(a);
    const Side sb = side_of(b);
    PartialEvalResult r;
    if (sa == Side::constant && sb == Side::constant) {
      r = constant_result(f(a.constant, b.constant), "4");
    } else if (sb == Side::constant) {
      const Nat d = b.constant;
      UnaryMap h{f.name() + "(" + a.map.text + ", " + std::to_string(d) + ")",
                 [f, g = a.map, d](Nat v) { return f(g(v), d); }};
      r = classified(std::move(h), sa, sa == Side::x ? "5x" : "5y", path);
    } else if (sa == Side::constant) {
      const Nat d = a.constant;
      UnaryMap h{f.name() + "(" + std::to_string(d) + ", " + b.map.text + ")",
                 [f, g = b.map, d](Nat v) { return f(d, g(v)); }};
      r = classified(std::move(h), sb, sb == Side::x ? "5x'" : "5y'", path);
    } else if (sa == sb) {
      UnaryMap h{f.name() + "(" + a.map.text + ", " + b.map.text + ")",
                 [f, g1 = a.map, g2 = b.map](Nat v) { return f(g1(v), g2(v)); }};
      r = classified(std::move(h), sa, sa == Side::x ? "6x" : "6y", path);
    } else {
      const std::string rule = sa == Side::x ? "7" : "7'";
      if (f.annotations().cross_vanishing) {
        r = constant_result(0, rule);
        r.uses_crucial_case = true;
      } else {
        r.kind = PartialKind::undefined;
        r.rule = rule;
        r.path = path;
        r.reason = f.name() + " mixes x and y but does not vanish across colors";
      }
    }
    r.uses_crucial_case = r.uses_crucial_case || crucial_below;
    return r;
  }

  const SubsetSpec& s_;
  std::size_t budget_;
  std::vector<SubtermResult>* trace_;
};

}  // namespace

PartialEvalResult partial_eval(const Term& t, const SubsetSpec& s, std::size_t probe_budget) {
  std::vector<unsigned> path;
  return Evaluator(s, probe_budget, nullptr).run(t, path);
}

std::vector<SubtermResult> partial_eval_all(const Term& t, const SubsetSpec& s, std::size_t probe_budget) {
  std::vector<SubtermResult> trace;
  std::vector<unsigned> path;
  Evaluator(s, probe_budget, &trace).run(t, path);
  return trace;
}

std::vector<UnaryMap> unary_family(const std::vector<SubtermResult>& results) {
  std::vector<UnaryMap> out{UnaryMap::identity()};
  std::set<std::string> seen{"id"};
  for (const auto& sr : results) {
    const auto& r = sr.result;
    if ((r.kind == PartialKind::unary_x || r.kind == PartialKind::unary_y) && seen.insert(r.map.text).second) {
      out.push_back(r.map);
    }
  }
  return out;
}

SubsetSpec thin_by(const SubsetSpec& s, const UnaryMap& h, std::size_t probe_budget) {
  const std::vector<Nat> sample = s.first(probe_budget);
  std::map<Nat, std::size_t> freq;
  std::vector<Nat> order;
  for (Nat a : sample) {
    if (freq[h(a)]++ == 0) order.push_back(h(a));
  }
  if (2 * freq.size() >= sample.size()) {
    auto taken = std::make_shared<std::unordered_set<Nat>>();
    return SubsetSpec::greedy(s, s.name() + "|1-1 " + h.text, [h, taken](const std::vector<Nat>&, Nat c) {
      return taken->insert(h(c)).second;
    });
  }
  Nat best = order.front();
  for (Nat v : order) {
    if (freq[v] > freq[best]) best = v;
  }
  return SubsetSpec::filter(s, s.name() + "|" + h.text + "=" + std::to_string(best),
                            [h, best](Nat c) { return h(c) == best; });
}

SubsetSpec thin_for(const std::vector<Term>& terms, const SubsetSpec& s, std::size_t probe_budget,
                    std::size_t max_rounds) {
  SubsetSpec current = s;
  for (std::size_t round = 0; round <= max_rounds; ++round) {
    bool all_defined = true;
    for (const auto& t : terms) {
      const PartialEvalResult r = partial_eval(t, current, probe_budget);
      if (r.defined()) continue;
      if (!r.blocking) {
        throw Inconclusive("thinning cannot define " + to_string(t) + ": " + r.reason);
      }
      if (round == max_rounds) break;
      current = thin_by(current, *r.blocking, probe_budget);
      all_defined = false;
      break;
    }
    if (all_defined) return current;
  }
  throw Inconclusive("thin_for: " + std::to_string(max_rounds) + " thinning rounds were not enough");
}

SubsetSpec main_lemma_thinning(const SubsetSpec& s, const std::vector<UnaryMap>& family,
                               const std::vector<Nat>& constants, const SymbolicFn& pr) {
  auto images = std::make_shared<std::unordered_set<Nat>>();
  SubsetSpec disjoint = SubsetSpec::greedy(s, s.name() + "|disjoint", [family, images](const std::vector<Nat>&, Nat c) {
    std::vector<Nat> mine;
    for (const auto& f : family) {
      const Nat v = f(c);
      if (images->count(v)) return false;
      mine.push_back(v);
    }
    images->insert(mine.begin(), mine.end());
    return true;
  });
  SubsetSpec no_pr = SubsetSpec::greedy(disjoint, disjoint.name() + "|pr", [family, pr](const std::vector<Nat>& kept, Nat c) {
    for (Nat t : kept) {
      const Nat p1 = pr(c, t);
      const Nat p2 = pr(t, c);
      for (const auto& f : family) {
        const Nat fc = f(c);
        const Nat ft = f(t);
        if (fc == p1 || fc == p2 || ft == p1 || ft == p2) return false;
      }
    }
    return true;
  });
  return SubsetSpec::greedy(no_pr, no_pr.name() + "|closed", [family, constants, pr](const std::vector<Nat>& kept, Nat c) {
    for (const auto& f : family) {
      const Nat fc = f(c);
      if (fc != c && std::binary_search(kept.begin(), kept.end(), fc)) return false;
      for (Nat t : kept) {
        const Nat ft = f(t);
        if (ft == c && ft != t) return false;
      }
    }
    for (Nat t : kept) {
      for (Nat k : constants) {
        if (k == pr(c, t) || k == pr(t, c)) return false;
      }
    }
    return true;
  });
}

std::optional<Agreement> find_agreement(const Term& t, const SubsetSpec& s,
                                        const combinatorics::Coloring& c, unsigned c0,
                                        std::size_t search_bound, std::size_t probe_budget) {
  const auto trace = partial_eval_all(t, s, probe_budget);
  const PartialEvalResult& root = trace.back().result;
  if (!root.defined()) throw InvalidArgument("find_agreement needs a defined τ^S: " + root.reason);
  const auto family = unary_family(trace);
  const auto symbols = vanishing_symbols(t);
  const std::vector<Nat> members = s.first(search_bound);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Nat alpha = members[i];
      const Nat beta = members[j];
      if (c.checked(alpha, beta) != c0) continue;
      bool vanishes = true;
      for (const auto& f : family) {
        for (const auto& g : family) {
          const Nat a = f(alpha);
          const Nat b = g(beta);
          if (a == b) {
            vanishes = false;
            break;
          }
          for (const auto& sym : symbols) {
            if (sym(a, b) != 0 || sym(b, a) != 0) {
              vanishes = false;
              break;
            }
          }
          if (!vanishes) break;
        }
        if (!vanishes) break;
      }
      if (!vanishes) continue;
      const Nat value = eval(t, alpha, beta);
      const Nat predicted = root.at(alpha, beta);
      if (value == predicted) return Agreement{alpha, beta, value, predicted};
    }
  }
  return std::nullopt;
}

bool verify_agreement(const Term& t, const PartialEvalResult& r, const Agreement& a,
                      const combinatorics::Coloring& c, unsigned c0) {
  return a.alpha < a.beta && c.checked(a.alpha, a.beta) == c0 && eval(t, a.alpha, a.beta) == r.at(a.alpha, a.beta);
}

}  // namespace clonelab::terms
