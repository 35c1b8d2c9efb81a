#include "clonelab/finite/chain.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace clonelab::finite {

namespace {

std::vector<std::vector<Element>> carrier_permutations(unsigned k) {
  std::vector<Element> p(k);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<std::vector<Element>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Visits every table in the orbit of f.
template <typename Visit>
void for_each_conjugate(const OpTable& f, Visit visit) {
  const unsigned k = f.carrier().size();
  const unsigned n = f.arity();
  const auto perms = carrier_permutations(k);
  std::vector<unsigned> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::vector<std::size_t> inner(n, 0);
  std::vector<Element> table(f.size());
  std::vector<Element> args(n);
  do {
    std::fill(inner.begin(), inner.end(), 0);
    while (true) {
      for (const auto& outer : perms) {
        for (std::size_t i = 0; i < f.size(); ++i) {
          std::size_t rest = i;
          for (unsigned j = n; j-- > 0;) {
            args[j] = static_cast<Element>(rest % k);
            rest /= k;
          }
          std::size_t index = 0;
          for (unsigned j = 0; j < n; ++j) index = index * k + perms[inner[j]][args[order[j]]];
          table[i] = outer[f.at(index)];
        }
        visit(table);
      }
      unsigned p = n;
      while (p-- > 0) {
        if (++inner[p] < perms.size()) break;
        inner[p] = 0;
      }
      if (p == static_cast<unsigned>(-1)) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
}

bool includes(const CloneSlices& big, const CloneSlices& small) {
  return std::all_of(small.basis().begin(), small.basis().end(),
                     [&](const OpTable& op) { return big.contains(op); });
}

IntervalClone summarize(CloneSlices slices) {
  IntervalClone c{std::move(slices), {}, 0};
  for (unsigned n = 1; n <= c.slices.arity_cap(); ++n) {
    c.slice_sizes.push_back(c.slices.slice(n).size());
    c.total_size += c.slice_sizes.back();
  }
  return c;
}

}  // namespace

OpTable orbit_representative(const OpTable& f) {
  std::vector<Element> best = f.table();
  for_each_conjugate(f, [&](const std::vector<Element>& t) {
    if (t < best) best = t;
  });
  return OpTable(f.carrier(), f.arity(), std::move(best));
}

ChainReport unary_interval_chain(Carrier carrier, unsigned arity_cap, unsigned working_cap,
                                 ClosureLimits limits) {
  if (arity_cap < 1) throw InvalidArgument("arity cap must be >= 1");
  if (working_cap < arity_cap) throw InvalidArgument("working cap must be >= arity cap");
  ChainReport report{carrier, arity_cap, working_cap, 0, 0, {}, false};

  // Every candidate table is enumerated, so the top arity bounds the work.
  std::size_t space = 1;
  const std::size_t width = tuple_count(carrier.size(), arity_cap);
  for (std::size_t i = 0; i < width; ++i) {
    if (space > (std::size_t{1} << 22) / carrier.size()) {
      throw ResourceLimit("operation space of the top arity exceeds the enumeration budget");
    }
    space *= carrier.size();
  }

  const auto unary = all_operations(carrier, 1);
  const CloneSlices bottom = close_generators(carrier, unary, arity_cap, false, limits);

  // Principal clones cl(O^(1) ∪ {g}); conjugates of g generate the same clone.
  std::vector<IntervalClone> clones;
  std::set<std::vector<OpTable>> seen_clones;
  auto add_clone = [&](CloneSlices slices) {
    auto key = slices.to_opset().to_vector();
    if (!seen_clones.insert(std::move(key)).second) return false;
    clones.push_back(summarize(std::move(slices)));
    return true;
  };
  add_clone(bottom);

  for (unsigned n = 2; n <= arity_cap; ++n) {
    std::set<std::vector<Element>> covered;
    for (const auto& g : all_operations(carrier, n)) {
      if (bottom.contains(g)) continue;
      ++report.candidates;
      if (covered.count(g.table())) continue;
      for_each_conjugate(g, [&](const std::vector<Element>& t) { covered.insert(t); });
      ++report.orbit_representatives;
      CloneSlices principal = bottom;
      principal.absorb(g);
      add_clone(std::move(principal));
    }
  }

  // Close under joins.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = clones.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        const auto& a = clones[i].slices;
        const auto& b = clones[j].slices;
        if (includes(a, b) || includes(b, a)) continue;
        CloneSlices join = a;
        for (const auto& op : b.basis()) join.absorb(op);
        if (add_clone(std::move(join))) grew = true;
      }
    }
  }

  std::stable_sort(clones.begin(), clones.end(), [](const IntervalClone& x, const IntervalClone& y) {
    return x.total_size < y.total_size;
  });
  report.is_chain = true;
  for (std::size_t i = 1; i < clones.size(); ++i) {
    if (!includes(clones[i].slices, clones[i - 1].slices)) report.is_chain = false;
  }
  report.clones = std::move(clones);
  return report;
}

}  // namespace clonelab::finite
