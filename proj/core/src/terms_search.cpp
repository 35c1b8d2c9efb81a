#include "clonelab/terms/search.hpp"

#include <unordered_set>

namespace clonelab::terms {

namespace {

struct TableHash {
  std::size_t operator()(const std::vector<Nat>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Nat x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

struct Entry {
  Term term;
  std::vector<Nat> table;
};

}  // namespace

SearchReport bounded_term_search(const SymbolicFn& target, const std::vector<SymbolicFn>& symbols,
                                 const symbolic::Box& box, const SearchOptions& options) {
  if (target.arity() != 2) throw InvalidArgument("search target must be binary");
  if (options.max_depth > kMaxSearchDepth) {
    throw InvalidArgument("search depth is limited to " + std::to_string(kMaxSearchDepth));
  }
  for (const auto& s : symbols) {
    if (s.arity() != 2) throw InvalidArgument("search symbols must be binary");
  }
  for (const auto& u : options.unary_library) {
    if (u.arity() != 1) throw InvalidArgument("unary library entries must be unary");
  }

  std::vector<std::pair<Nat, Nat>> points;
  box.for_each_pair([&](Nat x, Nat y) { points.emplace_back(x, y); });
  std::vector<Nat> goal;
  goal.reserve(points.size());
  for (auto [x, y] : points) goal.push_back(target(x, y));

  SearchReport report;
  std::vector<Entry> pool;
  std::vector<std::size_t> layer_start;
  std::unordered_set<std::vector<Nat>, TableHash> seen;

  auto offer = [&](Term term, std::vector<Nat> table) -> bool {
    ++report.candidates_evaluated;
    if (!seen.insert(table).second) return false;
    if (seen.size() > options.max_functions) throw ResourceLimit("term search exceeded its function budget");
    const bool hit = table == goal;
    pool.push_back({std::move(term), std::move(table)});
    if (hit) report.found = pool.back().term;
    return hit;
  };

  layer_start.push_back(0);
  {
    std::vector<Nat> xs, ys;
    for (auto [x, y] : points) {
      xs.push_back(x);
      ys.push_back(y);
    }
    bool done = offer(Term::x(), std::move(xs)) || offer(Term::y(), std::move(ys));
    for (Nat c : options.constants) {
      if (done) break;
      done = offer(Term::constant(c), std::vector<Nat>(points.size(), c));
    }
    report.frontier_sizes.push_back(pool.size());
    if (done) return report;
  }

  for (unsigned depth = 1; depth <= options.max_depth; ++depth) {
    report.depth_reached = depth;
    const std::size_t prev_begin = layer_start.back();
    const std::size_t prev_end = pool.size();
    layer_start.push_back(prev_end);
    std::vector<Nat> table(points.size());
    for (const auto& u : options.unary_library) {
      for (std::size_t i = prev_begin; i < prev_end; ++i) {
        try {
          for (std::size_t p = 0; p < points.size(); ++p) table[p] = u(pool[i].table[p]);
        } catch (const OverflowError&) {
          continue;
        }
        if (offer(Term::unary(u, pool[i].term), table)) {
          report.frontier_sizes.push_back(pool.size() - prev_end);
          return report;
        }
      }
    }
    for (const auto& f : symbols) {
      for (std::size_t i = 0; i < prev_end; ++i) {
        for (std::size_t j = 0; j < prev_end; ++j) {
          if (i < prev_begin && j < prev_begin) continue;
          try {
            for (std::size_t p = 0; p < points.size(); ++p) table[p] = f(pool[i].table[p], pool[j].table[p]);
          } catch (const OverflowError&) {
            continue;
          }
          if (offer(Term::binary(f, pool[i].term, pool[j].term), table)) {
            report.frontier_sizes.push_back(pool.size() - prev_end);
            return report;
          }
        }
      }
    }
    report.frontier_sizes.push_back(pool.size() - prev_end);
  }
  return report;
}

}  // namespace clonelab::terms
