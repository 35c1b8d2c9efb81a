#include "clonelab/terms/subset.hpp"

#include <algorithm>
#include <mutex>

namespace clonelab::terms {

namespace {
constexpr std::size_t kScanLimit = std::size_t{1} << 20;
}

struct SubsetSpec::State {
  std::string name;
  std::function<std::optional<Nat>(Nat)> next;
};

SubsetSpec SubsetSpec::naturals(Nat from) {
  auto s = std::make_shared<State>();
  s->name = from == 0 ? "N" : "N>=" + std::to_string(from);
  s->next = [from](Nat v) -> std::optional<Nat> { return std::max(v, from); };
  return SubsetSpec(s);
}

SubsetSpec SubsetSpec::arithmetic(Nat start, Nat step) {
  if (step == 0) throw InvalidArgument("arithmetic subset needs a positive step");
  auto s = std::make_shared<State>();
  s->name = std::to_string(start) + "+" + std::to_string(step) + "N";
  s->next = [start, step](Nat v) -> std::optional<Nat> {
    if (v <= start) return start;
    return checked_add(start, checked_mul((v - start + step - 1) / step, step));
  };
  return SubsetSpec(s);
}

SubsetSpec SubsetSpec::filter(const SubsetSpec& parent, std::string name, std::function<bool(Nat)> keep) {
  auto s = std::make_shared<State>();
  s->name = std::move(name);
  s->next = [p = parent, keep = std::move(keep)](Nat v) -> std::optional<Nat> {
    std::optional<Nat> u = p.next(v);
    for (std::size_t steps = 0; u && steps < kScanLimit; ++steps) {
      if (keep(*u)) return u;
      u = p.next(*u + 1);
    }
    return std::nullopt;
  };
  return SubsetSpec(s);
}

SubsetSpec SubsetSpec::greedy(const SubsetSpec& parent, std::string name, Accept accept) {
  struct Memo {
    std::mutex mutex;
    std::vector<Nat> kept;
    Nat scanned = 0;  // every parent member below this has been decided
    bool exhausted = false;
  };
  auto memo = std::make_shared<Memo>();
  auto s = std::make_shared<State>();
  s->name = std::move(name);
  s->next = [p = parent, accept = std::move(accept), memo](Nat v) -> std::optional<Nat> {
    std::lock_guard lock(memo->mutex);
    std::size_t steps = 0;
    while (!memo->exhausted && (memo->kept.empty() || memo->kept.back() < v) && steps < kScanLimit) {
      const std::optional<Nat> u = p.next(memo->scanned);
      if (!u) {
        memo->exhausted = true;
        break;
      }
      if (accept(memo->kept, *u)) memo->kept.push_back(*u);
      memo->scanned = *u + 1;
      ++steps;
    }
    auto it = std::lower_bound(memo->kept.begin(), memo->kept.end(), v);
    if (it != memo->kept.end()) return *it;
    return std::nullopt;
  };
  return SubsetSpec(s);
}

const std::string& SubsetSpec::name() const { return state_->name; }

std::optional<Nat> SubsetSpec::next(Nat v) const { return state_->next(v); }

bool SubsetSpec::contains(Nat v) const {
  const auto u = next(v);
  return u && *u == v;
}

std::vector<Nat> SubsetSpec::first(std::size_t n) const {
  std::vector<Nat> out;
  out.reserve(n);
  Nat from = 0;
  while (out.size() < n) {
    const auto u = next(from);
    if (!u) {
      throw Inconclusive("subset " + name() + " yielded only " + std::to_string(out.size()) +
                         " elements within the scan limit");
    }
    out.push_back(*u);
    from = *u + 1;
  }
  return out;
}

}  // namespace clonelab::terms
