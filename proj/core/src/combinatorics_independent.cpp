#include "clonelab/combinatorics/independent.hpp"

#include <bit>

namespace clonelab::combinatorics {

IndependentFamily IndependentFamily::from_sets(std::size_t base_size, std::vector<ColorSet> sets) {
  for (const auto& s : sets) {
    if (s.universe() != base_size) throw InvalidArgument("family set over the wrong base");
  }
  return IndependentFamily{base_size, {}, std::move(sets)};
}

namespace {

// Calls visit(J, signs) for every index subset J with |J| <= width and every sign vector.
template <typename Visit>
bool for_each_signed(std::size_t m, unsigned width, Visit visit) {
  std::vector<std::size_t> chosen;
  std::vector<bool> signs;
  auto recurse = [&](auto&& self, std::size_t start) -> bool {
    // Every sign pattern for the current `chosen`.
    const std::size_t k = chosen.size();
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << k); ++pattern) {
      signs.assign(k, false);
      for (std::size_t b = 0; b < k; ++b) signs[b] = (pattern >> b) & 1u;
      if (!visit(chosen, signs)) return false;
    }
    if (k == width) return true;
    for (std::size_t i = start; i < m; ++i) {
      chosen.push_back(i);
      const bool ok = self(self, i + 1);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return recurse(recurse, 0);
}

}  // namespace

std::uint64_t signed_combination_count(std::size_t index_count, unsigned width) {
  std::uint64_t count = 0;
  for_each_signed(index_count, width, [&](const auto&, const auto&) {
    ++count;
    return true;
  });
  return count;
}

bool verify_independent(const IndependentFamily& family, unsigned width) {
  if (width > family.sets.size()) throw InvalidArgument("width exceeds the index count");
  const std::size_t n = family.base_size;
  return for_each_signed(family.sets.size(), width,
                         [&](const std::vector<std::size_t>& chosen, const std::vector<bool>& neg) {
                           for (std::size_t x = 0; x < n; ++x) {
                             bool in = true;
                             for (std::size_t j = 0; j < chosen.size() && in; ++j) {
                               in = family.sets[chosen[j]].contains(x) != neg[j];
                             }
                             if (in) return true;
                           }
                           return false;
                         });
}

IndependentFamily hausdorff_family(unsigned m, unsigned q, unsigned max_s, unsigned width) {
  if (m < 1 || m > q) throw InvalidArgument("hausdorff_family needs 1 <= m <= q");
  if (q > 16 || max_s > 4) throw ResourceLimit("hausdorff_family supports q <= 16, |s| <= 4");

  IndependentFamily family;
  for (std::uint32_t s = 0; s < (1u << q); ++s) {
    const unsigned size = static_cast<unsigned>(std::popcount(s));
    if (size > max_s) continue;
    const std::uint64_t families = std::uint64_t{1} << (1u << size);
    for (std::uint64_t a = 0; a < families; ++a) {
      family.base.push_back({s, static_cast<std::uint32_t>(a)});
    }
  }
  family.base_size = family.base.size();

  // Index of t ⊆ s: the bits of t read at the positions of s.
  auto relative = [](std::uint32_t s, std::uint32_t t) {
    std::uint32_t index = 0;
    unsigned out = 0;
    for (unsigned bit = 0; bit < 32; ++bit) {
      if (s & (1u << bit)) {
        if (t & (1u << bit)) index |= 1u << out;
        ++out;
      }
    }
    return index;
  };

  for (unsigned i = 0; i < m; ++i) {
    const std::uint32_t threshold = (i + 1 >= 32) ? ~0u : ((1u << (i + 1)) - 1);
    ColorSet set(family.base_size);
    for (std::size_t x = 0; x < family.base.size(); ++x) {
      const auto& p = family.base[x];
      if ((p.family >> relative(p.s, p.s & threshold)) & 1u) set.insert(x);
    }
    family.sets.push_back(std::move(set));
  }

  if (!verify_independent(family, std::min(width, m))) {
    throw Error("hausdorff_family produced a dependent family");
  }
  return family;
}

}  // namespace clonelab::combinatorics
