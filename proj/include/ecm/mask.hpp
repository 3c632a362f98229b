#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace ecm {

/// Subset of a ground set of at most 64 elements.
using Mask = std::uint64_t;

inline constexpr int kMaxElements = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr bool contains(Mask set, int i) { return (set >> i) & 1u; }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Calls f(i) for every set bit, lowest first.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

/// Keeps only inclusion-maximal sets; output sorted and deduplicated.
inline std::vector<Mask> maximal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> kept;
  for (Mask s : sets) {
    bool dominated = false;
    for (Mask k : kept) {
      if (is_subset(s, k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace ecm
