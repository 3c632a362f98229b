#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecm/poset.hpp"

namespace ecm {

/// Counter-based generator: output i of stream s is a pure function of
/// (seed, s, i), so parallel trials replay independently of scheduling.
class CounterRng {
public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  std::uint64_t next() { return mix(seed_ ^ mix(stream_ + 0x632be59bd9b4e019ull) ^ (counter_++ * 0x9e3779b97f4a7c15ull)); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection keeps the result unbiased.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  std::uint64_t counter() const { return counter_; }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

struct GradedSample {
  Poset poset;
  std::vector<int> level_sizes;
  double cover_probability = 0.5;
  int attempts = 0;
};

/// Random graded poset: draw a level vector, keep each cover between
/// consecutive levels with probability p, retry until graded and connected.
inline GradedSample random_graded_poset(CounterRng& rng, int max_elements, double p = 0.6, int min_rank = 1) {
  if (min_rank < 0 || max_elements < min_rank + 1 || max_elements > kMaxElements) {
    throw Error(ErrorCode::BadParams, "max_elements too small for the requested rank");
  }
  GradedSample s;
  s.cover_probability = p;
  const int total = rng.between(std::max(min_rank + 1, 2), max_elements);
  const int rank = rng.between(min_rank, std::max(min_rank, std::min(total - 1, 4)));
  s.level_sizes.assign(rank + 1, 1);
  for (int extra = total - (rank + 1); extra > 0; --extra) ++s.level_sizes[rng.below(rank + 1)];

  std::vector<int> start{0};
  for (int sz : s.level_sizes) start.push_back(start.back() + sz);
  std::vector<std::string> labels;
  for (int lv = 0; lv <= rank; ++lv)
    for (int i = 0; i < s.level_sizes[lv]; ++i) labels.push_back("r" + std::to_string(lv) + "_" + std::to_string(i));

  while (true) {
    ++s.attempts;
    std::vector<Cover> covers;
    for (int lv = 0; lv < rank; ++lv)
      for (int a = start[lv]; a < start[lv + 1]; ++a)
        for (int b = start[lv + 1]; b < start[lv + 2]; ++b)
          if (rng.bernoulli(p)) covers.emplace_back(a, b);
    Poset q = Poset::from_covers(labels, std::move(covers));
    Grading g = grading(q);
    if (g.graded && g.rank == rank && hasse_components(q, q.ground()) == 1) {
      s.poset = std::move(q);
      return s;
    }
  }
}

/// Random poset on n elements: a random DAG along index order, reduced to its
/// Hasse diagram. Not necessarily graded.
inline Poset random_poset(CounterRng& rng, int n, double density = 0.35) {
  std::vector<Mask> up(n, 0);
  for (int a = n - 1; a >= 0; --a) {
    up[a] = bit(a);
    for (int b = a + 1; b < n; ++b)
      if (rng.bernoulli(density)) up[a] |= up[b];
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<Cover> covers;
  for (int a = 0; a < n; ++a) {
    Mask above = up[a] & ~bit(a);
    for_each_bit(above, [&](int b) {
      bool between = false;
      for_each_bit(above & ~bit(b), [&](int c) { between = between || contains(up[c], b); });
      if (!between) covers.emplace_back(a, b);
    });
  }
  return Poset::from_covers(std::move(labels), std::move(covers));
}

/// Random rank-1 poset: bipartite bottoms/tops with every element on at
/// least one cover.
inline Poset random_rank1_poset(CounterRng& rng, int max_elements, double p = 0.5) {
  while (true) {
    const int n = rng.between(2, max_elements);
    const int bottoms = rng.between(1, n - 1);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back((i < bottoms ? "u" : "v") + std::to_string(i));
    std::vector<Cover> covers;
    for (int a = 0; a < bottoms; ++a)
      for (int b = bottoms; b < n; ++b)
        if (rng.bernoulli(p)) covers.emplace_back(a, b);
    Poset q = Poset::from_covers(std::move(labels), std::move(covers));
    if (grading(q).rank == 1) return q;
  }
}

}  // namespace ecm
