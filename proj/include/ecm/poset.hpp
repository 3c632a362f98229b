#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ecm/error.hpp"
#include "ecm/mask.hpp"

namespace ecm {

/// Directed cover (lower, upper) by element index.
using Cover = std::pair<int, int>;

/// Finite poset on at most 64 elements, given by its Hasse diagram.
///
/// The order closure is computed once at construction; every comparison
/// afterwards is a mask lookup. Values are immutable once built.
class Poset {
public:
  Poset() = default;

  /// Validates labels and covers, computes the closure. Throws ecm::Error on
  /// cycles, redundant (non-Hasse) covers, duplicate labels or more than 64
  /// elements.
  static Poset from_covers(std::vector<std::string> labels, std::vector<Cover> covers) {
    const int n = static_cast<int>(labels.size());
    if (n > kMaxElements) {
      throw Error(ErrorCode::TooManyElements, std::to_string(n) + " elements exceed the 64-element cap");
    }
    Poset p;
    p.labels_ = std::move(labels);
    for (int i = 0; i < n; ++i) {
      if (!p.index_.emplace(p.labels_[i], i).second) {
        throw Error(ErrorCode::DuplicateLabel, "label '" + p.labels_[i] + "' appears twice");
      }
    }
    p.cover_up_.assign(n, 0);
    p.cover_down_.assign(n, 0);
    for (auto [a, b] : covers) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw Error(ErrorCode::UnknownLabel, "cover references index outside the ground set");
      }
      if (a == b) {
        throw Error(ErrorCode::CycleDetected, "self-cover on '" + p.labels_[a] + "'");
      }
      p.cover_up_[a] |= bit(b);
      p.cover_down_[b] |= bit(a);
    }

    // Kahn's algorithm; leftovers mean a directed cycle.
    std::vector<int> indeg(n);
    for (int i = 0; i < n; ++i) indeg[i] = popcount(p.cover_down_[i]);
    std::vector<int> order;
    order.reserve(n);
    for (int i = 0; i < n; ++i)
      if (indeg[i] == 0) order.push_back(i);
    for (std::size_t k = 0; k < order.size(); ++k) {
      for_each_bit(p.cover_up_[order[k]], [&](int j) {
        if (--indeg[j] == 0) order.push_back(j);
      });
    }
    if (static_cast<int>(order.size()) != n) {
      throw Error(ErrorCode::CycleDetected, "cover relation contains a directed cycle");
    }

    p.up_.assign(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Mask m = bit(*it);
      for_each_bit(p.cover_up_[*it], [&](int j) { m |= p.up_[j]; });
      p.up_[*it] = m;
    }
    p.down_.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for_each_bit(p.up_[i], [&](int j) { p.down_[j] |= bit(i); });

    for (int a = 0; a < n; ++a) {
      for_each_bit(p.cover_up_[a], [&](int b) {
        Mask between = (p.up_[a] & p.down_[b]) & ~(bit(a) | bit(b));
        if (between) {
          throw Error(ErrorCode::RedundantCover, "cover (" + p.labels_[a] + ", " + p.labels_[b] +
                                                     ") is implied by transitivity");
        }
      });
    }
    return p;
  }

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  Mask ground() const { return low_bits(size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }

  std::optional<int> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw Error(ErrorCode::UnknownLabel, "no element named '" + name + "'");
    return *i;
  }

  bool leq(int a, int b) const { return contains(up_[a], b); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  bool covers(int a, int b) const { return contains(cover_up_[a], b); }

  /// Elements >= a (including a).
  Mask up(int a) const { return up_[a]; }
  /// Elements <= a (including a).
  Mask down(int a) const { return down_[a]; }
  Mask upper_covers(int a) const { return cover_up_[a]; }
  Mask lower_covers(int a) const { return cover_down_[a]; }

  Mask minimal() const {
    Mask m = 0;
    for (int i = 0; i < size(); ++i)
      if (!cover_down_[i]) m |= bit(i);
    return m;
  }

  Mask maximal() const {
    Mask m = 0;
    for (int i = 0; i < size(); ++i)
      if (!cover_up_[i]) m |= bit(i);
    return m;
  }

  /// Sorted list of covers (a, b), meaning b covers a.
  std::vector<Cover> cover_list() const {
    std::vector<Cover> out;
    for (int a = 0; a < size(); ++a)
      for_each_bit(cover_up_[a], [&](int b) { out.emplace_back(a, b); });
    return out;
  }

  std::size_t cover_count() const {
    std::size_t c = 0;
    for (Mask m : cover_up_) c += popcount(m);
    return c;
  }

  /// Induced subposet on `keep`, element order preserved. Covers are those of
  /// the restricted order, not the restriction of the covers.
  Poset induced(Mask keep) const {
    keep &= ground();
    std::vector<int> old_of = bits_of(keep);
    std::vector<int> new_of(size(), -1);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < old_of.size(); ++k) {
      new_of[old_of[k]] = static_cast<int>(k);
      labels.push_back(labels_[old_of[k]]);
    }
    std::vector<Cover> covers;
    for (int a : old_of) {
      Mask above = up_[a] & keep & ~bit(a);
      for_each_bit(above, [&](int b) {
        Mask between = above & down_[b] & ~bit(b);
        if (!between) covers.emplace_back(new_of[a], new_of[b]);
      });
    }
    return from_covers(std::move(labels), std::move(covers));
  }

  friend bool operator==(const Poset& x, const Poset& y) {
    return x.labels_ == y.labels_ && x.cover_up_ == y.cover_up_;
  }

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<Mask> cover_up_;
  std::vector<Mask> cover_down_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

/// Builds a poset from element names and (lower, upper) cover pairs by name.
inline Poset build_poset(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], static_cast<int>(i));
  std::vector<Cover> c;
  c.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = idx.find(lo), b = idx.find(hi);
    if (a == idx.end()) throw Error(ErrorCode::UnknownLabel, "cover references unknown '" + lo + "'");
    if (b == idx.end()) throw Error(ErrorCode::UnknownLabel, "cover references unknown '" + hi + "'");
    c.emplace_back(a->second, b->second);
  }
  return Poset::from_covers(std::move(labels), std::move(c));
}

enum class IntervalKind { closed, open, up_set, down_set };

/// [lo,hi], (lo,hi), P_{>=lo} or P_{<=hi}. For up_set only `lo` is read, for
/// down_set only `hi`.
struct Interval {
  int lo = 0;
  int hi = 0;
  IntervalKind kind = IntervalKind::closed;
};

inline Mask interval_mask(const Poset& p, const Interval& iv) {
  switch (iv.kind) {
    case IntervalKind::up_set: return p.up(iv.lo);
    case IntervalKind::down_set: return p.down(iv.hi);
    case IntervalKind::closed:
    case IntervalKind::open:
      if (!p.leq(iv.lo, iv.hi)) {
        throw Error(ErrorCode::NotComparable, p.label(iv.lo) + " is not below " + p.label(iv.hi));
      }
      if (iv.kind == IntervalKind::closed) return p.up(iv.lo) & p.down(iv.hi);
      return p.up(iv.lo) & p.down(iv.hi) & ~(bit(iv.lo) | bit(iv.hi));
  }
  return 0;
}

inline Poset interval(const Poset& p, const Interval& iv) { return p.induced(interval_mask(p, iv)); }

struct Grading {
  bool graded = true;
  std::optional<int> rank;
};

/// Shortest and longest saturated chain length from a minimal element to
/// each element, following covers.
struct ChainDepths {
  std::vector<int> shortest;
  std::vector<int> longest;
};

inline ChainDepths chain_depths(const Poset& p) {
  const int n = p.size();
  ChainDepths d{std::vector<int>(n, -1), std::vector<int>(n, -1)};
  // Elements sorted by number of elements below them form a linear extension.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return popcount(p.down(a)) < popcount(p.down(b)); });
  for (int x : order) {
    Mask below = p.lower_covers(x);
    if (!below) {
      d.shortest[x] = d.longest[x] = 0;
      continue;
    }
    int lo = n, hi = 0;
    for_each_bit(below, [&](int y) {
      lo = std::min(lo, d.shortest[y] + 1);
      hi = std::max(hi, d.longest[y] + 1);
    });
    d.shortest[x] = lo;
    d.longest[x] = hi;
  }
  return d;
}

/// Graded iff all maximal chains have one common length; the empty poset is
/// graded with no rank.
inline Grading grading(const Poset& p) {
  if (p.empty()) return {true, std::nullopt};
  ChainDepths d = chain_depths(p);
  int lo = p.size(), hi = -1;
  for_each_bit(p.maximal(), [&](int x) {
    lo = std::min(lo, d.shortest[x]);
    hi = std::max(hi, d.longest[x]);
  });
  if (lo != hi) return {false, std::nullopt};
  return {true, hi};
}

/// Rank of each element for a graded poset (length of any chain down to a
/// minimal element). Empty optional when P is not graded.
inline std::optional<std::vector<int>> rank_function(const Poset& p) {
  if (!grading(p).graded) return std::nullopt;
  return chain_depths(p).shortest;
}

inline std::string fresh_label(const Poset& p, std::string base) {
  while (p.find(base)) base += "'";
  return base;
}

inline std::optional<int> minimum(const Poset& p) {
  Mask m = p.minimal();
  if (popcount(m) != 1) return std::nullopt;
  return std::countr_zero(m);
}

inline std::optional<int> maximum(const Poset& p) {
  Mask m = p.maximal();
  if (popcount(m) != 1) return std::nullopt;
  return std::countr_zero(m);
}

inline bool is_bounded(const Poset& p) { return minimum(p) && maximum(p); }

/// P-hat: fresh minimum "0^" first and maximum "1^" last.
inline Poset add_bounds(const Poset& p) {
  const int n = p.size();
  std::vector<std::string> labels;
  labels.reserve(n + 2);
  labels.push_back(fresh_label(p, "0^"));
  for (const auto& s : p.labels()) labels.push_back(s);
  labels.push_back(fresh_label(p, "1^"));
  std::vector<Cover> covers;
  for (auto [a, b] : p.cover_list()) covers.emplace_back(a + 1, b + 1);
  for_each_bit(p.minimal(), [&](int x) { covers.emplace_back(0, x + 1); });
  for_each_bit(p.maximal(), [&](int x) { covers.emplace_back(x + 1, n + 1); });
  if (n == 0) covers.emplace_back(0, 1);
  return Poset::from_covers(std::move(labels), std::move(covers));
}

/// Removes the minimum and maximum of a bounded poset.
inline Poset proper_part(const Poset& p) {
  auto lo = minimum(p), hi = maximum(p);
  if (p.empty() || !lo || !hi) throw Error(ErrorCode::NotBounded, "proper part needs a bounded poset");
  return p.induced(p.ground() & ~(bit(*lo) | bit(*hi)));
}

/// Every element of `lower` below every element of `upper`.
inline Poset ordinal_sum(const Poset& lower, const Poset& upper) {
  const int n = lower.size();
  if (n + upper.size() > kMaxElements) {
    throw Error(ErrorCode::TooManyElements, "ordinal sum exceeds 64 elements");
  }
  std::vector<std::string> labels = lower.labels();
  for (const auto& s : upper.labels()) {
    if (lower.find(s)) throw Error(ErrorCode::LabelClash, "label '" + s + "' appears in both operands");
    labels.push_back(s);
  }
  std::vector<Cover> covers = lower.cover_list();
  for (auto [a, b] : upper.cover_list()) covers.emplace_back(a + n, b + n);
  for_each_bit(lower.maximal(), [&](int a) {
    for_each_bit(upper.minimal(), [&](int b) { covers.emplace_back(a, b + n); });
  });
  return Poset::from_covers(std::move(labels), std::move(covers));
}

inline Poset dual(const Poset& p) {
  std::vector<Cover> covers;
  for (auto [a, b] : p.cover_list()) covers.emplace_back(b, a);
  return Poset::from_covers(p.labels(), std::move(covers));
}

/// Same order, labels rewritten element-wise.
template <typename F>
Poset relabel(const Poset& p, F&& rename) {
  std::vector<std::string> labels;
  for (const auto& s : p.labels()) labels.push_back(rename(s));
  return Poset::from_covers(std::move(labels), p.cover_list());
}

/// Covers (x, y) of P with a <= x and y <= b, i.e. the Hasse edges of [a,b].
inline std::vector<Cover> interval_edges(const Poset& p, int a, int b) {
  if (!p.leq(a, b)) throw Error(ErrorCode::NotComparable, p.label(a) + " is not below " + p.label(b));
  Mask inside = p.up(a) & p.down(b);
  std::vector<Cover> out;
  for (auto c : p.cover_list())
    if (contains(inside, c.first) && contains(inside, c.second)) out.push_back(c);
  return out;
}

/// P with the Hasse edges of the closed interval [a,b] deleted. The remaining
/// covers stay irredundant, so the result's cover set is exactly E(P) minus
/// E([a,b]).
inline Poset remove_interval_edges(const Poset& p, int a, int b) {
  if (!p.leq(a, b)) throw Error(ErrorCode::NotComparable, p.label(a) + " is not below " + p.label(b));
  Mask inside = p.up(a) & p.down(b);
  std::vector<Cover> kept;
  for (auto c : p.cover_list())
    if (!(contains(inside, c.first) && contains(inside, c.second))) kept.push_back(c);
  return Poset::from_covers(p.labels(), std::move(kept));
}

/// Connected components of the (undirected) Hasse diagram restricted to `within`.
inline int hasse_components(const Poset& p, Mask within) {
  within &= p.ground();
  int count = 0;
  Mask seen = 0;
  for_each_bit(within, [&](int s) {
    if (contains(seen, s)) return;
    ++count;
    Mask frontier = bit(s);
    seen |= frontier;
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](int x) { next |= (p.upper_covers(x) | p.lower_covers(x)) & within; });
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
  });
  return count;
}

}  // namespace ecm
