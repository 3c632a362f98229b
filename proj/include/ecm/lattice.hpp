#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ecm/bigint.hpp"
#include "ecm/poset.hpp"

namespace ecm {

/// n x n table of element indices.
using PairTable = std::vector<std::vector<int>>;

struct LatticeStructure {
  bool is_lattice = false;
  std::optional<PairTable> meet;
  std::optional<PairTable> join;
};

namespace detail {

/// Least element of `candidates` in the order of p, if it is below all of them.
inline int least_of(const Poset& p, Mask candidates) {
  int found = -1;
  for_each_bit(candidates, [&](int z) {
    if (found < 0 && is_subset(candidates, p.up(z))) found = z;
  });
  return found;
}

inline int greatest_of(const Poset& p, Mask candidates) {
  int found = -1;
  for_each_bit(candidates, [&](int z) {
    if (found < 0 && is_subset(candidates, p.down(z))) found = z;
  });
  return found;
}

}  // namespace detail

inline LatticeStructure lattice_structure(const Poset& p) {
  const int n = p.size();
  if (n == 0) return {};
  PairTable meet(n, std::vector<int>(n, -1)), join(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      int j = detail::least_of(p, p.up(x) & p.up(y));
      int m = detail::greatest_of(p, p.down(x) & p.down(y));
      if (j < 0 || m < 0) return {};
      join[x][y] = join[y][x] = j;
      meet[x][y] = meet[y][x] = m;
    }
  }
  return {true, std::move(meet), std::move(join)};
}

struct LatticeClasses {
  bool atomic = false;
  bool relatively_atomic = false;
  bool semimodular = false;
  bool geometric = false;
};

/// Structural flags of a finite lattice. Throws NotALattice otherwise.
inline LatticeClasses lattice_classes(const Poset& p) {
  LatticeStructure ls = lattice_structure(p);
  if (!ls.is_lattice) throw Error(ErrorCode::NotALattice, "poset is not a lattice");
  const auto& join = *ls.join;
  const auto& meet = *ls.meet;
  const int n = p.size();

  // Join of the elements covering x that lie below z, for every x <= z.
  auto atomic_over = [&](int x) {
    Mask atoms = p.upper_covers(x);
    for (int z = 0; z < n; ++z) {
      if (!p.lt(x, z)) continue;
      int acc = x;
      for_each_bit(atoms & p.down(z), [&](int a) { acc = join[acc][a]; });
      if (acc != z) return false;
    }
    return true;
  };

  LatticeClasses c;
  int bottom = *minimum(p);
  c.atomic = atomic_over(bottom);
  c.relatively_atomic = true;
  for (int x = 0; x < n && c.relatively_atomic; ++x) c.relatively_atomic = atomic_over(x);

  c.semimodular = true;
  for (int x = 0; x < n && c.semimodular; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p.covers(meet[x][y], x) && !p.covers(y, join[x][y])) {
        c.semimodular = false;
        break;
      }
    }
  }
  c.geometric = c.atomic && c.semimodular;
  return c;
}

/// mu(x, y) for every comparable pair x <= y.
class MobiusTable {
public:
  MobiusTable() = default;
  explicit MobiusTable(int n) : n_(n) {}

  const BigInt& at(int x, int y) const {
    auto it = values_.find({x, y});
    if (it == values_.end()) throw Error(ErrorCode::NotComparable, "mobius value requested for x not <= y");
    return it->second;
  }

  void set(int x, int y, BigInt v) { values_[{x, y}] = std::move(v); }

  const std::map<std::pair<int, int>, BigInt>& values() const { return values_; }
  int size() const { return n_; }

private:
  int n_ = 0;
  std::map<std::pair<int, int>, BigInt> values_;
};

struct MobiusResult {
  MobiusTable table;
  bool nowhere_zero = true;
  /// First pair (x, y) with mu(x, y) = 0, in index order.
  std::optional<std::pair<int, int>> zero_at;
};

inline MobiusResult mobius_function(const Poset& p) {
  const int n = p.size();
  MobiusResult r{MobiusTable(n), true, std::nullopt};
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return popcount(p.down(a)) < popcount(p.down(b)); });
  for (int x = 0; x < n; ++x) {
    std::vector<BigInt> mu(n);
    for (int y : order) {
      if (!p.leq(x, y)) continue;
      if (y == x) {
        mu[y] = 1;
      } else {
        BigInt sum = 0;
        for_each_bit(p.up(x) & p.down(y) & ~bit(y), [&](int z) { sum += mu[z]; });
        mu[y] = -sum;
      }
      r.table.set(x, y, mu[y]);
    }
  }
  for (const auto& [xy, v] : r.table.values()) {
    if (v == 0) {
      r.nowhere_zero = false;
      r.zero_at = xy;
      break;
    }
  }
  return r;
}

}  // namespace ecm
