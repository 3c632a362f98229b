#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here works from raw cover lists and facet masks; none of it
// calls the ecm algorithms it is compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/graph/connected_components.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "ecm/complex.hpp"
#include "ecm/poset.hpp"

namespace oracle {

using Mask = std::uint64_t;
using Relation = std::vector<std::vector<bool>>;

/// Reflexive-transitive closure of a cover list (Floyd–Warshall).
inline Relation closure(int n, const std::vector<std::pair<int, int>>& covers) {
  Relation r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : covers) r[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

inline Relation closure(const ecm::Poset& p) { return closure(p.size(), p.cover_list()); }

/// Covers recomputed from a relation: a < b with nothing strictly between.
inline std::set<std::pair<int, int>> covers_of(const Relation& r) {
  const int n = static_cast<int>(r.size());
  std::set<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !r[a][b]) continue;
      bool between = false;
      for (int c = 0; c < n && !between; ++c) between = c != a && c != b && r[a][c] && r[c][b];
      if (!between) out.emplace(a, b);
    }
  return out;
}

/// Covers of P minus those with both ends in [a, b].
inline std::vector<std::pair<int, int>> minus_interval(const ecm::Poset& p, int a, int b) {
  Relation r = closure(p);
  std::vector<std::pair<int, int>> kept;
  for (auto [x, y] : p.cover_list()) {
    const bool inside = r[a][x] && r[x][b] && r[a][y] && r[y][b];
    if (!inside) kept.emplace_back(x, y);
  }
  return kept;
}

inline bool is_chain(const Relation& r, Mask m) {
  const int n = static_cast<int>(r.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((m >> i & 1) && (m >> j & 1) && !r[i][j] && !r[j][i]) return false;
  return true;
}

/// Maximal chains by enumerating every subset. Only for small n.
inline std::vector<Mask> maximal_chains(const Relation& r) {
  const int n = static_cast<int>(r.size());
  std::vector<Mask> chains;
  for (Mask m = 1; m < (Mask{1} << n); ++m)
    if (is_chain(r, m)) chains.push_back(m);
  std::vector<Mask> out;
  for (Mask m : chains) {
    bool maximal = true;
    for (Mask o : chains) maximal = maximal && !(o != m && (o & m) == m);
    if (maximal) out.push_back(m);
  }
  if (out.empty()) out.push_back(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Mask> sorted(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline int bits(Mask m) { return __builtin_popcountll(m); }

/// Every face of the complex generated by `facets`, the empty face included.
inline std::set<Mask> faces(const std::vector<Mask>& facets) {
  std::set<Mask> out;
  for (Mask f : facets)
    for (Mask s = f;; s = (s - 1) & f) {
      out.insert(s);
      if (s == 0) break;
    }
  return out;
}

using Rational = boost::multiprecision::cpp_rational;

inline std::size_t rank_q(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank_mod(std::vector<std::vector<long long>> m, long long p) {
  auto inv = [p](long long a) {
    long long r = 1, e = p - 2;
    for (a %= p; e; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  };
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    long long iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long long f = m[r][c] * iv % p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Reduced Betti numbers b~_{-1..dim} of the augmented chain complex, over Q
/// (p == 0) or GF(p). Index 0 of the result is dimension -1.
inline std::vector<long long> reduced_betti(const std::vector<Mask>& facets, long long p = 0) {
  std::set<Mask> all = faces(facets);
  int dim = -1;
  for (Mask f : all) dim = std::max(dim, bits(f) - 1);
  std::vector<std::vector<Mask>> by_dim(dim + 2);
  for (Mask f : all) by_dim[bits(f)].push_back(f);
  // rank of boundary from dimension d to d-1, d = 0..dim
  std::vector<std::size_t> rk(dim + 2, 0);
  for (int d = 0; d <= dim; ++d) {
    const auto& hi = by_dim[d + 1];
    const auto& lo = by_dim[d];
    std::map<Mask, std::size_t> row;
    for (std::size_t i = 0; i < lo.size(); ++i) row[lo[i]] = i;
    std::vector<std::vector<long long>> m(lo.size(), std::vector<long long>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j) {
      int sign = 1;
      for (int v = 0; v < 64; ++v) {
        if (!(hi[j] >> v & 1)) continue;
        m[row[hi[j] & ~(Mask{1} << v)]][j] = sign;
        sign = -sign;
      }
    }
    if (p == 0) {
      std::vector<std::vector<Rational>> q(m.size(), std::vector<Rational>(hi.size()));
      for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < hi.size(); ++c) q[r][c] = m[r][c];
      rk[d + 1] = rank_q(q);
    } else {
      rk[d + 1] = rank_mod(m, p);
    }
  }
  std::vector<long long> out;
  for (int d = -1; d <= dim; ++d) {
    long long count = static_cast<long long>(by_dim[d + 1].size());
    long long down = static_cast<long long>(rk[d + 1]);
    long long up = d + 2 <= dim + 1 ? static_cast<long long>(rk[d + 2]) : 0;
    out.push_back(count - down - up);
  }
  return out;
}

inline std::vector<long long> reduced_betti(const ecm::SimplicialComplex& c, long long p = 0) {
  return reduced_betti(c.facets(), p);
}

/// Sum of (-1)^i f_i over i >= -1 equals sum of (-1)^i b~_i.
inline bool euler_poincare(const std::vector<Mask>& facets, long long p = 0) {
  long long chi_f = 0, chi_b = 0;
  for (Mask f : faces(facets)) chi_f += (bits(f) - 1) % 2 == 0 ? 1 : -1;
  auto b = reduced_betti(facets, p);
  for (std::size_t i = 0; i < b.size(); ++i) chi_b += (static_cast<int>(i) - 1) % 2 == 0 ? b[i] : -b[i];
  return chi_f == chi_b;
}

/// Cohen–Macaulay by the link definition, over Q.
inline bool cm_by_links(const std::vector<Mask>& facets) {
  int dim = -1;
  for (Mask f : facets) dim = std::max(dim, bits(f) - 1);
  for (Mask f : facets)
    if (bits(f) - 1 != dim) return false;
  for (Mask face : faces(facets)) {
    std::vector<Mask> lk;
    for (Mask g : facets)
      if ((g & face) == face) lk.push_back(g & ~face);
    auto b = reduced_betti(lk);
    const int ld = dim - bits(face);
    for (int i = -1; i < ld; ++i)
      if (b[i + 1] != 0) return false;
  }
  return true;
}

/// Each facet after the first meets the union of its predecessors in a pure
/// complex of codimension one.
inline bool valid_shelling(const std::vector<Mask>& ordered) {
  for (std::size_t j = 1; j < ordered.size(); ++j) {
    const Mask fj = ordered[j];
    for (Mask s : faces({fj})) {
      bool covered = false;
      for (std::size_t i = 0; i < j && !covered; ++i) covered = (s & ordered[i]) == s;
      if (!covered) continue;
      // every maximal face of the intersection must be a ridge of fj
      bool extends_to_ridge = false;
      for (int v = 0; v < 64 && !extends_to_ridge; ++v) {
        if (!(fj >> v & 1) || (s >> v & 1)) continue;
        const Mask ridge = fj & ~(Mask{1} << v);
        if ((ridge & s) != s) continue;
        for (std::size_t i = 0; i < j && !extends_to_ridge; ++i) extends_to_ridge = (ridge & ordered[i]) == ridge;
      }
      if (!extends_to_ridge) return false;
    }
  }
  return true;
}

/// Möbius function from the defining recursion.
inline std::vector<std::vector<long long>> mobius(const Relation& r) {
  const int n = static_cast<int>(r.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> below(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r[j][i]) ++below[i];
  std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
  std::vector<std::vector<long long>> mu(n, std::vector<long long>(n, 0));
  for (int x = 0; x < n; ++x) {
    for (int y : order) {
      if (!r[x][y]) continue;
      if (x == y) {
        mu[x][y] = 1;
        continue;
      }
      long long s = 0;
      for (int z = 0; z < n; ++z)
        if (z != y && r[x][z] && r[z][y]) s += mu[x][z];
      mu[x][y] = -s;
    }
  }
  return mu;
}

// Graph view of a rank-one poset.

using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

inline Graph hasse_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) boost::add_edge(a, b, g);
  return g;
}

inline bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return false;
  Graph g = hasse_graph(n, edges);
  std::vector<int> comp(n);
  return boost::connected_components(g, comp.data()) == 1;
}

/// At least three vertices, connected, no articulation point.
inline bool two_vertex_connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 3 || !connected(n, edges)) return false;
  Graph g = hasse_graph(n, edges);
  std::vector<std::size_t> cut;
  boost::articulation_points(g, std::back_inserter(cut));
  return cut.empty();
}

/// Connected and every single-edge deletion stays connected.
inline bool two_edge_connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (!connected(n, edges) || edges.empty()) return false;
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    std::vector<std::pair<int, int>> rest;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (i != skip) rest.push_back(edges[i]);
    if (!connected(n, rest)) return false;
  }
  return true;
}

}  // namespace oracle
