#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <vector>


#include "ecm/bigint.hpp"
#include "ecm/complex.hpp"

namespace ecm {

/// Coefficient field: the rationals or GF(p) for a prime p < 2^31.
class FieldSpec {
public:
  static FieldSpec rationals() { return FieldSpec(0); }

  static FieldSpec prime(std::uint32_t p) {
    if (p < 2 || p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
      throw Error(ErrorCode::BadParams, std::to_string(p) + " is not a prime below 2^31");
    }
    return FieldSpec(p);
  }

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  std::string name() const { return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(FieldSpec a, FieldSpec b) { return a.p_ == b.p_; }
  friend bool operator<(FieldSpec a, FieldSpec b) { return a.p_ < b.p_; }

private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}

  static bool is_prime(std::uint32_t p) {
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  std::uint32_t p_;
};

/// Reduced Betti numbers b~_{-1}, b~_0, ..., b~_dim.
struct BettiVector {
  std::vector<std::size_t> values;

  int top_dim() const { return static_cast<int>(values.size()) - 2; }

  std::size_t at(int i) const {
    if (i < -1 || i > top_dim()) return 0;
    return values[static_cast<std::size_t>(i + 1)];
  }

  bool acyclic() const {
    for (auto v : values)
      if (v) return false;
    return true;
  }

  /// Smallest i < bound with b~_i != 0, if any.
  std::optional<int> first_nonzero_below(int bound) const {
    for (int i = -1; i < bound && i <= top_dim(); ++i)
      if (at(i)) return i;
    return std::nullopt;
  }

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

namespace detail {

inline std::size_t rank_gf2(const std::vector<std::vector<int>>& cols, std::size_t rows) {
  const std::size_t words = (rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis(rows);
  std::size_t rank = 0;
  std::vector<std::uint64_t> v(words);
  for (const auto& col : cols) {
    std::fill(v.begin(), v.end(), 0);
    for (int r : col) v[r / 64] ^= std::uint64_t{1} << (r % 64);
    while (true) {
      std::size_t w = 0;
      while (w < words && !v[w]) ++w;
      if (w == words) break;
      std::size_t pivot = w * 64 + std::countr_zero(v[w]);
      if (basis[pivot].empty()) {
        basis[pivot] = v;
        ++rank;
        break;
      }
      for (std::size_t k = w; k < words; ++k) v[k] ^= basis[pivot][k];
    }
  }
  return rank;
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Column (row index, sign) pairs; sign is +1 or -1.
using SignedColumn = std::vector<std::pair<int, int>>;

inline std::size_t rank_mod_p(const std::vector<SignedColumn>& cols, std::size_t rows, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> basis(rows);
  std::size_t rank = 0;
  std::vector<std::uint64_t> v(rows);
  for (const auto& col : cols) {
    std::fill(v.begin(), v.end(), 0);
    for (auto [r, s] : col) v[r] = s > 0 ? 1 : p - 1;
    std::size_t start = 0;
    while (true) {
      while (start < rows && !v[start]) ++start;
      if (start == rows) break;
      if (basis[start].empty()) {
        std::uint64_t inv = pow_mod(v[start], p - 2, p);
        for (std::size_t k = start; k < rows; ++k) v[k] = v[k] * inv % p;
        basis[start] = v;
        ++rank;
        break;
      }
      std::uint64_t f = v[start];
      const auto& b = basis[start];
      for (std::size_t k = start; k < rows; ++k)
        if (b[k]) v[k] = (v[k] + (p - f) * b[k]) % p;
    }
  }
  return rank;
}

/// Fraction-free (Bareiss) elimination. Returns false if T overflowed.
template <typename T>
bool bareiss_rank(std::vector<std::vector<T>> m, std::size_t& rank_out) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  T prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const T& pv = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          __int128 num = static_cast<__int128>(pv) * m[i][j] - static_cast<__int128>(m[i][c]) * m[rank][j];
          __int128 q = num / prev;
          if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min()) {
            return false;
          }
          m[i][j] = static_cast<std::int64_t>(q);
        } else {
          m[i][j] = (pv * m[i][j] - m[i][c] * m[rank][j]) / prev;
        }
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  rank_out = rank;
  return true;
}

inline std::size_t rank_rational(const std::vector<SignedColumn>& cols, std::size_t rows) {
  if (cols.empty() || rows == 0) return 0;
  // Rows of the transposed matrix: one per column, so rows stay short.
  std::vector<std::vector<std::int64_t>> m(cols.size(), std::vector<std::int64_t>(rows, 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto [r, s] : cols[j]) m[j][r] = s;
  std::size_t rank = 0;
  if (bareiss_rank(m, rank)) return rank;
  std::vector<std::vector<BigInt>> big(cols.size(), std::vector<BigInt>(rows));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t r = 0; r < rows; ++r) big[j][r] = m[j][r];
  bareiss_rank(big, rank);
  return rank;
}

/// Facets relabelled onto vertices 0..k-1 in ground order.
inline std::vector<Mask> compressed_facets(const SimplicialComplex& c) {
  std::vector<int> map(kMaxElements, -1);
  int next = 0;
  for_each_bit(c.vertices(), [&](int v) { map[v] = next++; });
  std::vector<Mask> out;
  for (Mask f : c.facets()) {
    Mask g = 0;
    for_each_bit(f, [&](int v) { g |= bit(map[v]); });
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Rank of the boundary map from d-faces to (d-1)-faces, d >= 0.
inline std::size_t boundary_rank(const std::vector<Mask>& d_faces, const std::vector<Mask>& lower_faces,
                                 FieldSpec field) {
  if (d_faces.empty() || lower_faces.empty()) return 0;
  std::vector<detail::SignedColumn> cols;
  cols.reserve(d_faces.size());
  for (Mask f : d_faces) {
    detail::SignedColumn col;
    int i = 0;
    for_each_bit(f, [&](int v) {
      Mask g = f & ~bit(v);
      auto it = std::lower_bound(lower_faces.begin(), lower_faces.end(), g);
      col.emplace_back(static_cast<int>(it - lower_faces.begin()), (i % 2 == 0) ? 1 : -1);
      ++i;
    });
    cols.push_back(std::move(col));
  }
  if (field.characteristic() == 2) {
    std::vector<std::vector<int>> plain;
    for (const auto& c : cols) {
      std::vector<int> rows;
      for (auto [r, s] : c) rows.push_back(r);
      plain.push_back(std::move(rows));
    }
    return detail::rank_gf2(plain, lower_faces.size());
  }
  if (field.is_rational()) return detail::rank_rational(cols, lower_faces.size());
  return detail::rank_mod_p(cols, lower_faces.size(), field.characteristic());
}

/// Reduced homology of the augmented chain complex (∅ spans C_{-1}).
inline BettiVector reduced_betti(const SimplicialComplex& c, FieldSpec field) {
  std::vector<Mask> facets = detail::compressed_facets(c);
  const int dim = c.dim();
  std::vector<std::vector<Mask>> faces;  // faces[d + 1]
  {
    std::vector<std::string> ground(static_cast<std::size_t>(popcount(c.vertices())));
    SimplicialComplex k(std::move(ground), facets);
    for (int d = -1; d <= dim; ++d) faces.push_back(k.faces_of_dim(d));
  }
  // ranks[d + 1] = rank of the boundary out of dimension d; zero for d = -1.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim + 3), 0);
  for (int d = 0; d <= dim; ++d) ranks[d + 1] = boundary_rank(faces[d + 1], faces[d], field);
  BettiVector b;
  for (int d = -1; d <= dim; ++d) {
    std::size_t f = faces[d + 1].size();
    b.values.push_back(f - ranks[d + 1] - ranks[d + 2]);
  }
  return b;
}

inline bool is_acyclic(const SimplicialComplex& c, FieldSpec field) { return reduced_betti(c, field).acyclic(); }

/// Thread-safe memo of Betti vectors keyed by (field, relabelled facets).
class BettiCache {
public:
  BettiVector get(const SimplicialComplex& c, FieldSpec field) {
    auto key = std::make_pair(field.characteristic(), detail::compressed_facets(c));
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        ++hits_;
        return it->second;
      }
    }
    BettiVector b = reduced_betti(c, field);
    std::lock_guard lock(mutex_);
    memo_.emplace(std::move(key), b);
    return b;
  }

  std::size_t hits() const {
    std::lock_guard lock(mutex_);
    return hits_;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
  }

private:
  mutable std::mutex mutex_;
  std::map<std::pair<std::uint32_t, std::vector<Mask>>, BettiVector> memo_;
  std::size_t hits_ = 0;
};

}  // namespace ecm
