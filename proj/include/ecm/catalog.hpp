#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ecm/poset.hpp"

namespace ecm::catalog {

inline std::string set_label(const std::vector<std::string>& names, Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) s += ",";
    s += names[i];
    first = false;
  });
  return s + "}";
}

/// Poset on `sets` ordered by inclusion, elements in the given order.
inline Poset inclusion_poset(const std::vector<Mask>& sets, std::vector<std::string> labels) {
  const int n = static_cast<int>(sets.size());
  std::vector<Cover> covers;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !is_subset(sets[a], sets[b]) || sets[a] == sets[b]) continue;
      bool between = false;
      for (int c = 0; c < n && !between; ++c) {
        between = c != a && c != b && sets[c] != sets[a] && sets[c] != sets[b] && is_subset(sets[a], sets[c]) &&
                  is_subset(sets[c], sets[b]);
      }
      if (!between) covers.emplace_back(a, b);
    }
  }
  return Poset::from_covers(std::move(labels), std::move(covers));
}

/// B_n: subsets of {1..n} by inclusion, in mask order.
inline Poset boolean(int n) {
  if (n < 0 || (Mask{1} << n) > static_cast<Mask>(kMaxElements)) {
    throw Error(ErrorCode::BadParams, "boolean(n) needs 0 <= n <= 6");
  }
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  std::vector<Mask> sets;
  std::vector<std::string> labels;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    sets.push_back(m);
    labels.push_back(set_label(names, m));
  }
  return inclusion_poset(sets, std::move(labels));
}

/// n-element chain c0 < c1 < ... .
inline Poset chain(int n) {
  if (n < 1 || n > kMaxElements) throw Error(ErrorCode::BadParams, "chain(n) needs 1 <= n <= 64");
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  for (int i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i) covers.emplace_back(i - 1, i);
  }
  return Poset::from_covers(std::move(labels), std::move(covers));
}

inline Poset antichain(int k, const std::string& prefix = "a") {
  if (k < 1 || k > kMaxElements) throw Error(ErrorCode::BadParams, "antichain(k) needs 1 <= k <= 64");
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back(prefix + std::to_string(i));
  return Poset::from_covers(std::move(labels), {});
}

/// Ordinal sum of n copies of the k-antichain; level i is labelled by the
/// i-th letter of `letters`.
inline Poset stacked_antichains(int n, int k, const std::string& letters = "abcdefghijklmnopqrstuvwxyz") {
  if (n < 1 || k < 1 || n > static_cast<int>(letters.size()) || n * k > kMaxElements) {
    throw Error(ErrorCode::BadParams, "stacked_antichains(n,k) needs n,k >= 1 and n*k <= 64");
  }
  Poset p = antichain(k, std::string(1, letters[0]));
  for (int i = 1; i < n; ++i) p = ordinal_sum(p, antichain(k, std::string(1, letters[i])));
  return p;
}

/// Face lattice of a polytope given by the vertex sets of its facets: the
/// nonempty intersections of facets, plus 0^ = {} and a top "1^".
inline Poset face_lattice(const std::vector<std::string>& vertex_names, const std::vector<Mask>& facets) {
  std::vector<Mask> faces(facets.begin(), facets.end());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Mask m = faces[i] & faces[j];
      if (m && std::find(faces.begin(), faces.end(), m) == faces.end()) faces.push_back(m);
    }
  }
  std::sort(faces.begin(), faces.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Mask> sets{0};
  std::vector<std::string> labels{"{}"};
  for (Mask f : faces) {
    sets.push_back(f);
    labels.push_back(set_label(vertex_names, f));
  }
  sets.push_back(low_bits(static_cast<int>(vertex_names.size())) | (Mask{1} << 63));
  labels.push_back("1^");
  if (sets.size() > static_cast<std::size_t>(kMaxElements)) {
    throw Error(ErrorCode::TooManyElements, "face lattice exceeds 64 elements");
  }
  return inclusion_poset(sets, std::move(labels));
}

/// Face lattice of a simplicial complex: every nonempty face, plus {} and 1^.
inline Poset complex_face_lattice(const std::vector<std::string>& vertex_names, const std::vector<Mask>& facets) {
  std::vector<Mask> faces;
  for (Mask f : facets) {
    for (Mask s = f; s; s = (s - 1) & f) faces.push_back(s);
  }
  // Closed under subsets, hence under intersection; the polytope builder
  // then orders and labels identically.
  return face_lattice(vertex_names, faces);
}

inline std::vector<std::string> letter_names(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
  return v;
}

inline std::vector<std::string> number_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return v;
}

/// Boundary of the n-gon on vertices 1..n.
inline Poset ngon(int n) {
  if (n < 3) throw Error(ErrorCode::BadParams, "ngon(n) needs n >= 3");
  std::vector<Mask> facets;
  for (int i = 0; i < n; ++i) facets.push_back(bit(i) | bit((i + 1) % n));
  return face_lattice(number_names(n), facets);
}

inline Poset tetrahedron() {
  std::vector<Mask> facets;
  for (int i = 0; i < 4; ++i) facets.push_back(low_bits(4) & ~bit(i));
  return face_lattice(number_names(4), facets);
}

/// Octahedron with antipodal vertex pairs (1,2), (3,4), (5,6).
inline Poset octahedron() {
  std::vector<Mask> facets;
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5}) facets.push_back(bit(x) | bit(y) | bit(z));
  return face_lattice(number_names(6), facets);
}

/// 3-cube on vertices 1..8 (vertex i+1 has coordinates given by the bits of i).
inline Poset cube() {
  std::vector<Mask> facets;
  for (int axis = 0; axis < 3; ++axis) {
    for (int side = 0; side < 2; ++side) {
      Mask f = 0;
      for (int v = 0; v < 8; ++v)
        if (((v >> axis) & 1) == side) f |= bit(v);
      facets.push_back(f);
    }
  }
  return face_lattice(number_names(8), facets);
}

/// Π_n: set partitions of {1..n} ordered by refinement (finest at the bottom).
inline Poset partition(int n) {
  if (n < 1 || n > 5) throw Error(ErrorCode::BadParams, "partition(n) needs 1 <= n <= 5");
  // Restricted growth strings enumerate each partition once.
  std::vector<std::vector<Mask>> parts;
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      std::vector<Mask> p(blocks, 0);
      for (int j = 0; j < n; ++j) p[rgs[j]] |= bit(j);
      std::sort(p.begin(), p.end());
      parts.push_back(std::move(p));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  auto label = [&](const std::vector<Mask>& p) {
    std::vector<std::string> blocks;
    for (Mask b : p) {
      std::string s;
      for_each_bit(b, [&](int j) { s += std::to_string(j + 1); });
      blocks.push_back(s);
    }
    std::sort(blocks.begin(), blocks.end());
    std::string out;
    for (const auto& s : blocks) out += (out.empty() ? "" : "|") + s;
    return out;
  };
  std::sort(parts.begin(), parts.end(), [&](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() > y.size() : label(x) < label(y);
  });
  std::vector<std::string> labels;
  for (const auto& p : parts) labels.push_back(label(p));
  auto refines = [](const std::vector<Mask>& fine, const std::vector<Mask>& coarse) {
    for (Mask b : fine) {
      bool inside = false;
      for (Mask c : coarse) inside = inside || is_subset(b, c);
      if (!inside) return false;
    }
    return true;
  };
  std::vector<Cover> covers;
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = 0; b < parts.size(); ++b)
      if (parts[a].size() == parts[b].size() + 1 && refines(parts[a], parts[b]))
        covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Poset::from_covers(std::move(labels), std::move(covers));
}

/// Divisors of m ordered by divisibility.
inline Poset divisor(int m) {
  if (m < 1) throw Error(ErrorCode::BadParams, "divisor(m) needs m >= 1");
  std::vector<int> divs;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) divs.push_back(d);
  if (divs.size() > static_cast<std::size_t>(kMaxElements)) {
    throw Error(ErrorCode::TooManyElements, "divisor lattice exceeds 64 elements");
  }
  auto is_prime = [](int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) return false;
    return true;
  };
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  for (std::size_t a = 0; a < divs.size(); ++a) {
    labels.push_back(std::to_string(divs[a]));
    for (std::size_t b = 0; b < divs.size(); ++b)
      if (divs[b] % divs[a] == 0 && is_prime(divs[b] / divs[a]))
        covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return Poset::from_covers(std::move(labels), std::move(covers));
}

/// Lattice of flats of the uniform matroid U_{r,n}: subsets of {1..n} of size
/// below r, plus the whole ground set.
inline Poset uniform_matroid(int r, int n) {
  if (r < 1 || n < r || n > 6) throw Error(ErrorCode::BadParams, "uniform_matroid(r,n) needs 1 <= r <= n <= 6");
  std::vector<Mask> sets;
  for (int size = 0; size < r; ++size)
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if (popcount(m) == size) sets.push_back(m);
  sets.push_back(low_bits(n));
  if (sets.size() > static_cast<std::size_t>(kMaxElements)) {
    throw Error(ErrorCode::TooManyElements, "lattice of flats exceeds 64 elements");
  }
  std::vector<std::string> labels;
  for (Mask m : sets) labels.push_back(set_label(number_names(n), m));
  return inclusion_poset(sets, std::move(labels));
}

/// Three stacked 2-antichains a1,a2 | b1,b2 | c1,c2.
inline Poset fig1() { return stacked_antichains(3, 2); }

/// Rank-1 poset: two 4-cycles a-t1-b1-t2 and a-t3-b2-t4 glued at the minimal
/// element a. 2-edge-connected, but a is a cut vertex.
inline Poset fig2_standin() {
  return build_poset({"a", "b1", "b2", "t1", "t2", "t3", "t4"},
                     {{"a", "t1"}, {"a", "t2"}, {"a", "t3"}, {"a", "t4"},
                      {"b1", "t1"}, {"b1", "t2"}, {"b2", "t3"}, {"b2", "t4"}});
}

/// Cut vertex of fig2_standin.
inline const std::string& fig2_apex() {
  static const std::string apex = "a";
  return apex;
}

/// Ordinal sum of fig2_standin with a 2-antichain on top.
inline Poset remark36_q() { return ordinal_sum(fig2_standin(), antichain(2)); }

/// Two 2-antichains (levels x, y) below fig2_standin.
inline Poset remark37b() { return ordinal_sum(stacked_antichains(2, 2, "xy"), fig2_standin()); }

/// Face lattice of the complex generated by all proper subsets of {a,b,c,d}
/// and of {b,c,d,e}.
inline Poset sec5_lattice() {
  std::vector<Mask> facets;
  const Mask abcd = low_bits(4), bcde = low_bits(5) & ~bit(0);
  for (Mask whole : {abcd, bcde})
    for_each_bit(whole, [&](int v) { facets.push_back(whole & ~bit(v)); });
  return complex_face_lattice(letter_names(5), facets);
}

/// Family names accepted by generate().
inline std::vector<std::string> families() {
  return {"boolean", "chain", "antichain", "stacked_antichains", "ngon", "square", "tetrahedron",
          "octahedron", "cube", "partition", "divisor", "uniform_matroid", "fig1", "fig2_standin", "remark36_Q",
          "remark37b", "sec5_lattice"};
}

inline Poset generate(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorCode::BadParams, name + " takes " + std::to_string(count) + " integer parameter(s)");
    }
  };
  if (name == "boolean") return need(1), boolean(params[0]);
  if (name == "chain") return need(1), chain(params[0]);
  if (name == "antichain") return need(1), antichain(params[0]);
  if (name == "stacked_antichains") return need(2), stacked_antichains(params[0], params[1]);
  if (name == "ngon") return need(1), ngon(params[0]);
  if (name == "square") return need(0), ngon(4);
  if (name == "tetrahedron") return need(0), tetrahedron();
  if (name == "octahedron") return need(0), octahedron();
  if (name == "cube") return need(0), cube();
  if (name == "partition") return need(1), partition(params[0]);
  if (name == "divisor") return need(1), divisor(params[0]);
  if (name == "uniform_matroid") return need(2), uniform_matroid(params[0], params[1]);
  if (name == "fig1") return need(0), fig1();
  if (name == "fig2_standin") return need(0), fig2_standin();
  if (name == "remark36_Q") return need(0), remark36_q();
  if (name == "remark37b") return need(0), remark37b();
  if (name == "sec5_lattice") return need(0), sec5_lattice();
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + name + "'");
}

/// Named desk-scale instances used by sweeps and tests.
inline std::vector<std::pair<std::string, Poset>> entries() {
  std::vector<std::pair<std::string, Poset>> out;
  auto add = [&](std::string name, Poset p) { out.emplace_back(std::move(name), std::move(p)); };
  for (int n = 1; n <= 4; ++n) add("chain(" + std::to_string(n) + ")", chain(n));
  add("antichain(2)", antichain(2));
  add("antichain(3)", antichain(3));
  for (int n = 1; n <= 4; ++n) add("boolean(" + std::to_string(n) + ")", boolean(n));
  for (int n = 2; n <= 4; ++n) add("proper boolean(" + std::to_string(n) + ")", proper_part(boolean(n)));
  add("stacked_antichains(2,2)", stacked_antichains(2, 2));
  add("stacked_antichains(2,3)", stacked_antichains(2, 3));
  add("fig1", fig1());
  add("fig2_standin", fig2_standin());
  add("remark36_Q", remark36_q());
  add("remark37b", remark37b());
  add("square", ngon(4));
  add("proper square", proper_part(ngon(4)));
  add("proper pentagon", proper_part(ngon(5)));
  add("tetrahedron", tetrahedron());
  add("proper tetrahedron", proper_part(tetrahedron()));
  add("proper octahedron", proper_part(octahedron()));
  add("proper cube", proper_part(cube()));
  add("partition(3)", partition(3));
  add("partition(4)", partition(4));
  add("proper partition(4)", proper_part(partition(4)));
  add("divisor(12)", divisor(12));
  add("proper divisor(12)", proper_part(divisor(12)));
  add("uniform_matroid(3,4)", uniform_matroid(3, 4));
  add("proper uniform_matroid(3,5)", proper_part(uniform_matroid(3, 5)));
  add("sec5_lattice", sec5_lattice());
  add("proper sec5_lattice", proper_part(sec5_lattice()));
  return out;
}

}  // namespace ecm::catalog
