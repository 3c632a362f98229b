#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecm/poset.hpp"

namespace ecm {

/// Finite simplicial complex stored by its facets.
///
/// Faces are masks over a fixed ground set of named vertices; the ground set
/// of a derived complex (link, deletion, ...) is that of its parent, so
/// results stay comparable by mask. The complex {∅} has the single facet 0.
/// The void complex (no faces at all) is not representable.
class SimplicialComplex {
public:
  SimplicialComplex() : facets_{0} {}

  SimplicialComplex(std::vector<std::string> ground, std::vector<Mask> facets) : ground_(std::move(ground)) {
    if (ground_.size() > static_cast<std::size_t>(kMaxElements)) {
      throw Error(ErrorCode::TooManyElements, "complex ground set exceeds 64 vertices");
    }
    if (facets.empty()) throw Error(ErrorCode::VoidComplex, "a complex needs at least the empty face");
    for (Mask f : facets) {
      if (!is_subset(f, low_bits(static_cast<int>(ground_.size())))) {
        throw Error(ErrorCode::BadInput, "facet uses a vertex outside the ground set");
      }
    }
    facets_ = maximal_sets(std::move(facets));
  }

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<Mask>& facets() const { return facets_; }

  Mask vertices() const {
    Mask v = 0;
    for (Mask f : facets_) v |= f;
    return v;
  }

  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }

  bool has_face(Mask f) const {
    for (Mask g : facets_)
      if (is_subset(f, g)) return true;
    return false;
  }

  int dim() const {
    int d = -1;
    for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
    return d;
  }

  /// Faces of dimension d, ascending by mask.
  std::vector<Mask> faces_of_dim(int d) const {
    std::vector<Mask> out;
    if (d == -1) return {0};
    for (Mask f : facets_) {
      if (popcount(f) < d + 1) continue;
      enumerate_subsets(f, d + 1, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// All faces, the empty face included.
  std::vector<Mask> all_faces() const {
    std::vector<Mask> out;
    for (int d = -1; d <= dim(); ++d) {
      auto fd = faces_of_dim(d);
      out.insert(out.end(), fd.begin(), fd.end());
    }
    return out;
  }

  /// f-vector f_{-1}, f_0, ..., f_dim.
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (int d = -1; d <= dim(); ++d) f.push_back(faces_of_dim(d).size());
    return f;
  }

  std::string face_name(Mask f) const {
    std::string s = "{";
    bool first = true;
    for_each_bit(f, [&](int i) {
      if (!first) s += ",";
      s += i < static_cast<int>(ground_.size()) ? ground_[i] : std::to_string(i);
      first = false;
    });
    return s + "}";
  }

  /// Same faces; ground names are not compared.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

private:
  static void enumerate_subsets(Mask f, int size, std::vector<Mask>& out) {
    std::vector<int> v = bits_of(f);
    const int n = static_cast<int>(v.size());
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      Mask m = 0;
      for (int i : idx) m |= bit(v[i]);
      out.push_back(m);
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::vector<std::string> ground_;
  std::vector<Mask> facets_;
};

/// Chains of P; facets are the maximal chains.
inline SimplicialComplex order_complex(const Poset& p) {
  std::vector<Mask> chains;
  // Every maximal chain is a Hasse path from a minimal to a maximal element.
  auto walk = [&](auto&& self, int x, Mask acc) -> void {
    acc |= bit(x);
    Mask up = p.upper_covers(x);
    if (!up) {
      chains.push_back(acc);
      return;
    }
    for_each_bit(up, [&](int y) { self(self, y, acc); });
  };
  for_each_bit(p.minimal(), [&](int m) { walk(walk, m, 0); });
  if (chains.empty()) chains.push_back(0);
  return SimplicialComplex(p.labels(), std::move(chains));
}

inline SimplicialComplex link(const SimplicialComplex& c, Mask face) {
  if (!c.has_face(face)) throw Error(ErrorCode::FaceNotInComplex, c.face_name(face) + " is not a face");
  std::vector<Mask> out;
  for (Mask g : c.facets())
    if (is_subset(face, g)) out.push_back(g & ~face);
  return SimplicialComplex(c.ground(), std::move(out));
}

/// Faces containing `face`. Not a subcomplex, so returned as a face list.
inline std::vector<Mask> open_star(const SimplicialComplex& c, Mask face) {
  if (!c.has_face(face)) throw Error(ErrorCode::FaceNotInComplex, c.face_name(face) + " is not a face");
  std::vector<Mask> out;
  for (Mask g : c.all_faces())
    if (is_subset(face, g)) out.push_back(g);
  return out;
}

/// Faces not containing `face`. The contrastar of ∅ would be void and is
/// rejected.
inline SimplicialComplex contrastar(const SimplicialComplex& c, Mask face) {
  if (face == 0) throw Error(ErrorCode::VoidComplex, "contrastar of the empty face is void");
  std::vector<Mask> out;
  for (Mask g : c.facets()) {
    if (!is_subset(face, g)) {
      out.push_back(g);
    } else {
      for_each_bit(face, [&](int v) { out.push_back(g & ~bit(v)); });
    }
  }
  return SimplicialComplex(c.ground(), std::move(out));
}

enum class LocalKind { link, contrastar };

inline SimplicialComplex face_local(const SimplicialComplex& c, Mask face, LocalKind kind) {
  return kind == LocalKind::link ? link(c, face) : contrastar(c, face);
}

/// Faces disjoint from `removed`. Non-vertices in `removed` are ignored.
inline SimplicialComplex delete_vertices(const SimplicialComplex& c, Mask removed) {
  std::vector<Mask> out;
  for (Mask g : c.facets()) out.push_back(g & ~removed);
  return SimplicialComplex(c.ground(), std::move(out));
}

/// Faces common to both complexes (same ground set assumed).
inline SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Mask> out;
  for (Mask f : a.facets())
    for (Mask g : b.facets()) out.push_back(f & g);
  return SimplicialComplex(a.ground(), std::move(out));
}

inline bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (Mask f : a.facets())
    if (!b.has_face(f)) return false;
  return true;
}

struct ComplexStats {
  int dim = -1;
  bool is_pure = true;
  std::optional<int> cone_apex;
};

inline ComplexStats complex_stats(const SimplicialComplex& c) {
  ComplexStats s;
  s.dim = c.dim();
  Mask common = ~Mask{0};
  for (Mask f : c.facets()) {
    if (popcount(f) != s.dim + 1) s.is_pure = false;
    common &= f;
  }
  if (common) s.cone_apex = std::countr_zero(common);
  return s;
}

}  // namespace ecm
