#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecm/complex.hpp"
#include "ecm/homology.hpp"
#include "ecm/poset.hpp"

namespace ecm {

enum class CmRoute { link_condition, interval_condition, both };

enum class WitnessKind {
  not_pure,        // order complex (or P⊖I) not pure / poset not graded
  link_face,       // a face whose link has low-dimensional homology
  open_interval,   // x < y in P-hat whose open interval has low homology
  vertex_set,      // Δ∖A fails CM or drops dimension
  removed_interval,// P⊖[a,b] fails CM or changes rank
  rank_too_small,  // rank(P) < k - 1
  not_cm,          // base poset is not CM
};

inline const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::not_pure: return "not_pure";
    case WitnessKind::link_face: return "link_face";
    case WitnessKind::open_interval: return "open_interval";
    case WitnessKind::vertex_set: return "vertex_set";
    case WitnessKind::removed_interval: return "removed_interval";
    case WitnessKind::rank_too_small: return "rank_too_small";
    case WitnessKind::not_cm: return "not_cm";
  }
  return "unknown";
}

/// Reason a property fails. `elements` holds element names: the face, the
/// vertex set A, or the two endpoints of an interval. Interval endpoints of
/// open_interval witnesses live in P-hat and may be "0^" / "1^".
struct Witness {
  WitnessKind kind = WitnessKind::not_pure;
  std::vector<std::string> elements;
  std::optional<int> betti_index;
  std::string detail;
  /// At most one nested witness explaining why the sub-check failed.
  std::vector<Witness> cause;
};

struct CmVerdict {
  std::string property;
  bool holds = true;
  std::optional<Witness> witness;
};

/// Either a finite k >= 1 or "every closed interval".
struct EdgewiseLevel {
  static EdgewiseLevel strong() { return EdgewiseLevel{0}; }
  static EdgewiseLevel of(int k) {
    if (k < 1) throw Error(ErrorCode::BadParams, "edgewise level must be at least 1");
    return EdgewiseLevel{k};
  }
  bool is_strong() const { return k == 0; }
  int k = 0;
};

namespace detail {

inline std::vector<std::string> names_of(const std::vector<std::string>& ground, Mask m) {
  std::vector<std::string> out;
  for_each_bit(m, [&](int i) { out.push_back(ground[i]); });
  return out;
}

inline Mask mask_of(const Poset& p, const std::vector<std::string>& names) {
  Mask m = 0;
  for (const auto& s : names) m |= bit(p.index_of(s));
  return m;
}

}  // namespace detail

/// Decision procedures for the Cohen–Macaulay family over one field.
///
/// Betti vectors are memoised per relabelled complex, so repeated sweeps over
/// P⊖I and P∖A share work. Safe to call from several threads.
class CmAnalyzer {
public:
  explicit CmAnalyzer(FieldSpec field = FieldSpec::rationals(), CmRoute route = CmRoute::interval_condition)
      : field_(field), route_(route) {}

  FieldSpec field() const { return field_; }
  CmRoute route() const { return route_; }
  const BettiCache& cache() const { return cache_; }

  BettiVector betti(const SimplicialComplex& c) { return cache_.get(c, field_); }

  /// Link condition on an arbitrary complex: pure, and every link (the empty
  /// face included) has vanishing homology below its dimension.
  std::optional<Witness> complex_cm_failure(const SimplicialComplex& c) {
    ComplexStats st = complex_stats(c);
    if (!st.is_pure) return Witness{WitnessKind::not_pure, {}, std::nullopt, "complex is not pure", {}};
    for (Mask f : c.all_faces()) {
      SimplicialComplex lk = link(c, f);
      int d = lk.dim();
      if (auto i = betti(lk).first_nonzero_below(d)) {
        return Witness{WitnessKind::link_face, detail::names_of(c.ground(), f), *i,
                       "link has nonzero reduced homology below its dimension", {}};
      }
    }
    return std::nullopt;
  }

  /// Interval condition: P graded and every open interval of P-hat has
  /// vanishing homology below its rank.
  std::optional<Witness> interval_cm_failure(const Poset& p) {
    if (!grading(p).graded) return Witness{WitnessKind::not_pure, {}, std::nullopt, "poset is not graded", {}};
    Poset hat = add_bounds(p);
    const int n = hat.size();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (!hat.lt(x, y) || hat.covers(x, y)) continue;
        if (auto w = open_interval_failure(hat, x, y)) return w;
      }
    }
    return std::nullopt;
  }

  std::optional<Witness> cm_failure(const Poset& p, CmRoute route) {
    switch (route) {
      case CmRoute::link_condition: return complex_cm_failure(order_complex(p));
      case CmRoute::interval_condition: return interval_cm_failure(p);
      case CmRoute::both: {
        auto a = complex_cm_failure(order_complex(p));
        auto b = interval_cm_failure(p);
        if (a.has_value() != b.has_value()) {
          throw Error(ErrorCode::RouteMismatch, "link and interval routes disagree on CM");
        }
        return a;
      }
    }
    return std::nullopt;
  }

  CmVerdict is_cm(const Poset& p) { return is_cm(p, route_); }

  CmVerdict is_cm(const Poset& p, CmRoute route) {
    if (p.empty()) throw Error(ErrorCode::EmptyPoset, "CM check needs a nonempty poset");
    auto w = cm_failure(p, route);
    return {"cm", !w, w};
  }

  /// CM, and every link has one-dimensional top homology.
  CmVerdict is_gorenstein_star(const Poset& p) {
    CmVerdict v = is_cm(p);
    v.property = "gorenstein";
    if (!v.holds) return v;
    SimplicialComplex c = order_complex(p);
    for (Mask f : c.all_faces()) {
      SimplicialComplex lk = link(c, f);
      int d = lk.dim();
      if (betti(lk).at(d) != 1) {
        v.holds = false;
        v.witness = Witness{WitnessKind::link_face, detail::names_of(c.ground(), f), d,
                            "top reduced Betti number of the link is not 1", {}};
        return v;
      }
    }
    return v;
  }

  /// Δ(P)∖A CM of dimension dim Δ(P), for every A with |A| < k.
  CmVerdict is_k_cm(const Poset& p, int k) {
    if (k < 1) throw Error(ErrorCode::BadParams, "k must be at least 1");
    if (p.empty()) throw Error(ErrorCode::EmptyPoset, "k-CM check needs a nonempty poset");
    CmVerdict v{k == 2 ? "2cm" : "kcm=" + std::to_string(k), true, std::nullopt};
    const int n = p.size();
    const int dim = order_complex(p).dim();
    const int max_size = std::min(k - 1, n);
    for (int size = 0; size <= max_size; ++size) {
      bool stop = false;
      for_each_subset_of_size(n, size, [&](Mask a) {
        if (stop) return;
        if (auto w = deletion_failure(p, a, dim)) {
          v.holds = false;
          v.witness = std::move(w);
          stop = true;
        }
      });
      if (stop) break;
    }
    return v;
  }

  /// Failure of the single check "Δ(P)∖A is CM of dimension `dim`".
  std::optional<Witness> deletion_failure(const Poset& p, Mask a, int dim) {
    Poset rest = p.induced(p.ground() & ~a);
    Witness w{WitnessKind::vertex_set, detail::names_of(p.labels(), a), std::nullopt, "", {}};
    if (rest.empty() || order_complex(rest).dim() != dim) {
      w.detail = "deletion lowers the dimension";
      return w;
    }
    if (auto inner = cm_failure(rest, route_)) {
      w.detail = "deletion is not CM";
      w.cause.push_back(std::move(*inner));
      return w;
    }
    return std::nullopt;
  }

  /// Failure of the single check "P⊖[a,b] is CM of rank `rank`".
  std::optional<Witness> removal_failure(const Poset& p, int a, int b, int rank) {
    Poset q = remove_interval_edges(p, a, b);
    Witness w{WitnessKind::removed_interval, {p.label(a), p.label(b)}, std::nullopt, "", {}};
    Grading g = grading(q);
    if (!g.graded) {
      w.detail = "edge removal leaves a non-graded poset";
      return w;
    }
    if (g.rank != rank) {
      w.detail = "edge removal changes the rank";
      return w;
    }
    if (auto inner = cm_failure(q, route_)) {
      w.detail = "edge removal leaves a non-CM poset";
      w.cause.push_back(std::move(*inner));
      return w;
    }
    return std::nullopt;
  }

  CmVerdict is_edgewise_k_cm(const Poset& p, EdgewiseLevel level) {
    CmVerdict v{level.is_strong() ? "edgewise=strong" : "edgewise=" + std::to_string(level.k), true, std::nullopt};
    CmVerdict base = is_cm(p);
    if (!base.holds) {
      v.holds = false;
      v.witness = Witness{WitnessKind::not_cm, {}, std::nullopt, "poset is not CM", {}};
      v.witness->cause.push_back(std::move(*base.witness));
      return v;
    }
    const int rank = *grading(p).rank;
    if (!level.is_strong() && rank < level.k - 1) {
      v.holds = false;
      v.witness = Witness{WitnessKind::rank_too_small, {}, std::nullopt,
                          "rank " + std::to_string(rank) + " is below k - 1", {}};
      return v;
    }
    const int max_rank = level.is_strong() ? rank : level.k - 1;
    if (auto w = first_removal_failure(p, max_rank)) {
      v.holds = false;
      v.witness = std::move(w);
    }
    return v;
  }

  /// Largest k for which P is edgewise k-CM; 0 when P is not CM.
  int edgewise_cm_connectivity(const Poset& p) {
    if (p.empty() || !is_cm(p).holds) return 0;
    const int rank = *grading(p).rank;
    std::vector<int> ranks = chain_depths(p).shortest;
    int best = rank + 1;
    // Any failing interval of rank r caps the answer at r.
    for (int a = 0; a < p.size(); ++a) {
      for_each_bit(p.up(a) & ~bit(a), [&](int b) {
        int r = ranks[b] - ranks[a];
        if (r < best && removal_failure(p, a, b, rank)) best = r;
      });
    }
    return best;
  }

private:
  std::optional<Witness> open_interval_failure(const Poset& hat, int x, int y) {
    Poset j = hat.induced(hat.up(x) & hat.down(y) & ~(bit(x) | bit(y)));
    SimplicialComplex c = order_complex(j);
    int d = c.dim();
    if (auto i = betti(c).first_nonzero_below(d)) {
      return Witness{WitnessKind::open_interval, {hat.label(x), hat.label(y)}, *i,
                     "open interval has nonzero reduced homology below its rank", {}};
    }
    return std::nullopt;
  }

  /// First closed interval [a,b] (by a, then b) of rank 1..max_rank whose
  /// removal breaks CM or the rank.
  std::optional<Witness> first_removal_failure(const Poset& p, int max_rank) {
    const int rank = *grading(p).rank;
    std::vector<int> ranks = chain_depths(p).shortest;
    for (int a = 0; a < p.size(); ++a) {
      std::optional<Witness> found;
      for_each_bit(p.up(a) & ~bit(a), [&](int b) {
        if (found) return;
        int r = ranks[b] - ranks[a];
        if (r < 1 || r > max_rank) return;
        found = removal_failure(p, a, b, rank);
      });
      if (found) return found;
    }
    return std::nullopt;
  }

  template <typename F>
  static void for_each_subset_of_size(int n, int size, F&& f) {
    if (size == 0) {
      f(Mask{0});
      return;
    }
    if (size > n) return;
    // Gosper's hack walks same-size masks in increasing order.
    Mask m = low_bits(size);
    const Mask limit = low_bits(n);
    while (true) {
      f(m);
      Mask c = m & (~m + 1);
      Mask r = m + c;
      if (r == 0 || (r & ~limit)) break;
      m = (((r ^ m) >> 2) / c) | r;
      if (m & ~limit) break;
    }
  }

  FieldSpec field_;
  CmRoute route_;
  BettiCache cache_;
};

inline CmVerdict is_cm(const Poset& p, FieldSpec field, CmRoute route = CmRoute::both) {
  return CmAnalyzer(field).is_cm(p, route);
}

inline CmVerdict is_gorenstein_star(const Poset& p, FieldSpec field) { return CmAnalyzer(field).is_gorenstein_star(p); }

inline CmVerdict is_k_cm(const Poset& p, int k, FieldSpec field) { return CmAnalyzer(field).is_k_cm(p, k); }

inline CmVerdict is_edgewise_k_cm(const Poset& p, EdgewiseLevel level, FieldSpec field) {
  return CmAnalyzer(field).is_edgewise_k_cm(p, level);
}

inline int edgewise_cm_connectivity(const Poset& p, FieldSpec field) {
  return CmAnalyzer(field).edgewise_cm_connectivity(p);
}

/// Re-runs the single sub-check a witness names and reports whether it still
/// fails. Used to validate certificates without the enclosing sweep.
inline bool replay_witness(const Poset& p, const Witness& w, FieldSpec field, std::optional<int> k = std::nullopt) {
  CmAnalyzer an(field);
  switch (w.kind) {
    case WitnessKind::not_pure: return !grading(p).graded;
    case WitnessKind::not_cm: return an.cm_failure(p, CmRoute::interval_condition).has_value();
    case WitnessKind::rank_too_small: return k && grading(p).graded && grading(p).rank < *k - 1;
    case WitnessKind::link_face: {
      SimplicialComplex c = order_complex(p);
      SimplicialComplex lk = link(c, detail::mask_of(p, w.elements));
      BettiVector b = an.betti(lk);
      if (!w.betti_index) return false;
      if (*w.betti_index == lk.dim()) return b.at(lk.dim()) != 1;
      return *w.betti_index < lk.dim() && b.at(*w.betti_index) != 0;
    }
    case WitnessKind::open_interval: {
      if (w.elements.size() != 2 || !w.betti_index) return false;
      Poset hat = add_bounds(p);
      int x = hat.index_of(w.elements[0]), y = hat.index_of(w.elements[1]);
      if (!hat.lt(x, y)) return false;
      SimplicialComplex c = order_complex(hat.induced(hat.up(x) & hat.down(y) & ~(bit(x) | bit(y))));
      return *w.betti_index < c.dim() && an.betti(c).at(*w.betti_index) != 0;
    }
    case WitnessKind::vertex_set: {
      int dim = order_complex(p).dim();
      return an.deletion_failure(p, detail::mask_of(p, w.elements), dim).has_value();
    }
    case WitnessKind::removed_interval: {
      if (w.elements.size() != 2) return false;
      auto g = grading(p);
      if (!g.rank) return false;
      return an.removal_failure(p, p.index_of(w.elements[0]), p.index_of(w.elements[1]), *g.rank).has_value();
    }
  }
  return false;
}

}  // namespace ecm
