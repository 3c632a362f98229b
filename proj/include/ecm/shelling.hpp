#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ecm/cm.hpp"
#include "ecm/complex.hpp"
#include "ecm/poset.hpp"

namespace ecm {

inline constexpr std::uint64_t kDefaultShellingBudget = 10'000'000;

struct ShellingResult {
  bool shellable = false;
  /// Facet indices into complex.facets(), in shelling order.
  std::optional<std::vector<std::size_t>> order;
  std::uint64_t nodes = 0;
};

/// Independent certificate check: every facet after the first meets the union
/// of its predecessors in a nonempty pure complex of codimension one.
inline bool verify_shelling(const SimplicialComplex& c, const std::vector<std::size_t>& order) {
  const auto& facets = c.facets();
  if (order.size() != facets.size()) return false;
  std::vector<bool> used(facets.size(), false);
  for (std::size_t i : order) {
    if (i >= facets.size() || used[i]) return false;
    used[i] = true;
  }
  for (std::size_t j = 1; j < order.size(); ++j) {
    Mask fj = facets[order[j]];
    std::vector<Mask> meets;
    for (std::size_t i = 0; i < j; ++i) meets.push_back(facets[order[i]] & fj);
    for (Mask g : maximal_sets(meets))
      if (popcount(g) != popcount(fj) - 1) return false;
  }
  return true;
}

namespace detail {

struct StateHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : v) h = (h ^ w) * 0xff51afd7ed558ccdull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

class ShellingSearch {
public:
  ShellingSearch(const std::vector<Mask>& facets, std::uint64_t budget)
      : facets_(facets), budget_(budget), words_((facets.size() + 63) / 64) {
    const std::size_t t = facets_.size();
    ridge_.assign(t, std::vector<int>(t, -1));
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        if (i == j) continue;
        Mask diff = facets_[j] & ~facets_[i];
        // i and j share a ridge of j exactly when j has one vertex outside i.
        if (popcount(diff) == 1) ridge_[i][j] = std::countr_zero(diff);
      }
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    std::vector<std::uint64_t> state(words_, 0);
    std::vector<std::size_t> order;
    for (std::size_t first = 0; first < facets_.size(); ++first) {
      set(state, first);
      order.push_back(first);
      if (extend(state, order)) return order;
      order.pop_back();
      unset(state, first);
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  static bool test(const std::vector<std::uint64_t>& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1u; }
  static void set(std::vector<std::uint64_t>& s, std::size_t i) { s[i / 64] |= std::uint64_t{1} << (i % 64); }
  static void unset(std::vector<std::uint64_t>& s, std::size_t i) { s[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  bool attachable(const std::vector<std::size_t>& order, std::size_t j) const {
    Mask ridge_vertices = 0;
    for (std::size_t i : order)
      if (ridge_[i][j] >= 0) ridge_vertices |= bit(ridge_[i][j]);
    if (!ridge_vertices) return false;
    for (std::size_t i : order)
      if (!((facets_[j] & ~facets_[i]) & ridge_vertices)) return false;
    return true;
  }

  bool extend(std::vector<std::uint64_t>& state, std::vector<std::size_t>& order) {
    if (order.size() == facets_.size()) return true;
    if (dead_.count(state)) return false;
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "shelling search exceeded " + std::to_string(budget_) + " nodes");
    }
    for (std::size_t j = 0; j < facets_.size(); ++j) {
      if (test(state, j) || !attachable(order, j)) continue;
      set(state, j);
      order.push_back(j);
      if (extend(state, order)) return true;
      order.pop_back();
      unset(state, j);
    }
    dead_.insert(state);
    return false;
  }

  const std::vector<Mask>& facets_;
  std::uint64_t budget_;
  std::size_t words_;
  std::vector<std::vector<int>> ridge_;
  std::unordered_set<std::vector<std::uint64_t>, StateHash> dead_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Backtracking search for a shelling order of a pure complex. Throws NotPure
/// on non-pure input and SearchBudgetExceeded when the node budget runs out;
/// running out is inconclusive, never a "no".
inline ShellingResult is_shellable(const SimplicialComplex& c, std::uint64_t budget = kDefaultShellingBudget) {
  if (!complex_stats(c).is_pure) throw Error(ErrorCode::NotPure, "shellability search needs a pure complex");
  detail::ShellingSearch search(c.facets(), budget);
  auto order = search.run();
  ShellingResult r;
  r.nodes = search.nodes();
  r.shellable = order.has_value();
  r.order = std::move(order);
  return r;
}

/// P⊖I shellable of rank(P) for every closed interval I, including rank-0
/// intervals (which leave P itself).
inline CmVerdict is_edgewise_strongly_shellable(const Poset& p, std::uint64_t budget = kDefaultShellingBudget) {
  CmVerdict v{"edgewise_shellable", true, std::nullopt};
  Grading g = grading(p);
  if (p.empty() || !g.graded) {
    throw Error(ErrorCode::NotPure, "edgewise shellability needs a nonempty graded poset");
  }
  for (int a = 0; a < p.size(); ++a) {
    for (int b : bits_of(p.up(a))) {
      Poset q = remove_interval_edges(p, a, b);
      Grading gq = grading(q);
      Witness w{WitnessKind::removed_interval, {p.label(a), p.label(b)}, std::nullopt, "", {}};
      if (!gq.graded || gq.rank != g.rank) {
        w.detail = "edge removal breaks gradedness or rank";
      } else {
        try {
          if (is_shellable(order_complex(q), budget).shellable) continue;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
          throw Error(ErrorCode::SearchBudgetExceeded,
                      "interval [" + p.label(a) + ", " + p.label(b) + "]: " + e.what());
        }
        w.detail = "order complex of the edge removal is not shellable";
      }
      v.holds = false;
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

}  // namespace ecm
