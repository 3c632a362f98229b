#include <gtest/gtest.h>

#include "ecm/catalog.hpp"
#include "ecm/cm.hpp"
#include "ecm/lattice.hpp"
#include "ecm/random.hpp"
#include "support.hpp"

using namespace ecm;

namespace {

CmAnalyzer& q_analyzer() {
  static CmAnalyzer an;
  return an;
}

std::vector<Poset> graded_batch(std::uint64_t seed, int count, int max_n) {
  CounterRng rng(seed, 0);
  std::vector<Poset> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graded_poset(rng, max_n).poset);
  return out;
}

int minimal_count(const Poset& p) { return popcount(p.minimal()); }
int maximal_count(const Poset& p) { return popcount(p.maximal()); }

}  // namespace

TEST(Cm, RoutesAgreeWithEachOtherAndWithLinkOracle) {
  auto check = [](const Poset& p) {
    CmAnalyzer& an = q_analyzer();
    const bool by_links = !an.cm_failure(p, CmRoute::link_condition).has_value();
    const bool by_intervals = !an.cm_failure(p, CmRoute::interval_condition).has_value();
    EXPECT_EQ(by_links, by_intervals);
    if (p.size() <= 12) EXPECT_EQ(by_links, oracle::cm_by_links(order_complex(p).facets()));
  };
  for (const auto& [name, p] : catalog::entries()) check(p);
  for (const Poset& p : graded_batch(51, 150, 8)) check(p);
}

TEST(Cm, BothRouteReportsTheProperty) {
  EXPECT_TRUE(is_cm(catalog::fig1(), FieldSpec::rationals()).holds);
  CmVerdict v = is_cm(catalog::stacked_antichains(2, 2), FieldSpec::prime(2), CmRoute::both);
  EXPECT_EQ(v.property, "cm");
  EXPECT_TRUE(v.holds);
}

TEST(Cm, ChainsAndAntichains) {
  CmAnalyzer& an = q_analyzer();
  for (int n = 1; n <= 5; ++n) {
    Poset c = catalog::chain(n);
    EXPECT_TRUE(an.is_cm(c).holds);
    EXPECT_FALSE(an.is_k_cm(c, 2).holds);
    EXPECT_FALSE(an.is_edgewise_k_cm(c, EdgewiseLevel::of(2)).holds);
    EXPECT_EQ(an.edgewise_cm_connectivity(c), 1);
  }
  EXPECT_TRUE(an.is_cm(catalog::antichain(3)).holds);
  EXPECT_FALSE(an.is_cm(build_poset({"x", "y", "z", "w"}, {{"x", "y"}, {"z", "w"}})).holds);
}

TEST(Cm, Fig1IsDoublyButNotTriply) {
  CmAnalyzer& an = q_analyzer();
  Poset p = catalog::fig1();
  EXPECT_TRUE(an.is_k_cm(p, 2).holds);
  EXPECT_TRUE(an.is_edgewise_k_cm(p, EdgewiseLevel::of(2)).holds);
  EXPECT_FALSE(an.is_k_cm(p, 3).holds);
  EXPECT_FALSE(an.is_edgewise_k_cm(p, EdgewiseLevel::of(3)).holds);
  EXPECT_EQ(an.edgewise_cm_connectivity(p), 2);
}

TEST(Cm, StackedAntichainsAreKCmButNotEdgewise) {
  CmAnalyzer& an = q_analyzer();
  for (int k = 3; k <= 4; ++k) {
    Poset p = catalog::stacked_antichains(k, k);
    EXPECT_TRUE(an.is_k_cm(p, k).holds) << k;
    CmVerdict v = an.is_edgewise_k_cm(p, EdgewiseLevel::of(k));
    ASSERT_FALSE(v.holds) << k;
    ASSERT_TRUE(v.witness.has_value());
    ASSERT_EQ(v.witness->kind, WitnessKind::removed_interval);
    int lo = p.index_of(v.witness->elements[0]), hi = p.index_of(v.witness->elements[1]);
    Poset iv = interval(p, {lo, hi, IntervalKind::closed});
    EXPECT_EQ(grading(iv).rank, 2);
    EXPECT_TRUE(contains(p.minimal(), lo) || contains(p.maximal(), hi));
  }
}

TEST(Cm, EdgewiseNesting) {
  CmAnalyzer& an = q_analyzer();
  for (const Poset& p : graded_batch(52, 120, 8)) {
    bool prev = an.is_cm(p).holds;
    for (int k = 1; k <= 4; ++k) {
      bool cur = an.is_edgewise_k_cm(p, EdgewiseLevel::of(k)).holds;
      EXPECT_TRUE(prev || !cur) << "edgewise " << k << " without " << k - 1;
      prev = cur;
    }
    const int conn = an.edgewise_cm_connectivity(p);
    if (conn > 0) {
      EXPECT_TRUE(an.is_edgewise_k_cm(p, EdgewiseLevel::of(conn)).holds);
      EXPECT_FALSE(an.is_edgewise_k_cm(p, EdgewiseLevel::of(conn + 1)).holds);
    }
    const bool strong = an.is_edgewise_k_cm(p, EdgewiseLevel::strong()).holds;
    EXPECT_EQ(strong, conn == *grading(p).rank + 1);
  }
}

TEST(Cm, EdgewiseDoublyNeedsTwoMinimalAndTwoMaximal) {
  CmAnalyzer& an = q_analyzer();
  for (const Poset& p : graded_batch(53, 150, 8)) {
    if (!an.is_edgewise_k_cm(p, EdgewiseLevel::of(2)).holds) continue;
    EXPECT_GE(minimal_count(p), 2);
    EXPECT_GE(maximal_count(p), 2);
  }
}

TEST(Cm, OpenIntervalsInheritEdgewiseLevel) {
  CmAnalyzer& an = q_analyzer();
  int checked = 0;
  for (const Poset& p : graded_batch(54, 120, 8)) {
    for (int k = 2; k <= 3; ++k) {
      if (!an.is_edgewise_k_cm(p, EdgewiseLevel::of(k)).holds) continue;
      Poset hat = add_bounds(p);
      for (int x = 0; x < hat.size(); ++x)
        for (int y = 0; y < hat.size(); ++y) {
          if (!hat.lt(x, y) || hat.covers(x, y)) continue;
          Poset j = interval(hat, {x, y, IntervalKind::open});
          const int r = std::min(k, *grading(j).rank + 1);
          EXPECT_TRUE(an.is_edgewise_k_cm(j, EdgewiseLevel::of(r)).holds)
              << hat.label(x) << " " << hat.label(y) << " k=" << k;
          ++checked;
        }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Cm, DoublyCmImpliesEdgewiseDoubly) {
  CmAnalyzer& an = q_analyzer();
  int doubly = 0;
  for (const Poset& p : graded_batch(55, 200, 8)) {
    if (!an.is_k_cm(p, 2).holds) continue;
    ++doubly;
    EXPECT_TRUE(an.is_edgewise_k_cm(p, EdgewiseLevel::of(2)).holds);
  }
  EXPECT_GT(doubly, 0);
}

TEST(Cm, NoThreeElementIntervalMeansEdgeRemovalIsContrastar) {
  CounterRng rng(56, 0);
  int tested = 0;
  while (tested < 60) {
    Poset p = random_poset(rng, rng.between(2, 9));
    bool three = false;
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b)
        three = three || (p.lt(a, b) && popcount(p.up(a) & p.down(b)) == 3);
    if (three) continue;
    ++tested;
    SimplicialComplex c = order_complex(p);
    for (auto [a, b] : p.cover_list())
      EXPECT_EQ(order_complex(remove_interval_edges(p, a, b)), contrastar(c, bit(a) | bit(b)));
  }
}

TEST(Cm, SemimodularLatticeEquivalences) {
  CmAnalyzer& an = q_analyzer();
  // rank at least 3, so the proper part has rank at least 1
  std::vector<Poset> lattices{catalog::boolean(3),  catalog::boolean(4),  catalog::partition(4),
                              catalog::divisor(30), catalog::divisor(36), catalog::divisor(24),
                              catalog::chain(4),    catalog::chain(5),    catalog::uniform_matroid(3, 4),
                              catalog::uniform_matroid(3, 5)};
  for (const Poset& l : lattices) {
    LatticeClasses cls = lattice_classes(l);
    ASSERT_TRUE(cls.semimodular);
    Poset proper = proper_part(l);
    const bool two_cm = an.is_k_cm(proper, 2).holds;
    const bool edge_two = an.is_edgewise_k_cm(proper, EdgewiseLevel::of(2)).holds;
    EXPECT_EQ(cls.geometric, two_cm);
    EXPECT_EQ(cls.geometric, edge_two);
  }
}

TEST(Cm, GorensteinStar) {
  CmAnalyzer& an = q_analyzer();
  EXPECT_TRUE(an.is_gorenstein_star(proper_part(catalog::boolean(3))).holds);
  EXPECT_TRUE(an.is_gorenstein_star(catalog::fig1()).holds);
  EXPECT_TRUE(an.is_gorenstein_star(proper_part(catalog::cube())).holds);
  EXPECT_FALSE(an.is_gorenstein_star(catalog::chain(2)).holds);
  EXPECT_FALSE(an.is_gorenstein_star(proper_part(catalog::partition(4))).holds);
}

TEST(Cm, Fig2StandinAndOrdinalSums) {
  CmAnalyzer& an = q_analyzer();
  Poset p = catalog::fig2_standin();
  EXPECT_EQ(grading(p).rank, 1);
  EXPECT_TRUE(an.is_edgewise_k_cm(p, EdgewiseLevel::of(2)).holds);
  EXPECT_FALSE(an.is_k_cm(p, 2).holds);
  // any number of two-element antichains stacked on top
  Poset q = p;
  for (int i = 1; i <= 2; ++i) {
    q = ordinal_sum(q, catalog::antichain(2, "s" + std::to_string(i) + "_"));
    EXPECT_TRUE(an.is_edgewise_k_cm(q, EdgewiseLevel::of(2)).holds) << i;
    EXPECT_FALSE(an.is_k_cm(q, 2).holds) << i;
  }
  EXPECT_FALSE(an.is_edgewise_k_cm(catalog::remark37b(), EdgewiseLevel::of(2)).holds);
}

TEST(Cm, WitnessesReplay) {
  CmAnalyzer& an = q_analyzer();
  struct Case {
    Poset p;
    std::string prop;
  };
  std::vector<Case> cases{{catalog::chain(3), "2cm"},
                          {catalog::remark36_q(), "2cm"},
                          {catalog::remark37b(), "edgewise=2"},
                          {proper_part(catalog::sec5_lattice()), "edgewise=strong"},
                          {catalog::stacked_antichains(3, 3), "edgewise=3"},
                          {build_poset({"x", "y", "z", "w"}, {{"x", "y"}, {"z", "w"}}), "cm"}};
  for (const auto& c : cases) {
    CmVerdict v = c.prop == "cm"             ? an.is_cm(c.p)
                  : c.prop == "2cm"          ? an.is_k_cm(c.p, 2)
                  : c.prop == "edgewise=2"   ? an.is_edgewise_k_cm(c.p, EdgewiseLevel::of(2))
                  : c.prop == "edgewise=3"   ? an.is_edgewise_k_cm(c.p, EdgewiseLevel::of(3))
                                             : an.is_edgewise_k_cm(c.p, EdgewiseLevel::strong());
    ASSERT_FALSE(v.holds) << c.prop;
    ASSERT_TRUE(v.witness.has_value());
    std::optional<int> k;
    if (c.prop == "2cm") k = 2;
    if (c.prop == "edgewise=3") k = 3;
    if (c.prop == "edgewise=2") k = 2;
    EXPECT_TRUE(replay_witness(c.p, *v.witness, FieldSpec::rationals(), k)) << c.prop;
  }
}

TEST(Cm, FieldsCanDisagree) {
  // barycentric subdivision of RP^2: CM over Q and GF(3), not over GF(2)
  std::vector<std::vector<int>> tri{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                    {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}};
  std::vector<Mask> facets;
  for (const auto& t : tri) facets.push_back(bit(t[0]) | bit(t[1]) | bit(t[2]));
  Poset faces = proper_part(catalog::complex_face_lattice(catalog::number_names(6), facets));
  EXPECT_TRUE(CmAnalyzer(FieldSpec::prime(3)).is_cm(faces).holds);
  EXPECT_FALSE(CmAnalyzer(FieldSpec::prime(2)).is_cm(faces).holds);
  EXPECT_TRUE(CmAnalyzer(FieldSpec::rationals()).is_cm(faces).holds);
}
