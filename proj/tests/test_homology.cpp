#include <gtest/gtest.h>

#include "ecm/catalog.hpp"
#include "ecm/homology.hpp"
#include "ecm/random.hpp"
#include "support.hpp"

using namespace ecm;

namespace {

const std::vector<FieldSpec>& fields() {
  static const std::vector<FieldSpec> f{FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
  return f;
}

std::vector<std::string> names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

std::vector<std::size_t> expect_only(int dim, int at) {
  std::vector<std::size_t> v(static_cast<std::size_t>(dim + 2), 0);
  v[static_cast<std::size_t>(at + 1)] = 1;
  return v;
}

// The six-vertex triangulation of the real projective plane.
SimplicialComplex rp2() {
  std::vector<std::vector<int>> tri{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                    {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}};
  std::vector<Mask> facets;
  for (const auto& t : tri) facets.push_back(bit(t[0]) | bit(t[1]) | bit(t[2]));
  return SimplicialComplex(names(6), facets);
}

}  // namespace

TEST(Homology, Spheres) {
  for (const FieldSpec& f : fields()) {
    SimplicialComplex s0(names(2), {0b01, 0b10});
    EXPECT_EQ(reduced_betti(s0, f).values, expect_only(0, 0)) << f.name();
    SimplicialComplex hexagon = order_complex(proper_part(catalog::boolean(3)));
    EXPECT_EQ(reduced_betti(hexagon, f).values, expect_only(1, 1)) << f.name();
    SimplicialComplex tetra(names(4), {0b0111, 0b1011, 0b1101, 0b1110});
    EXPECT_EQ(reduced_betti(tetra, f).values, expect_only(2, 2)) << f.name();
    SimplicialComplex cone(names(4), {0b0011, 0b0101, 0b1001});
    EXPECT_TRUE(reduced_betti(cone, f).acyclic()) << f.name();
    EXPECT_EQ(reduced_betti(SimplicialComplex(), f).values, expect_only(-1, -1)) << f.name();
  }
}

TEST(Homology, FieldDependence) {
  SimplicialComplex p = rp2();
  EXPECT_TRUE(reduced_betti(p, FieldSpec::rationals()).acyclic());
  EXPECT_TRUE(reduced_betti(p, FieldSpec::prime(3)).acyclic());
  BettiVector b2 = reduced_betti(p, FieldSpec::prime(2));
  EXPECT_EQ(b2.at(1), 1u);
  EXPECT_EQ(b2.at(2), 1u);
}

TEST(Homology, FieldSpec) {
  EXPECT_EQ(FieldSpec::rationals().name(), "Q");
  EXPECT_EQ(FieldSpec::prime(7).name(), "GF(7)");
  EXPECT_THROW(FieldSpec::prime(9), Error);
  EXPECT_THROW(FieldSpec::prime(1), Error);
}

TEST(Homology, MatchesOracleAndEulerPoincare) {
  auto check = [](const SimplicialComplex& c) {
    for (long long p : {0LL, 2LL, 3LL}) {
      FieldSpec f = p ? FieldSpec::prime(static_cast<std::uint32_t>(p)) : FieldSpec::rationals();
      auto got = reduced_betti(c, f).values;
      auto ref = oracle::reduced_betti(c, p);
      ASSERT_EQ(got.size(), ref.size());
      for (std::size_t i = 0; i < got.size(); ++i) ASSERT_EQ(static_cast<long long>(got[i]), ref[i]) << f.name();
      ASSERT_TRUE(oracle::euler_poincare(c.facets(), p));
    }
  };
  for (const auto& [name, p] : catalog::entries())
    if (p.size() <= 16) check(order_complex(p));
  check(rp2());
  CounterRng rng(41, 0);
  for (int i = 0; i < 150; ++i) {
    Poset p = random_poset(rng, rng.between(1, 10), 0.2 + 0.5 * rng.unit());
    check(order_complex(p));
  }
}

TEST(Homology, RankStrategiesAgree) {
  // dense signed matrices large enough that 64-bit Bareiss overflows
  CounterRng rng(42, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 10 + 3 * trial;
    std::vector<detail::SignedColumn> cols;
    std::vector<std::vector<int>> support(n);
    std::vector<std::vector<long long>> dense(n, std::vector<long long>(n, 0));
    for (int c = 0; c < n; ++c) {
      detail::SignedColumn col;
      for (int r = 0; r < n; ++r) {
        const auto roll = rng.below(4);
        if (roll == 0 || c == n - 1) continue;  // last column zero, rank < n
        const int s = roll == 1 ? -1 : 1;
        col.emplace_back(r, s);
        support[c].push_back(r);
        dense[r][c] = s;
      }
      cols.push_back(col);
    }
    std::vector<std::vector<oracle::Rational>> q(n, std::vector<oracle::Rational>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) q[r][c] = dense[r][c];
    EXPECT_EQ(detail::rank_rational(cols, n), oracle::rank_q(q));
    EXPECT_EQ(detail::rank_mod_p(cols, n, 3), oracle::rank_mod(dense, 3));
    EXPECT_EQ(detail::rank_mod_p(cols, n, 2), oracle::rank_mod(dense, 2));
    EXPECT_EQ(detail::rank_gf2(support, n), oracle::rank_mod(dense, 2));
  }
}

TEST(Homology, CacheIsKeyedByShapeAndField) {
  BettiCache cache;
  SimplicialComplex a(names(3), {0b011, 0b110});
  SimplicialComplex b({"x", "y", "z", "w"}, {0b0101, 0b1100});
  cache.get(a, FieldSpec::rationals());
  cache.get(b, FieldSpec::rationals());
  EXPECT_EQ(cache.hits(), 1u);
  cache.get(a, FieldSpec::prime(2));
  EXPECT_EQ(cache.size(), 2u);
}
