#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace frobpair;
using namespace frobpair::testing;

TEST(PeDecompose, FermatProduct) {
  auto R = ring_of(2, {"x", "y", "z"});
  auto dec = pe_decompose(P("x^4*y*z + x*y^4*z + x*y*z^4", R), 1);
  ASSERT_EQ(dec.entries.size(), 3u);
  EXPECT_EQ(dec.entries.at(Monomial{0, 1, 1}), P("x^2", R));
  EXPECT_EQ(dec.entries.at(Monomial{1, 0, 1}), P("y^2", R));
  EXPECT_EQ(dec.entries.at(Monomial{1, 1, 0}), P("z^2", R));
}

TEST(PeDecompose, Small) {
  auto R = ring_of(2, {"x"});
  auto dec = pe_decompose(P("x^2", R), 1);
  ASSERT_EQ(dec.entries.size(), 1u);
  EXPECT_EQ(dec.entries.at(Monomial{0}), P("x", R));
  EXPECT_TRUE(pe_decompose(MultiPoly(R), 2).entries.empty());
}

TEST(PeDecompose, Reconstruction) {
  auto R2 = ring_of(2, {"x", "y"});
  auto f = P("x*(x^3+y^3)^3", R2);
  auto dec = pe_decompose(f, 2);
  EXPECT_EQ(dec.reconstruct(), f);
  std::uint64_t q = 4;
  for (const auto& [alpha, c] : dec.entries) {
    EXPECT_FALSE(c.is_zero());
    for (auto a : alpha) EXPECT_LT(a, q);
  }

  std::mt19937_64 rng(41);
  for (std::uint64_t p : {2, 3, 5}) {
    auto R = ring_of(p, {"x", "y", "z"});
    for (unsigned e = 1; e <= 3; ++e)
      for (int i = 0; i < 10; ++i) {
        auto g = random_poly(R, rng, 8, 40);
        EXPECT_EQ(pe_decompose(g, e).reconstruct(), g);
      }
  }
}

TEST(IeRoots, FermatExamples) {
  auto R2 = ring_of(2, {"x", "y", "z"});
  EXPECT_TRUE(ideal_equal(ie_roots(P("x*y*z*(x^3+y^3+z^3)", R2), 1), ideal(R2, {"x^2", "y^2", "z^2"})));
  auto R3 = ring_of(3, {"x", "y", "z"});
  auto J = ie_roots(P("x*y*z*(x^3+y^3+z^3)^2", R3), 1);
  ASSERT_EQ(J.size(), 1u);
  EXPECT_EQ(J.generators()[0], P("x^2+2*x*y+y^2+2*x*z+2*y*z+z^2", R3));
}

TEST(IeRoots, ProjectiveLine) {
  auto R = ring_of(5, {"x", "y"});
  auto J = ie_roots(P("y^3", R) * poly_pow(P("x^3", R), 4), 1);
  EXPECT_TRUE(ideal_equal(J, ideal(R, {"x^2"})));
}

TEST(IeRoots, DeduplicatesUpToScalar) {
  auto R = ring_of(5, {"x", "y"});
  // Entries at alpha = 0 and alpha = (1, 0) are x and 2x.
  auto J = ie_roots(P("x^5 + 2*x^6", R), 1);
  ASSERT_EQ(J.size(), 1u);
  EXPECT_EQ(J.generators()[0], P("x", R));
}

TEST(IeRoots, SmallestIdealWitness) {
  std::mt19937_64 rng(43);
  for (std::uint64_t p : {2, 3}) {
    auto R = ring_of(p, {"x", "y", "z"});
    for (int i = 0; i < 10; ++i) {
      auto f = random_poly(R, rng, 5, 8);
      for (unsigned e = 1; e <= 2; ++e) {
        auto br = bracket_power(ie_roots(f, e), e);
        EXPECT_TRUE(reduces_to_zero(f, groebner_basis(br)));
      }
    }
  }
}

TEST(IeRoots, PthPowerRoot) {
  std::mt19937_64 rng(47);
  for (std::uint64_t p : {2, 3, 5}) {
    auto R = ring_of(p, {"x", "y", "z"});
    for (int i = 0; i < 17; ++i) {
      auto g = random_poly(R, rng, 4, 4);
      IdealGens G(R, {g});
      EXPECT_TRUE(ideal_equal(ie_roots(frobenius_power(g, 1), 1), G));
    }
  }
}

TEST(IeRoots, Submultiplicative) {
  std::mt19937_64 rng(53);
  for (std::uint64_t p : {2, 3}) {
    auto R = ring_of(p, {"x", "y", "z"});
    for (int i = 0; i < 10; ++i) {
      auto g = random_poly(R, rng, 4, 6);
      auto h = random_poly(R, rng, 4, 6);
      for (unsigned e = 1; e <= 2; ++e) {
        auto Ig = ie_roots(g, e);
        auto Ih = ie_roots(h, e);
        IdealGens prod(R);
        for (const auto& a : Ig.generators())
          for (const auto& b : Ih.generators()) prod.add(a * b);
        EXPECT_TRUE(ideal_contains(ie_roots(g * h, e), prod));
      }
    }
  }
}

TEST(IeRoots, CoordinateEquivariance) {
  std::mt19937_64 rng(59);
  for (std::uint64_t p : {2, 3, 5}) {
    auto R = ring_of(p, {"x", "y", "z"});
    for (int i = 0; i < 6; ++i) {
      auto f = random_homogeneous(R, rng, 4, 4);
      auto A = random_gl(R.field(), 3, rng);
      for (unsigned e = 1; e <= 2; ++e)
        EXPECT_TRUE(ideal_equal(ie_roots(linear_change(f, A), e), linear_change(ie_roots(f, e), A)));
    }
  }
}

TEST(IeRoots, DegreeBound) {
  std::mt19937_64 rng(61);
  for (std::uint64_t p : {2, 3}) {
    auto R = ring_of(p, {"x", "y", "z"});
    for (int i = 0; i < 8; ++i) {
      auto f = random_homogeneous(R, rng, 4, 3);
      auto g = random_homogeneous(R, rng, 3, 2);
      for (unsigned e = 1; e <= 2; ++e) {
        // p^e > deg g - deg f holds for every tested e.
        auto roots = ie_roots(level_source(g, f, e), e);
        for (const auto& c : roots.generators())
          EXPECT_LE(c.total_degree(), f.total_degree());
      }
    }
  }
}

TEST(BracketPower, Examples) {
  auto R = ring_of(2, {"x", "y"});
  auto J = bracket_power(ideal(R, {"x", "y"}), 1);
  EXPECT_EQ(J.generators()[0], P("x^2", R));
  EXPECT_EQ(J.generators()[1], P("y^2", R));
  auto R3 = ring_of(3, {"x", "y", "z"});
  auto q = P("x^2+2*x*y+y^2+2*x*z+2*y*z+z^2", R3);
  auto B = bracket_power(IdealGens(R3, {q}), 1);
  EXPECT_EQ(B.generators()[0], P("x^6+2*x^3*y^3+y^6+2*x^3*z^3+2*y^3*z^3+z^6", R3));
  EXPECT_EQ(bracket_power(IdealGens(R3, {q}), 0).generators()[0], q);
}

TEST(LinearChange, Examples) {
  auto R = ring_of(5, {"x", "y"});
  PrimeField F(5);
  EXPECT_EQ(linear_change(P("x", R), LinearChange::identity(F, 2)), P("x", R));
  LinearChange swap(FpMatrix(F, {{0, 1}, {1, 0}}));
  EXPECT_EQ(linear_change(P("x^3", R), swap), P("y^3", R));
  EXPECT_THROW(LinearChange(FpMatrix(F, {{1, 2}, {2, 4}})), std::domain_error);
}

TEST(LinearChange, InverseRoundTrip) {
  std::mt19937_64 rng(67);
  auto R = ring_of(5, {"x", "y", "z"});
  for (int i = 0; i < 20; ++i) {
    auto f = random_poly(R, rng, 5, 4);
    auto A = random_gl(R.field(), 3, rng);
    EXPECT_EQ(linear_change(linear_change(f, A), A.inverse()), f);
  }
}
