#include "oracles.hpp"

#include "frobroot/error.hpp"
#include "frobroot/frobenius.hpp"
#include "frobroot/monomial_ideal.hpp"

#include <gtest/gtest.h>

using namespace frobroot;

namespace {

RingPtr ring2(std::uint64_t p) { return Ring::create(p, {"x", "y"}); }
Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }
Ideal I(const RingPtr& r, const char* s) { return parse_ideal(r, s); }

Ideal random_ideal(oracle::Random& rnd, const RingPtr& r) {
  std::vector<Polynomial> gens;
  std::size_t count = 1 + rnd.below(3);
  for (std::size_t i = 0; i < count; ++i) gens.push_back(rnd.polynomial(r, 6, 4));
  return Ideal(r, std::move(gens));
}

}  // namespace

TEST(FrobeniusPower, Examples) {
  auto r2 = ring2(2), r3 = ring2(3);
  EXPECT_TRUE(ideals_equal(frobenius_power(Ideal::maximal(r2), 1), I(r2, "x^2, y^2")));
  Ideal a = I(r3, "x^2+y, x*y");
  EXPECT_TRUE(ideals_equal(frobenius_power(a, 0), a));
  EXPECT_TRUE(ideals_equal(frobenius_power(I(r3, "x+y"), 1), I(r3, "x^3+y^3")));
}

TEST(QDecompose, Examples) {
  auto r = ring2(2);
  auto d = q_decompose(P(r, "x^3*y + x"), 1);
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.parts.at(Monomial{1, 1}), P(r, "x"));
  EXPECT_EQ(d.parts.at(Monomial{1, 0}), P(r, "1"));
  EXPECT_TRUE(q_decompose(Polynomial::zero(r), 1).parts.empty());
  auto c = q_decompose(P(r, "x^3+y^3"), 1);
  ASSERT_EQ(c.parts.size(), 2u);
  EXPECT_EQ(c.parts.at(Monomial{1, 0}), P(r, "x"));
  EXPECT_EQ(c.parts.at(Monomial{0, 1}), P(r, "y"));
  EXPECT_EQ(c.reconstruct(r), P(r, "x^3+y^3"));
  EXPECT_THROW(q_decompose(P(r, "x"), 0), Error);
}

TEST(QDecompose, ReconstructsRandomPolynomials) {
  oracle::Random rnd(31);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto r = Ring::create(p, {"x", "y", "z"});
    for (int trial = 0; trial < 50; ++trial) {
      Polynomial f = rnd.polynomial(r, 12, 8);
      for (std::uint64_t e : {1u, 2u}) {
        auto d = q_decompose(f, e);
        EXPECT_EQ(d.reconstruct(r), f);
        for (const auto& [rho, part] : d.parts) {
          EXPECT_FALSE(part.is_zero());
          for (auto x : rho.exponents()) EXPECT_LT(x, d.q);
        }
      }
    }
  }
}

TEST(FrobeniusRoot, Examples) {
  auto r2 = ring2(2), r3 = ring2(3);
  EXPECT_TRUE(ideals_equal(frobenius_root(I(r2, "x^5*y^3"), 1), I(r2, "x^2*y")));
  EXPECT_TRUE(ideals_equal(frobenius_root(I(r2, "x^2+y^2"), 1), I(r2, "x+y")));
  Ideal a = I(r3, "x^7, y^5, x^4*y^4");
  Ideal root = frobenius_root(a, 1);
  EXPECT_TRUE(ideals_equal(root, I(r3, "x^2, y, x*y")));
  EXPECT_TRUE(is_contained(a, frobenius_power(root, 1)));
  EXPECT_TRUE(ideals_equal(frobenius_root(a, 0), a));
}

TEST(FrobeniusRoot, PolynomialIdealProperties) {
  oracle::Random rnd(77);
  for (std::uint64_t p : {2u, 3u}) {
    auto r = ring2(p);
    for (int trial = 0; trial < 25; ++trial) {
      Ideal A = random_ideal(rnd, r), B = random_ideal(rnd, r);
      Ideal ra = frobenius_root(A, 1), rb = frobenius_root(B, 1);
      EXPECT_TRUE(is_contained(A, frobenius_power(ra, 1)));                       // adjunction I
      EXPECT_TRUE(ideals_equal(frobenius_root(frobenius_power(A, 1), 1), A));     // adjunction II
      EXPECT_TRUE(ideals_equal(frobenius_root(ideal_sum(A, B), 1), ideal_sum(ra, rb)));  // additivity
      EXPECT_TRUE(is_contained(frobenius_root(ideal_product(A, B), 1), ra));       // monotone
      EXPECT_TRUE(ideals_equal(frobenius_root(frobenius_root(A, 1), 1), frobenius_root(A, 2)));
      // The root does not depend on the chosen generators.
      Ideal regen(r, A.groebner_basis());
      EXPECT_TRUE(ideals_equal(frobenius_root(regen, 1), ra));
    }
  }
}

TEST(FrobeniusRoot, MonomialFloorOracleAndMinimality) {
  oracle::Random rnd(9);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint64_t p = std::array<std::uint64_t, 3>{2, 3, 5}[rnd.below(3)];
    auto r = Ring::create(p, {"x", "y", "z"});
    auto gens = rnd.monomial_ideal(3, 9, 4);
    Ideal A = oracle::ideal_from(r, gens);
    Ideal root = frobenius_root(A, 1);
    Ideal floor = oracle::ideal_from(r, oracle::floor_root(gens, static_cast<std::int64_t>(p)));
    EXPECT_TRUE(ideals_equal(root, floor));
    // Minimality against random monomial J with A inside J^[p].
    for (int k = 0; k < 5; ++k) {
      Ideal J = oracle::ideal_from(r, rnd.monomial_ideal(3, 3, 3));
      if (is_contained(A, frobenius_power(J, 1))) EXPECT_TRUE(is_contained(root, J));
    }
    // The polynomial route (q-adic components) gives the same ideal.
    std::vector<Polynomial> comps;
    for (const auto& g : A.generators()) {
      for (const auto& [rho, part] : q_decompose(g, 1).parts) comps.push_back(part);
    }
    EXPECT_TRUE(ideals_equal(Ideal(r, comps), root));
  }
}
