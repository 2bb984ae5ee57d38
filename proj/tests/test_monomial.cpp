#include <gtest/gtest.h>

#include <unordered_set>

#include "helpers.hpp"
#include "monoclean/errors.hpp"
#include "oracles.hpp"

using namespace monoclean;
using testing_helpers::I;
using testing_helpers::M;

TEST(Monomial, DivisibilityGcdLcm) {
  const Monomial a{2, 1, 0}, b{1, 3, 1};
  EXPECT_TRUE(divides(Monomial({1, 1, 0}), a));
  EXPECT_FALSE(divides(a, b));
  EXPECT_EQ(gcd(a, b), Monomial({1, 1, 0}));
  EXPECT_EQ(lcm(a, b), Monomial({2, 3, 1}));
  EXPECT_EQ(a * b, Monomial({3, 4, 1}));
  EXPECT_EQ(colon(a, b), Monomial({1, 0, 0}));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_THROW(a / b, std::invalid_argument);
}

TEST(Monomial, ProductOverflowThrows) {
  const Monomial big{kMaxExponent};
  EXPECT_THROW(big * Monomial({1}), std::overflow_error);
}

TEST(Monomial, MixedRingsRejected) {
  EXPECT_THROW(divides(Monomial({1, 0}), Monomial({1, 0, 0})), RingMismatch);
  EXPECT_THROW(sum(I("x1", 2), I("x1", 3)), RingMismatch);
}

TEST(Monomial, Queries) {
  const Monomial m = M("x1^2*x3", 3);
  EXPECT_EQ(m.degree(), 3u);
  EXPECT_FALSE(m.is_squarefree());
  EXPECT_EQ(m.support(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(M("x2^4", 3).pure_power_variable(), std::optional<std::size_t>(1));
  EXPECT_FALSE(m.pure_power_variable());
  EXPECT_TRUE(Monomial::one(3).is_one());
}

TEST(Monomial, CanonicalOrderIsDescendingLex) {
  std::vector<Monomial> v{M("x2", 2), M("x1", 2), M("x1*x2", 2), M("x1^2", 2)};
  std::sort(v.begin(), v.end(), CanonicalOrder{});
  EXPECT_EQ(v, (std::vector<Monomial>{M("x1^2", 2), M("x1*x2", 2), M("x1", 2), M("x2", 2)}));
}

TEST(Prime, Basics) {
  const MonomialPrime p(3, {2, 0, 0});
  EXPECT_EQ(p.vars(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(p.height(), 2u);
  EXPECT_EQ(p.dim(), 1u);
  EXPECT_TRUE(p.contains(M("x3*x2", 3)));
  EXPECT_FALSE(p.contains(M("x2^5", 3)));
  EXPECT_TRUE(MonomialPrime(3, {0}).subset_of(p));
  EXPECT_TRUE(MonomialPrime::maximal(3).is_maximal());
  EXPECT_LT(MonomialPrime(3, {2}), MonomialPrime(3, {0, 1}));
  EXPECT_THROW(MonomialPrime(2, {2}), std::out_of_range);
}

TEST(Ideal, MinimalizationAndEquality) {
  const auto a = I("x1^2, x1*x2, x1^3*x2, x1*x2", 2);
  EXPECT_EQ(a.gens().size(), 2u);
  EXPECT_EQ(a, I("x1*x2, x1^2", 2));
  EXPECT_TRUE(I("0", 3).is_zero());
  EXPECT_TRUE(I("1, x1", 2).is_unit());
  EXPECT_EQ(I("x1*x2^3, x2*x3", 3).lcm_of_generators(), Monomial({1, 3, 1}));
  EXPECT_EQ(I("x1, x3", 3).as_prime(), std::optional<MonomialPrime>(MonomialPrime(3, {0, 2})));
  EXPECT_FALSE(I("x1^2", 3).as_prime());
}

TEST(Ideal, HashAgreesWithEquality) {
  std::unordered_set<MonomialIdeal> seen;
  seen.insert(I("x1^2, x1*x2", 2));
  seen.insert(I("x1*x2, x1^2, x1^2*x2", 2));
  EXPECT_EQ(seen.size(), 1u);
}

TEST(Ideal, SaturationOfTheRunningExample) {
  EXPECT_EQ(saturate(I("x1^2, x1*x2", 2)), I("x1", 2));
  EXPECT_EQ(saturate(I("x1, x2", 2)), MonomialIdeal::unit(2));
  EXPECT_EQ(saturate(I("0", 2)), I("0", 2));
}

TEST(Ideal, ColonByIdealRejectsZero) {
  EXPECT_THROW(colon(I("x1", 2), I("0", 2)), std::invalid_argument);
  EXPECT_EQ(colon(I("x1^2, x1*x2", 2), I("x1, x2", 2)), I("x1", 2));
}

TEST(IdealProperty, OperationsMatchNaiveVersions) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto a = testing_helpers::random_ideal(rng, n, 3, 1 + trial % 4);
    const auto b = testing_helpers::random_ideal(rng, n, 3, 1 + (trial / 4) % 3);
    const auto ga = oracle::gens_of(a), gb = oracle::gens_of(b);
    EXPECT_EQ(sum(a, b), oracle::ideal_of(n, oracle::sum(ga, gb)));
    EXPECT_EQ(intersect(a, b), oracle::ideal_of(n, oracle::intersect(ga, gb)));
    const auto v = b.gens().front();
    EXPECT_EQ(colon(a, v), oracle::ideal_of(n, oracle::colon(ga, oracle::vec(v))));
    EXPECT_EQ(saturate(a), oracle::ideal_of(n, oracle::saturation(ga, n)));
    for (const auto& p : oracle::box(oracle::lcm(ga, n)))
      EXPECT_EQ(contains(a, oracle::mono(p)), oracle::member(ga, p));
    EXPECT_TRUE(is_subset(a, sum(a, b)));
    EXPECT_TRUE(is_subset(intersect(a, b), b));
    EXPECT_EQ(is_subset(a, b), sum(a, b) == b);
  }
}
