#include <gtest/gtest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "monoclean/cleanness.hpp"
#include "monoclean/errors.hpp"
#include "monoclean/homology.hpp"
#include "monoclean/stanley.hpp"
#include "oracles.hpp"

using namespace monoclean;
using testing_helpers::I;
using testing_helpers::M;

TEST(Sdepth, Examples) {
  const auto running = sdepth(I("x1^2, x1*x2", 2));
  EXPECT_EQ(running.value, 0u);
  EXPECT_TRUE(is_poset_partition(I("x1^2, x1*x2", 2), running.witness));
  EXPECT_EQ(sdepth(I("0", 3)).value, 3u);
  EXPECT_EQ(sdepth(I("x1*x2, x2*x3, x3*x4", 4)).value, 2u);
  EXPECT_EQ(sdepth(I("x1*x2, x2*x3, x3*x4, x4*x1", 4)).value, 1u);
}

TEST(Sdepth, ZeroIdealIsOneInterval) {
  const auto r = sdepth(I("0", 2));
  ASSERT_EQ(r.witness.intervals.size(), 1u);
  EXPECT_EQ(r.witness.intervals[0].bottom, Monomial::one(2));
}

TEST(Stanley, ConjectureAndRegularityChecks) {
  EXPECT_TRUE(stanley_conjecture_check(I("x1^2, x1*x2", 2)));
  EXPECT_TRUE(stanley_conjecture_check(I("0", 3)));
  EXPECT_TRUE(h_regularity_check(I("x1^2, x1*x2", 2)));
  EXPECT_TRUE(h_regularity_check(I("0", 3)));
  const auto p = partition_with_degree_bound(I("x1^2, x1*x2", 2), 1);
  ASSERT_TRUE(p);
  EXPECT_LE(p->max_generator_degree(), 1u);
  EXPECT_FALSE(partition_with_degree_bound(I("x1^2, x1*x2", 2), 0));
  EXPECT_EQ(min_max_generator_degree(I("x1^2, x1*x2", 2)), 1u);
}

TEST(Stanley, PartitionCheckerRejectsBadCovers) {
  const auto ideal = I("x1^2, x1*x2", 2);
  const Monomial cap{2, 1};
  // misses (1,0)
  EXPECT_FALSE(is_poset_partition(ideal, {cap, {{Monomial({0, 0}), Monomial({0, 1})}}}));
  // overlap at (0,0)
  EXPECT_FALSE(is_poset_partition(ideal, {cap,
                                          {{Monomial({0, 0}), Monomial({0, 1})},
                                           {Monomial({0, 0}), Monomial({1, 0})}}}));
  // top inside the ideal
  EXPECT_FALSE(is_poset_partition(ideal, {cap, {{Monomial({0, 0}), Monomial({1, 1})}}}));
  EXPECT_TRUE(is_poset_partition(ideal, {cap,
                                         {{Monomial({0, 0}), Monomial({0, 1})},
                                          {Monomial({1, 0}), Monomial({1, 0})}}}));
}

TEST(Stanley, PosetCapFailsLoudly) {
  setenv("MONOCLEAN_MAX_POSET", "10", 1);
  EXPECT_THROW(sdepth(I("x1^4, x2^4", 2)), ResourceError);
  unsetenv("MONOCLEAN_MAX_POSET");
  EXPECT_EQ(sdepth(I("x1^4, x2^4", 2)).value, 0u);
}

TEST(StanleyProperty, MatchesBruteForceAndDepthBounds) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto ideal = testing_helpers::random_ideal(rng, n, 2, 1 + trial % 3);
    if (ideal.is_unit()) continue;
    const auto r = sdepth(ideal);
    EXPECT_TRUE(is_poset_partition(ideal, r.witness)) << testing_helpers::str(ideal);
    EXPECT_EQ(r.witness.sdepth(), r.value);
    EXPECT_EQ(r.value, oracle::sdepth(oracle::gens_of(ideal), n)) << testing_helpers::str(ideal);
    for (std::size_t d = 0; d <= r.value; ++d) EXPECT_TRUE(partition_with_sdepth(ideal, d));
    EXPECT_FALSE(partition_with_sdepth(ideal, r.value + 1));
    for (const auto& p : associated_primes(ideal)) EXPECT_LE(r.value, p.dim());
    if (decide(ideal, CleannessMode::PrettyClean).holds) EXPECT_EQ(r.value, depth(ideal));
    if (ideal.is_squarefree()) EXPECT_EQ(stanley_conjecture_check(ideal), h_regularity_check(ideal));
  }
}
