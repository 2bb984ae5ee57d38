#include <gtest/gtest.h>

#include "helpers.hpp"
#include "monoclean/cleanness.hpp"
#include "monoclean/corpus.hpp"
#include "monoclean/errors.hpp"
#include "oracles.hpp"

using namespace monoclean;
using testing_helpers::I;
using testing_helpers::M;
using testing_helpers::P;

namespace {

IrreducibleComponent Q(const std::vector<Exponent>& powers) { return IrreducibleComponent(Monomial(powers)); }

constexpr CleannessMode kModes[] = {CleannessMode::Clean, CleannessMode::PrettyClean, CleannessMode::AlmostClean};

oracle::Mode to_oracle(CleannessMode m) {
  switch (m) {
    case CleannessMode::Clean: return oracle::Mode::Clean;
    case CleannessMode::PrettyClean: return oracle::Mode::Pretty;
    case CleannessMode::AlmostClean: return oracle::Mode::Almost;
  }
  return oracle::Mode::Clean;
}

}  // namespace

TEST(TSets, RunningExample) {
  // (x) then (x^2, y)
  const OrderedDecomposition d{{Q({1, 0}), Q({2, 1})}};
  const auto ts = t_sets(d);
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[0], (std::vector{Monomial::one(2)}));
  EXPECT_EQ(ts[1], (std::vector{M("x1", 2)}));
  const auto swapped = t_sets(OrderedDecomposition{{Q({2, 1}), Q({1, 0})}});
  EXPECT_EQ(swapped[1], (std::vector{M("x2", 2)}));
  EXPECT_EQ(t_sets(OrderedDecomposition{{Q({1, 3})}}).size(), 1u);
}

TEST(TSets, MatchBruteForceMinimalElements) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto ideal = testing_helpers::random_ideal(rng, n, 2, 3);
    if (ideal.is_unit()) continue;
    auto comps = irreducible_decomposition(ideal).components;
    std::shuffle(comps.begin(), comps.end(), rng);
    const OrderedDecomposition d{comps};
    const auto ts = t_sets(d);
    oracle::Vec cap(n, 3);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      oracle::Gens diff;
      for (const auto& v : oracle::box(cap)) {
        bool in_prefix = true;
        for (std::size_t j = 0; j < i; ++j) in_prefix = in_prefix && comps[j].contains(oracle::mono(v));
        if (in_prefix && !comps[i].contains(oracle::mono(v))) diff.push_back(v);
      }
      std::vector<Monomial> expected;
      for (const auto& g : oracle::minimalize(diff)) expected.push_back(oracle::mono(g));
      std::sort(expected.begin(), expected.end(), CanonicalOrder{});
      auto got = ts[i];
      std::sort(got.begin(), got.end(), CanonicalOrder{});
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(CheckOrdering, RunningExample) {
  const OrderedDecomposition d{{Q({1, 0}), Q({2, 1})}};
  EXPECT_TRUE(check_ordering(d, CleannessMode::PrettyClean));
  EXPECT_FALSE(check_ordering(d, CleannessMode::Clean));
  EXPECT_TRUE(check_ordering(d, CleannessMode::AlmostClean));
  EXPECT_FALSE(check_ordering(OrderedDecomposition{{Q({2, 1}), Q({1, 0})}}, CleannessMode::PrettyClean));
  for (auto mode : kModes) EXPECT_TRUE(check_ordering(OrderedDecomposition{{Q({2, 3})}}, mode));
}

TEST(Decide, RunningExample) {
  const auto ideal = I("x1^2, x1*x2", 2);
  EXPECT_FALSE(decide(ideal, CleannessMode::Clean).holds);
  const auto pretty = decide(ideal, CleannessMode::PrettyClean);
  ASSERT_TRUE(pretty.holds);
  ASSERT_TRUE(pretty.certificate);
  EXPECT_EQ(pretty.certificate->components, (std::vector{Q({1, 0}), Q({2, 1})}));
  EXPECT_TRUE(decide(I("x1", 2), CleannessMode::Clean).holds);
}

TEST(Decide, PathAndCycle) {
  const auto path = I("x1*x2, x2*x3, x3*x4", 4);
  for (auto mode : kModes) EXPECT_TRUE(decide(path, mode).holds);
  const auto cycle = I("x1*x2, x2*x3, x3*x4, x4*x1", 4);
  EXPECT_FALSE(decide(cycle, CleannessMode::PrettyClean).holds);
  EXPECT_FALSE(decide(cycle, CleannessMode::PrettyClean).certificate);
  EXPECT_FALSE(find_filtration(cycle, CleannessMode::PrettyClean));
}

// No ordering of the irredundant components works here; the certificate
// needs components outside the canonical decomposition.
TEST(Decide, NeedsNonCanonicalComponents) {
  const auto ideal = I("x1^3*x3, x1^2*x2^3*x3, x1*x2^2*x3^3, x2^3*x3^2", 3);
  const auto v = decide(ideal, CleannessMode::PrettyClean);
  ASSERT_TRUE(v.holds);
  EXPECT_TRUE(check_ordering(*v.certificate, CleannessMode::PrettyClean));
  EXPECT_EQ(Decomposition{v.certificate->components}.intersection(3), ideal);
  const auto canonical = irreducible_decomposition(ideal).components;
  EXPECT_TRUE(std::any_of(v.certificate->components.begin(), v.certificate->components.end(), [&](const auto& q) {
    return std::find(canonical.begin(), canonical.end(), q) == canonical.end();
  }));
  EXPECT_TRUE(find_filtration(ideal, CleannessMode::PrettyClean).has_value());
}

TEST(Decide, ZeroIdealIsClean) {
  for (auto mode : kModes) {
    const auto v = decide(I("0", 3), mode);
    EXPECT_TRUE(v.holds);
    const auto f = find_filtration(I("0", 3), mode);
    ASSERT_TRUE(f);
    ASSERT_EQ(f->steps.size(), 1u);
    EXPECT_EQ(f->steps[0].prime, P(3, {}));
    EXPECT_TRUE(validate_filtration(*f, I("0", 3), mode).ok);
  }
}

TEST(Filtration, RunningExampleCertificate) {
  const auto f = find_filtration(I("x1^2, x1*x2", 2), CleannessMode::PrettyClean);
  ASSERT_TRUE(f);
  const std::vector<FiltrationStep> expected{{M("x1", 2), P(2, {0, 1})}, {Monomial::one(2), P(2, {0})}};
  EXPECT_EQ(f->steps, expected);
  EXPECT_TRUE(validate_filtration(*f, I("x1^2, x1*x2", 2), CleannessMode::PrettyClean));
}

TEST(Filtration, PrimeIdealIsOneStep) {
  const auto f = find_filtration(I("x1, x3", 3), CleannessMode::Clean);
  ASSERT_TRUE(f);
  ASSERT_EQ(f->steps.size(), 1u);
  EXPECT_EQ(f->steps[0].v, Monomial::one(3));
  EXPECT_EQ(f->steps[0].prime, P(3, {0, 2}));
}

TEST(Filtration, BoundMustDominateLcm) {
  EXPECT_THROW(find_filtration(I("x1^2, x1*x2", 2), CleannessMode::PrettyClean, M("x1*x2", 2)), PreconditionError);
}

TEST(Validate, RejectsBrokenCertificates) {
  const auto ideal = I("x1^2, x1*x2", 2);
  const PrimeFiltration swapped{{{Monomial::one(2), P(2, {0})}, {M("x1", 2), P(2, {0, 1})}}};
  EXPECT_FALSE(validate_filtration(swapped, ideal, CleannessMode::PrettyClean));
  const PrimeFiltration unfinished{{{M("x1", 2), P(2, {0, 1})}}};
  const auto check = validate_filtration(unfinished, ideal, CleannessMode::PrettyClean);
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.diagnostic.empty());
  const PrimeFiltration wrong_prime{{{M("x1", 2), P(2, {0})}, {Monomial::one(2), P(2, {0})}}};
  EXPECT_FALSE(validate_filtration(wrong_prime, ideal, CleannessMode::PrettyClean));
  // Valid chain, but the support is not Min(S/I).
  const PrimeFiltration good{{{M("x1", 2), P(2, {0, 1})}, {Monomial::one(2), P(2, {0})}}};
  EXPECT_FALSE(validate_filtration(good, ideal, CleannessMode::Clean));
}

TEST(CleannessProperty, AgreesWithBruteForceFiltrations) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto ideal = testing_helpers::random_ideal(rng, n, n == 2 ? 3 : 2, 1 + trial % 4);
    if (ideal.is_unit()) continue;
    for (auto mode : kModes) {
      const bool expected = oracle::has_filtration(oracle::gens_of(ideal), n, to_oracle(mode));
      EXPECT_EQ(decide(ideal, mode).holds, expected) << testing_helpers::str(ideal) << " " << to_string(mode);
      EXPECT_EQ(find_filtration(ideal, mode).has_value(), expected) << testing_helpers::str(ideal);
    }
  }
}

TEST(CleannessProperty, InvariantsOverCorpus) {
  CorpusSpec spec;
  spec.nvars = 3;
  spec.max_deg = 3;
  spec.gen_count = 4;
  spec.trials = 150;
  spec.seed = 99;
  for (const auto& ideal : gen_ideals(spec)) {
    const auto name = testing_helpers::str(ideal);
    const bool c = decide(ideal, CleannessMode::Clean).holds;
    const bool p = decide(ideal, CleannessMode::PrettyClean).holds;
    const bool a = decide(ideal, CleannessMode::AlmostClean).holds;
    EXPECT_TRUE(!c || p) << name;
    EXPECT_TRUE(!p || a) << name;
    if (ideal.is_squarefree()) {
      EXPECT_EQ(c, p) << name;
      EXPECT_EQ(p, a) << name;
    }
    const auto sat = saturate(ideal);
    if (sat.is_proper()) {
      EXPECT_EQ(p, decide(sat, CleannessMode::PrettyClean).holds) << name;
      if (decide(sat, CleannessMode::AlmostClean).holds) EXPECT_TRUE(a) << name;
    }
    for (auto mode : kModes) {
      const auto v = decide(ideal, mode);
      if (v.certificate) {
        EXPECT_TRUE(check_ordering(*v.certificate, mode)) << name;
        EXPECT_EQ(Decomposition{v.certificate->components}.intersection(3), ideal);
      }
      const auto f = find_filtration(ideal, mode);
      if (!f) continue;
      EXPECT_TRUE(validate_filtration(*f, ideal, mode).ok) << name;
      std::set<MonomialPrime> support;
      for (const auto& s : f->steps) support.insert(s.prime);
      for (const auto& q : associated_primes(ideal)) EXPECT_TRUE(support.count(q)) << name;
    }
  }
}

TEST(CleannessProperty, LcmBoundMatchesLargerBound) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto ideal = testing_helpers::random_ideal(rng, n, 2, 3);
    if (ideal.is_unit()) continue;
    std::vector<Exponent> wide(n);
    const auto l = ideal.lcm_of_generators();
    for (std::size_t i = 0; i < n; ++i) wide[i] = l[i] + 1;
    for (auto mode : kModes) {
      EXPECT_EQ(find_filtration(ideal, mode).has_value(), find_filtration(ideal, mode, Monomial(wide)).has_value())
          << testing_helpers::str(ideal);
      EXPECT_EQ(decide(ideal, mode).holds, decide(ideal, mode, Monomial(wide)).holds) << testing_helpers::str(ideal);
    }
  }
}

TEST(CleannessProperty, ExhaustiveTwoVariablesAgainstBruteForce) {
  for (const auto& ideal : exhaustive_ideals(2, 2)) {
    for (auto mode : kModes) {
      const bool expected = oracle::has_filtration(oracle::gens_of(ideal), 2, to_oracle(mode));
      EXPECT_EQ(decide(ideal, mode).holds, expected) << testing_helpers::str(ideal);
    }
  }
}
