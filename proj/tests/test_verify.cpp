#include <gtest/gtest.h>

#include <sstream>

#include "helpers.hpp"
#include "monoclean/cli.hpp"
#include "monoclean/errors.hpp"
#include "monoclean/verify.hpp"

using namespace monoclean;
using testing_helpers::I;
using testing_helpers::M;

namespace {

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

// CLI invocation that recomputes one named verdict of a record.
std::vector<std::string> replay_args(const Counterexample& c, const std::string& key) {
  const std::string seq = joined(c.sequence);
  const std::string extended = c.ideal == "0" ? seq : c.ideal + ", " + seq;
  std::vector<std::string> args;
  auto split = [&](const std::string& k, std::string& head) {
    if (k.ends_with("(I)")) {
      head = k.substr(0, k.size() - 3);
      return c.ideal;
    }
    head = k.substr(0, k.size() - 5);  // "(I+u)"
    return extended;
  };
  if (key.ends_with(")")) {
    std::string head;
    const std::string ideal = split(key, head);
    if (head == "m_in_ass") args = {"ass", ideal, "--maximal"};
    else args = {head, ideal};
  } else if (key == "quotient_formula") {
    args = {"regseq", c.ideal, "--check", seq, "--formula"};
  } else if (key == "gcdcond") {
    args = {"gcdcond", seq};
  } else if (key == "gcdcond_any_order") {
    args = {"gcdcond", c.ideal, "--any-order"};
  } else if (key == "dseq") {
    args = {"dseq", c.ideal};
  } else if (key == "dseq_any_order") {
    args = {"dseq", c.ideal, "--any-order"};
  } else if (key == "min_dim_ass") {
    args = {"ass", c.ideal, "--min-dim"};
  } else if (key.ends_with("_oracle")) {
    args = {key.substr(0, key.size() - 7), c.ideal, "--oracle"};
  } else {
    args = {key, c.ideal};
  }
  args.push_back("--vars");
  args.push_back(std::to_string(c.nvars));
  return args;
}

CorpusSpec small_spec(std::size_t trials) {
  CorpusSpec spec;
  spec.nvars = 3;
  spec.max_deg = 2;
  spec.gen_count = 3;
  spec.trials = trials;
  spec.dropout_pct = 25;
  return spec;
}

}  // namespace

TEST(Verify, TheoremIds) {
  for (auto t : all_theorems()) EXPECT_EQ(parse_theorem(to_string(t)), t);
  EXPECT_FALSE(parse_theorem("thm99"));
  EXPECT_EQ(all_theorems().size(), 10u);
}

TEST(Verify, EveryHarnessPassesAndAccountsForTrials) {
  for (auto t : all_theorems()) {
    const auto report = verify(t, small_spec(12));
    EXPECT_TRUE(report.pass()) << to_string(t);
    EXPECT_EQ(report.trials, report.passes + report.failures + report.skips) << to_string(t);
    EXPECT_EQ(report.trials, 12u);
    EXPECT_EQ(report.theorem, to_string(t));
  }
}

TEST(Verify, DeterministicAcrossThreadCounts) {
  for (auto t : {Theorem::FilterRegularPretty, Theorem::OracleAgreement, Theorem::DepthEqualities}) {
    HarnessOptions one, many;
    one.threads = 1;
    many.threads = 4;
    auto a = verify(t, small_spec(20), one);
    auto b = verify(t, small_spec(20), many);
    a.wall_seconds = b.wall_seconds = 0;
    EXPECT_EQ(a, b);
  }
}

TEST(Verify, TargetCountsEffectiveTrials) {
  HarnessOptions options;
  options.target_effective = 15;
  const auto report = verify(Theorem::RegularQuotient, small_spec(1), options);
  EXPECT_EQ(report.effective(), 15u);
  EXPECT_EQ(report.trials, report.passes + report.failures + report.skips);
}

TEST(Verify, ExhaustiveOracleAgreement) {
  HarnessOptions options;
  options.exhaustive = true;
  CorpusSpec spec;
  spec.nvars = 2;
  spec.max_deg = 2;
  const auto report = verify(Theorem::OracleAgreement, spec, options);
  EXPECT_TRUE(report.exhaustive);
  EXPECT_EQ(report.trials, 18u);
  EXPECT_TRUE(report.pass());
}

TEST(Verify, InvalidSpecIsConfigError) {
  CorpusSpec spec;
  spec.nvars = 0;
  EXPECT_THROW(verify(Theorem::RegularQuotient, spec), ConfigError);
}

TEST(Verify, EvaluateInstanceByHand) {
  const auto ideal = I("x1*x2, x2*x3, x3*x4", 4);
  // Not filter-regular, so the biconditional is not in force.
  const auto out = evaluate_instance(Theorem::FilterRegularPretty, ideal, {M("x4*x1", 4)});
  EXPECT_EQ(out.status, TrialStatus::Vacuous);
  const auto oracle = evaluate_instance(Theorem::OracleAgreement, I("x1*x2, x2*x3, x3*x4, x4*x1", 4), {});
  EXPECT_EQ(oracle.status, TrialStatus::Pass);
  EXPECT_EQ(oracle.record.verdicts.at("pretty"), "false");
  EXPECT_EQ(oracle.record.verdicts.at("pretty_oracle"), "false");
}

TEST(Verify, RecordsReplayThroughTheCli) {
  for (auto t : all_theorems()) {
    const auto spec = small_spec(8);
    for (std::size_t trial = 0; trial < spec.trials; ++trial) {
      const auto outcome = run_trial(t, spec, trial);
      if (outcome.status == TrialStatus::Skip) continue;
      for (const auto& [key, value] : outcome.record.verdicts) {
        std::ostringstream out, err;
        const auto args = replay_args(outcome.record, key);
        ASSERT_EQ(run_cli(args, out, err), 0) << to_string(t) << " " << key << ": " << err.str();
        EXPECT_EQ(out.str(), value + "\n") << to_string(t) << " " << key << " on " << outcome.record.ideal;
      }
    }
  }
}

TEST(Verify, MaximalIdealDrawsSatisfyTheHypothesisOften) {
  CorpusSpec spec;
  spec.nvars = 4;
  spec.max_deg = 3;
  spec.gen_count = 3;
  HarnessOptions options;
  options.target_effective = 10;
  const auto report = verify(Theorem::MaximalIdealPersists, spec, options);
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.effective(), 10u);
}
