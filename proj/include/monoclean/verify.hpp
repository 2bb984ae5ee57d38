#pragma once

// Batch harnesses that evaluate both sides of an implication or
// biconditional on seeded corpora and collect replayable counterexamples.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoclean/corpus.hpp"
#include "monoclean/monomial.hpp"

namespace monoclean {

enum class Theorem {
  RegularQuotient,        // thm26: cleanness variants survive S/I -> S/(I,u), u regular
  FilterRegularPretty,    // thm33: pretty cleanness survives, u_1..u_r filter-regular
  MaximalIdealPersists,   // lem35: m ∈ Ass(S/I) => m ∈ Ass(S/(I,u_1..u_r))
  FilterRegularStanley,   // thm36: Stanley inequality survives, u filter-regular
  GcdConditionForest,     // lem43: gcd condition => forest type => pretty clean
  DSequencePretty,        // prop44: G(I) a d-sequence => pretty clean
  DepthEqualities,        // cor47: depth = sdepth = min dim S/p
  OracleAgreement,        // decide() vs find_filtration()
  RegularSequenceClean,   // cor27: S/(regular monomial sequence) is clean
  FilterRegularSequence,  // cor34: S/(filter-regular monomial sequence) is pretty clean
};

std::string_view to_string(Theorem theorem);
std::optional<Theorem> parse_theorem(std::string_view id);
std::vector<Theorem> all_theorems();

struct Counterexample {
  std::size_t trial = 0;
  std::size_t nvars = 0;
  std::string ideal;
  std::vector<std::string> sequence;
  /// Named verdicts as printed by the CLI ("true", "false", or an integer).
  std::map<std::string, std::string> verdicts;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string theorem;
  CorpusSpec spec;
  bool exhaustive = false;
  std::size_t trials = 0;
  std::size_t passes = 0;  // includes vacuous passes
  std::size_t failures = 0;
  std::size_t skips = 0;
  std::size_t vacuous = 0;
  std::vector<Counterexample> counterexamples;
  double wall_seconds = 0;

  bool pass() const noexcept { return counterexamples.empty(); }
  std::size_t effective() const noexcept { return passes - vacuous + failures; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct HarnessOptions {
  /// Total-degree cap for regular / filter-regular witnesses.
  std::size_t witness_degree_cap = 3;
  /// When > 0, keep drawing trials until this many non-skipped, non-vacuous
  /// trials have run (bounded by 50x the target).
  std::size_t target_effective = 0;
  /// Oracle agreement only: enumerate every ideal with exponents <= max_deg.
  bool exhaustive = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

enum class TrialStatus { Pass, Vacuous, Fail, Skip };

struct TrialOutcome {
  TrialStatus status = TrialStatus::Skip;
  Counterexample record;
};

/// One trial; record is filled for every non-skipped outcome.
TrialOutcome run_trial(Theorem theorem, const CorpusSpec& spec, std::size_t trial,
                       const HarnessOptions& options = {});
/// Evaluates a specific instance the way run_trial would.
TrialOutcome evaluate_instance(Theorem theorem, const MonomialIdeal& ideal,
                               const std::vector<Monomial>& sequence);

VerificationReport verify(Theorem theorem, const CorpusSpec& spec, const HarnessOptions& options = {});

}  // namespace monoclean
