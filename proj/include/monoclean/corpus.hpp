#pragma once

// Seeded ideal corpora. Each trial owns an independent substream: the
// substream seed is SplitMix64(seed ^ SplitMix64(trial)), feeding a
// std::mt19937_64 whose output is reduced to ranges by rejection sampling.
// Streams are therefore identical across platforms and thread counts.

#include <cstdint>
#include <random>
#include <vector>

#include "monoclean/monomial.hpp"

namespace monoclean {

struct CorpusSpec {
  std::uint64_t seed = 1;
  std::size_t nvars = 3;
  Exponent max_deg = 2;       // per-variable exponent cap
  std::size_t gen_count = 3;  // generators drawn per ideal (before minimalization)
  std::size_t trials = 10;
  bool squarefree = false;
  unsigned dropout_pct = 0;   // chance that a variable is absent from a whole trial

  friend bool operator==(const CorpusSpec&, const CorpusSpec&) = default;
};

/// Throws ConfigError for unsatisfiable specs.
void validate(const CorpusSpec& spec);

std::uint64_t splitmix64(std::uint64_t x);

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool chance(unsigned percent) { return below(100) < percent; }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// Raw generator list for one trial, in draw order; no unit monomials.
std::vector<Monomial> draw_generators(const CorpusSpec& spec, TrialRng& rng);
MonomialIdeal draw_ideal(const CorpusSpec& spec, TrialRng& rng);

/// One ideal per trial, trial t drawn from substream t.
std::vector<MonomialIdeal> gen_ideals(const CorpusSpec& spec);

/// Every proper nonzero monomial ideal whose generators have exponents <= max_deg.
std::vector<MonomialIdeal> exhaustive_ideals(std::size_t nvars, Exponent max_deg);

}  // namespace monoclean
