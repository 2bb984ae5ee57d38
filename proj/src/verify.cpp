#include "monoclean/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "monoclean/cleanness.hpp"
#include "monoclean/decomposition.hpp"
#include "monoclean/errors.hpp"
#include "monoclean/homology.hpp"
#include "monoclean/sequences.hpp"
#include "monoclean/stanley.hpp"
#include "monoclean/text.hpp"

namespace monoclean {

namespace {

struct TheoremName {
  Theorem theorem;
  std::string_view id;
};

constexpr TheoremName kNames[] = {
    {Theorem::RegularQuotient, "thm26"},       {Theorem::FilterRegularPretty, "thm33"},
    {Theorem::MaximalIdealPersists, "lem35"},  {Theorem::FilterRegularStanley, "thm36"},
    {Theorem::GcdConditionForest, "lem43"},    {Theorem::DSequencePretty, "prop44"},
    {Theorem::DepthEqualities, "cor47"},       {Theorem::OracleAgreement, "oracle-agreement"},
    {Theorem::RegularSequenceClean, "cor27"},  {Theorem::FilterRegularSequence, "cor34"},
};

constexpr CleannessMode kModes[] = {CleannessMode::Clean, CleannessMode::PrettyClean,
                                    CleannessMode::AlmostClean};

std::string verdict(bool b) { return b ? "true" : "false"; }

MonomialIdeal extend(const MonomialIdeal& ideal, const std::vector<Monomial>& seq) {
  return sum(ideal, std::span<const Monomial>(seq));
}

// Random sequence u_1..u_len where each u_k is (filter-)regular on the
// quotient by the earlier ones and not already in it.
std::optional<std::vector<Monomial>> random_sequence(const MonomialIdeal& base, std::size_t length,
                                                     std::size_t cap, TrialRng& rng, bool regular) {
  std::vector<Monomial> seq;
  MonomialIdeal current = base;
  for (std::size_t k = 0; k < length; ++k) {
    auto cands = regular ? regular_candidates(current, cap) : filter_regular_candidates(current, cap);
    std::erase_if(cands, [&](const Monomial& u) { return contains(current, u); });
    if (cands.empty()) return std::nullopt;
    seq.push_back(rng.pick(cands));
    current = sum(current, std::span<const Monomial>(&seq.back(), 1));
  }
  return seq;
}

struct Instance {
  MonomialIdeal ideal;
  std::vector<Monomial> sequence;
};

std::optional<Instance> draw_instance(Theorem theorem, const CorpusSpec& spec, std::size_t trial,
                                      const HarnessOptions& options) {
  TrialRng rng(spec.seed, trial);
  const std::size_t cap = options.witness_degree_cap;
  const MonomialIdeal zero = MonomialIdeal::zero(spec.nvars);
  const std::size_t max_len = std::min<std::size_t>(spec.nvars, 3);
  switch (theorem) {
    case Theorem::RegularQuotient:
    case Theorem::FilterRegularStanley: {
      MonomialIdeal ideal = draw_ideal(spec, rng);
      auto seq = random_sequence(ideal, 1, cap, rng, theorem == Theorem::RegularQuotient);
      if (!seq) return std::nullopt;
      return Instance{std::move(ideal), std::move(*seq)};
    }
    case Theorem::FilterRegularPretty:
    case Theorem::MaximalIdealPersists: {
      MonomialIdeal ideal = draw_ideal(spec, rng);
      if (theorem == Theorem::MaximalIdealPersists) {
        // m ∈ Ass(S/I) is rare in random ideals; add an m-primary component.
        std::vector<Exponent> e(spec.nvars);
        for (auto& x : e) x = static_cast<Exponent>(1 + rng.below(spec.max_deg));
        ideal = intersect(ideal, IrreducibleComponent(Monomial(std::move(e))).ideal());
      }
      auto seq = random_sequence(ideal, 1 + trial % 2, cap, rng, false);
      if (!seq) return std::nullopt;
      return Instance{std::move(ideal), std::move(*seq)};
    }
    case Theorem::GcdConditionForest:
    case Theorem::DSequencePretty: {
      auto gens = draw_generators(spec, rng);
      return Instance{MonomialIdeal(spec.nvars, gens), std::move(gens)};
    }
    case Theorem::DepthEqualities: {
      if (trial % 2 == 0) {
        auto seq = random_sequence(zero, 1 + rng.below(max_len), cap, rng, false);
        if (!seq) return std::nullopt;
        return Instance{MonomialIdeal(spec.nvars, *seq), std::move(*seq)};
      }
      MonomialIdeal ideal = draw_ideal(spec, rng);
      auto order = d_sequence_order(zero, MonomialSequence(ideal.gens()));
      if (!order) return std::nullopt;
      return Instance{std::move(ideal), order->items()};
    }
    case Theorem::OracleAgreement:
      return Instance{draw_ideal(spec, rng), {}};
    case Theorem::RegularSequenceClean:
    case Theorem::FilterRegularSequence: {
      auto seq = random_sequence(zero, 1 + rng.below(max_len), cap, rng,
                                 theorem == Theorem::RegularSequenceClean);
      if (!seq) return std::nullopt;
      return Instance{MonomialIdeal(spec.nvars, *seq), std::move(*seq)};
    }
  }
  return std::nullopt;
}

std::size_t min_dim_over_ass(const MonomialIdeal& ideal) {
  std::size_t best = ideal.nvars();
  for (const auto& p : associated_primes(ideal)) best = std::min(best, p.dim());
  return best;
}

}  // namespace

std::string_view to_string(Theorem theorem) {
  for (const auto& n : kNames) {
    if (n.theorem == theorem) return n.id;
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n.theorem;
  }
  return std::nullopt;
}

std::vector<Theorem> all_theorems() {
  std::vector<Theorem> out;
  for (const auto& n : kNames) out.push_back(n.theorem);
  return out;
}

TrialOutcome evaluate_instance(Theorem theorem, const MonomialIdeal& ideal, const std::vector<Monomial>& sequence) {
  const RingContext ring(ideal.nvars());
  TrialOutcome out;
  out.record.nvars = ideal.nvars();
  out.record.ideal = format(ideal, ring);
  for (const auto& u : sequence) out.record.sequence.push_back(format(u, ring));
  auto& v = out.record.verdicts;
  bool ok = true;
  bool vacuous = false;

  switch (theorem) {
    case Theorem::RegularQuotient: {
      if (!is_regular_sequence(ideal, MonomialSequence(sequence))) {
        vacuous = true;
        break;
      }
      const MonomialIdeal quotient = extend(ideal, sequence);
      for (auto mode : kModes) {
        const bool lhs = decide(ideal, mode).holds;
        const bool rhs = decide(quotient, mode).holds;
        v[std::string(to_string(mode)) + "(I)"] = verdict(lhs);
        v[std::string(to_string(mode)) + "(I+u)"] = verdict(rhs);
        ok = ok && lhs == rhs;
      }
      MonomialIdeal current = ideal;
      bool formula = true;
      for (const auto& u : sequence) {
        formula = formula && quotient_formula_check(current, u);
        current = sum(current, std::span<const Monomial>(&u, 1));
      }
      v["quotient_formula"] = verdict(formula);
      ok = ok && formula;
      break;
    }
    case Theorem::FilterRegularPretty: {
      if (!is_filter_regular_sequence(ideal, MonomialSequence(sequence))) {
        vacuous = true;
        break;
      }
      const bool lhs = decide(ideal, CleannessMode::PrettyClean).holds;
      const bool rhs = decide(extend(ideal, sequence), CleannessMode::PrettyClean).holds;
      v["pretty(I)"] = verdict(lhs);
      v["pretty(I+u)"] = verdict(rhs);
      ok = lhs == rhs;
      break;
    }
    case Theorem::MaximalIdealPersists: {
      if (!is_filter_regular_sequence(ideal, MonomialSequence(sequence))) {
        vacuous = true;
        break;
      }
      const bool before = has_maximal_in_ass(ideal);
      const bool after = has_maximal_in_ass(extend(ideal, sequence));
      v["m_in_ass(I)"] = verdict(before);
      v["m_in_ass(I+u)"] = verdict(after);
      vacuous = !before;
      ok = !before || after;
      break;
    }
    case Theorem::FilterRegularStanley: {
      if (!is_filter_regular_sequence(ideal, MonomialSequence(sequence))) {
        vacuous = true;
        break;
      }
      const bool lhs = stanley_conjecture_check(ideal);
      const bool rhs = stanley_conjecture_check(extend(ideal, sequence));
      v["stanley(I)"] = verdict(lhs);
      v["stanley(I+u)"] = verdict(rhs);
      ok = lhs == rhs;
      break;
    }
    case Theorem::GcdConditionForest: {
      const bool given = gcd_condition(MonomialSequence(sequence));
      const bool some_order = gcd_condition_order(MonomialSequence(ideal.gens())).has_value();
      const bool forest = is_forest_type(ideal);
      const bool pretty = decide(ideal, CleannessMode::PrettyClean).holds;
      v["gcdcond"] = verdict(given);
      v["gcdcond_any_order"] = verdict(some_order);
      v["foresttype"] = verdict(forest);
      v["pretty"] = verdict(pretty);
      ok = (!given || forest) && (!some_order || forest) && (!forest || pretty);
      vacuous = !given && !some_order && !forest;
      break;
    }
    case Theorem::DSequencePretty: {
      const MonomialIdeal zero = MonomialIdeal::zero(ideal.nvars());
      const MonomialSequence gens(ideal.gens());
      const bool given = is_d_sequence_on(zero, gens);
      const bool some_order = d_sequence_order(zero, gens).has_value();
      const bool pretty = decide(ideal, CleannessMode::PrettyClean).holds;
      v["dseq"] = verdict(given);
      v["dseq_any_order"] = verdict(some_order);
      v["pretty"] = verdict(pretty);
      ok = !(given || some_order) || pretty;
      vacuous = !given && !some_order;
      break;
    }
    case Theorem::DepthEqualities: {
      const MonomialIdeal zero = MonomialIdeal::zero(ideal.nvars());
      const MonomialSequence seq(sequence);
      const bool generated = MonomialIdeal(ideal.nvars(), sequence) == ideal;
      if (!generated || !(is_filter_regular_sequence(zero, seq) || is_d_sequence_on(zero, seq))) {
        vacuous = true;
        break;
      }
      const std::size_t d = depth(ideal);
      const std::size_t sd = sdepth(ideal).value;
      const std::size_t md = min_dim_over_ass(ideal);
      v["depth"] = std::to_string(d);
      v["sdepth"] = std::to_string(sd);
      v["min_dim_ass"] = std::to_string(md);
      ok = d == sd && d == md;
      break;
    }
    case Theorem::OracleAgreement: {
      for (auto mode : kModes) {
        const auto decided = decide(ideal, mode);
        const auto filtration = find_filtration(ideal, mode);
        const std::string name(to_string(mode));
        v[name] = verdict(decided.holds);
        v[name + "_oracle"] = verdict(filtration.has_value());
        bool certified = true;
        if (decided.certificate) certified = check_ordering(*decided.certificate, mode);
        if (filtration) certified = certified && validate_filtration(*filtration, ideal, mode).ok;
        if (!certified) v[name + "_certificate"] = "false";
        ok = ok && decided.holds == filtration.has_value() && certified;
      }
      break;
    }
    case Theorem::RegularSequenceClean:
    case Theorem::FilterRegularSequence: {
      const bool regular_case = theorem == Theorem::RegularSequenceClean;
      const MonomialIdeal zero = MonomialIdeal::zero(ideal.nvars());
      const MonomialSequence seq(sequence);
      const bool hypothesis = MonomialIdeal(ideal.nvars(), sequence) == ideal &&
                              (regular_case ? is_regular_sequence(zero, seq) : is_filter_regular_sequence(zero, seq));
      if (!hypothesis) {
        vacuous = true;
        break;
      }
      const auto mode = regular_case ? CleannessMode::Clean : CleannessMode::PrettyClean;
      const bool holds = decide(ideal, mode).holds;
      v[std::string(to_string(mode))] = verdict(holds);
      ok = holds;
      break;
    }
  }
  out.status = !ok ? TrialStatus::Fail : vacuous ? TrialStatus::Vacuous : TrialStatus::Pass;
  return out;
}

TrialOutcome run_trial(Theorem theorem, const CorpusSpec& spec, std::size_t trial, const HarnessOptions& options) {
  auto instance = draw_instance(theorem, spec, trial, options);
  if (!instance) return {TrialStatus::Skip, {}};
  TrialOutcome out = evaluate_instance(theorem, instance->ideal, instance->sequence);
  out.record.trial = trial;
  return out;
}

namespace {

template <class Fn>
std::vector<TrialOutcome> run_parallel(std::size_t begin, std::size_t end, unsigned threads, Fn&& fn) {
  std::vector<TrialOutcome> results(end - begin);
  std::atomic<std::size_t> next{begin};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= end) return;
      try {
        results[t - begin] = fn(t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = end;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace

VerificationReport verify(Theorem theorem, const CorpusSpec& spec, const HarnessOptions& options) {
  validate(spec);
  const auto started = std::chrono::steady_clock::now();
  const unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());

  VerificationReport report;
  report.theorem = std::string(to_string(theorem));
  report.spec = spec;
  report.exhaustive = options.exhaustive && theorem == Theorem::OracleAgreement;

  std::vector<TrialOutcome> outcomes;
  if (report.exhaustive) {
    const auto ideals = exhaustive_ideals(spec.nvars, spec.max_deg);
    outcomes = run_parallel(0, ideals.size(), threads, [&](std::size_t t) {
      TrialOutcome o = evaluate_instance(theorem, ideals[t], {});
      o.record.trial = t;
      return o;
    });
  } else if (options.target_effective == 0) {
    outcomes = run_parallel(0, spec.trials, threads, [&](std::size_t t) { return run_trial(theorem, spec, t, options); });
  } else {
    const std::size_t batch = std::max<std::size_t>(options.target_effective, 16);
    const std::size_t limit = 50 * options.target_effective;
    std::size_t effective = 0;
    for (std::size_t begin = 0; begin < limit && effective < options.target_effective; begin += batch) {
      auto chunk = run_parallel(begin, begin + batch, threads,
                                [&](std::size_t t) { return run_trial(theorem, spec, t, options); });
      for (auto& o : chunk) {
        if (effective >= options.target_effective) break;
        if (o.status == TrialStatus::Pass || o.status == TrialStatus::Fail) ++effective;
        outcomes.push_back(std::move(o));
      }
    }
  }

  for (auto& o : outcomes) {
    ++report.trials;
    switch (o.status) {
      case TrialStatus::Pass: ++report.passes; break;
      case TrialStatus::Vacuous: ++report.passes; ++report.vacuous; break;
      case TrialStatus::Skip: ++report.skips; break;
      case TrialStatus::Fail:
        ++report.failures;
        report.counterexamples.push_back(std::move(o.record));
        break;
    }
  }
  report.spec.trials = report.trials;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace monoclean
