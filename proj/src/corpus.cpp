#include "monoclean/corpus.hpp"

#include <algorithm>
#include <functional>

#include "monoclean/box.hpp"
#include "monoclean/errors.hpp"
#include "monoclean/limits.hpp"

namespace monoclean {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) : engine_(splitmix64(seed ^ splitmix64(trial))) {}

std::uint64_t TrialRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

void validate(const CorpusSpec& spec) {
  if (spec.nvars == 0) throw ConfigError("corpus needs at least one variable");
  if (spec.nvars > limits::kMaxMaskWidth) throw ConfigError("too many variables");
  if (spec.max_deg == 0) throw ConfigError("max_deg must be positive");
  if (spec.gen_count == 0) throw ConfigError("gen_count must be positive");
  if (spec.dropout_pct > 100) throw ConfigError("dropout must be a percentage");
  const Exponent side = spec.squarefree ? 1 : spec.max_deg;
  // Distinct non-unit monomials available in the exponent box.
  double available = 1;
  for (std::size_t i = 0; i < spec.nvars; ++i) available *= double(side) + 1;
  if (double(spec.gen_count) > available - 1) {
    throw ConfigError("gen_count exceeds the number of non-unit monomials in the exponent box");
  }
}

std::vector<Monomial> draw_generators(const CorpusSpec& spec, TrialRng& rng) {
  const std::size_t n = spec.nvars;
  std::vector<bool> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = !rng.chance(spec.dropout_pct);
  if (std::none_of(active.begin(), active.end(), [](bool b) { return b; })) active[rng.below(n)] = true;

  const Exponent side = spec.squarefree ? 1 : spec.max_deg;
  std::vector<Monomial> gens;
  while (gens.size() < spec.gen_count) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i]) e[i] = static_cast<Exponent>(rng.below(std::uint64_t{side} + 1));
    }
    Monomial m(std::move(e));
    if (!m.is_one()) gens.push_back(std::move(m));
  }
  return gens;
}

MonomialIdeal draw_ideal(const CorpusSpec& spec, TrialRng& rng) {
  return MonomialIdeal(spec.nvars, draw_generators(spec, rng));
}

std::vector<MonomialIdeal> gen_ideals(const CorpusSpec& spec) {
  validate(spec);
  std::vector<MonomialIdeal> out;
  out.reserve(spec.trials);
  for (std::size_t t = 0; t < spec.trials; ++t) {
    TrialRng rng(spec.seed, t);
    out.push_back(draw_ideal(spec, rng));
  }
  return out;
}

std::vector<MonomialIdeal> exhaustive_ideals(std::size_t nvars, Exponent max_deg) {
  std::vector<Exponent> cap(nvars, max_deg);
  const ExponentBox box(Monomial(cap), limits::kMaxMultidegrees);
  std::vector<Monomial> points;
  for (std::size_t idx = 1; idx < box.size(); ++idx) points.push_back(box.point(idx));
  std::sort(points.begin(), points.end(), CanonicalOrder{});

  std::vector<MonomialIdeal> out;
  std::vector<Monomial> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == points.size()) {
      if (!chosen.empty()) out.emplace_back(nvars, chosen);
      return;
    }
    walk(k + 1);
    const Monomial& p = points[k];
    bool free = std::none_of(chosen.begin(), chosen.end(),
                             [&](const Monomial& c) { return divides(c, p) || divides(p, c); });
    if (free) {
      chosen.push_back(p);
      walk(k + 1);
      chosen.pop_back();
    }
  };
  walk(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monoclean
