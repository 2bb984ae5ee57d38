#include "monoclean/stanley.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "monoclean/box.hpp"
#include "monoclean/errors.hpp"
#include "monoclean/homology.hpp"
#include "monoclean/limits.hpp"

namespace monoclean {

std::vector<std::size_t> StanleyPartition::free_vars(const StanleyInterval& interval) const {
  std::vector<std::size_t> z;
  for (std::size_t j = 0; j < cap.nvars(); ++j) {
    if (interval.top[j] == cap[j]) z.push_back(j);
  }
  return z;
}

std::size_t StanleyPartition::sdepth() const {
  std::size_t best = cap.nvars();
  for (const auto& iv : intervals) best = std::min(best, free_vars(iv).size());
  return best;
}

std::uint64_t StanleyPartition::max_generator_degree() const {
  std::uint64_t best = 0;
  for (const auto& iv : intervals) best = std::max(best, iv.bottom.degree());
  return best;
}

namespace {

class CharacteristicPoset {
 public:
  explicit CharacteristicPoset(const MonomialIdeal& ideal)
      : cap_(ideal.lcm_of_generators()),
        box_(cap_, std::max(limits::kMaxMultidegrees, 4 * limits::max_poset_points())) {
    if (!ideal.is_proper()) throw PreconditionError("Stanley decompositions need a proper ideal");
    standard_.resize(box_.size());
    std::size_t count = 0;
    for (std::size_t idx = 0; idx < box_.size(); ++idx) {
      standard_[idx] = !contains(ideal, box_.point(idx));
      count += standard_[idx] ? 1 : 0;
    }
    if (count > limits::max_poset_points()) {
      throw ResourceError("characteristic poset has " + std::to_string(count) + " points, cap is " +
                          std::to_string(limits::max_poset_points()));
    }
    std::vector<Monomial> points;
    for (std::size_t idx = 0; idx < box_.size(); ++idx) points.push_back(box_.point(idx));
    lex_.resize(box_.size());
    std::iota(lex_.begin(), lex_.end(), std::size_t{0});
    std::sort(lex_.begin(), lex_.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    for (std::size_t idx : lex_) {
      if (standard_[idx]) linear_.push_back(idx);
    }
    std::stable_sort(linear_.begin(), linear_.end(),
                     [&](std::size_t a, std::size_t b) { return box_.degree(a) < box_.degree(b); });
  }

  const Monomial& cap() const { return cap_; }
  const ExponentBox& box() const { return box_; }
  bool standard(std::size_t idx) const { return standard_[idx]; }
  /// Poset points in a linear extension (degree, then lex).
  const std::vector<std::size_t>& linear() const { return linear_; }
  /// All box indices in lex order.
  const std::vector<std::size_t>& lex() const { return lex_; }

  std::size_t rho(std::size_t idx) const {
    std::size_t r = 0;
    for (std::size_t j = 0; j < box_.nvars(); ++j) r += box_.coord(idx, j) == cap_[j] ? 1 : 0;
    return r;
  }

  /// Upper bound on any achievable sdepth: a maximal poset point must be the
  /// top of its own interval.
  std::size_t maximal_point_bound() const {
    std::size_t bound = box_.nvars();
    for (std::size_t idx : linear_) {
      bool maximal = true;
      for (std::size_t j = 0; j < box_.nvars() && maximal; ++j) {
        std::size_t up = box_.up(idx, j);
        maximal = up == ExponentBox::npos || !standard_[up];
      }
      if (maximal) bound = std::min(bound, rho(idx));
    }
    return bound;
  }

 private:
  Monomial cap_;
  ExponentBox box_;
  std::vector<bool> standard_;
  std::vector<std::size_t> lex_;
  std::vector<std::size_t> linear_;
};

using IntervalFilter = std::function<bool(std::size_t bottom, std::size_t top)>;

// Exact cover of the poset by intervals. The first uncovered point in the
// linear extension has every smaller point covered, so it is the bottom of
// its interval; only the top is branched on.
class IntervalCover {
 public:
  IntervalCover(const CharacteristicPoset& poset, IntervalFilter filter, bool widest_first)
      : poset_(poset), filter_(std::move(filter)), widest_first_(widest_first),
        covered_(poset.box().size(), false) {}

  std::optional<StanleyPartition> run() {
    if (!dfs(0)) return std::nullopt;
    StanleyPartition out{poset_.cap(), {}};
    for (const auto& [a, b] : chosen_) out.intervals.push_back({poset_.box().point(a), poset_.box().point(b)});
    return out;
  }

 private:
  bool dfs(std::size_t pos) {
    const auto& linear = poset_.linear();
    while (pos < linear.size() && covered_[linear[pos]]) ++pos;
    if (pos == linear.size()) return true;
    if (dead_.count(covered_)) return false;

    const std::size_t bottom = linear[pos];
    const auto& box = poset_.box();
    std::vector<std::size_t> tops;
    for (std::size_t b : poset_.lex()) {
      if (poset_.standard(b) && !covered_[b] && box.leq(bottom, b) && filter_(bottom, b)) tops.push_back(b);
    }
    if (widest_first_) std::reverse(tops.begin(), tops.end());

    for (std::size_t top : tops) {
      const auto cells = box.interval(bottom, top);
      if (std::any_of(cells.begin(), cells.end(), [&](std::size_t c) { return covered_[c]; })) continue;
      for (std::size_t c : cells) covered_[c] = true;
      chosen_.emplace_back(bottom, top);
      if (dfs(pos + 1)) return true;
      chosen_.pop_back();
      for (std::size_t c : cells) covered_[c] = false;
    }
    dead_.insert(covered_);
    return false;
  }

  const CharacteristicPoset& poset_;
  IntervalFilter filter_;
  bool widest_first_;
  std::vector<bool> covered_;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
  std::unordered_set<std::vector<bool>> dead_;
};

std::optional<StanleyPartition> sdepth_partition(const CharacteristicPoset& poset, std::size_t target) {
  if (target == 0) {
    // Singletons always work and are the lex-first list.
    StanleyPartition out{poset.cap(), {}};
    for (std::size_t idx : poset.linear()) {
      Monomial p = poset.box().point(idx);
      out.intervals.push_back({p, p});
    }
    return out;
  }
  IntervalCover cover(poset, [&](std::size_t, std::size_t top) { return poset.rho(top) >= target; }, false);
  return cover.run();
}

}  // namespace

bool is_poset_partition(const MonomialIdeal& ideal, const StanleyPartition& partition) {
  const CharacteristicPoset poset(ideal);
  if (partition.cap != poset.cap()) return false;
  const auto& box = poset.box();
  std::vector<int> hits(box.size(), 0);
  for (const auto& iv : partition.intervals) {
    if (iv.bottom.nvars() != ideal.nvars() || iv.top.nvars() != ideal.nvars()) return false;
    if (!divides(iv.bottom, iv.top) || !divides(iv.top, poset.cap())) return false;
    if (contains(ideal, iv.top)) return false;
    for (std::size_t c : box.interval(box.index(iv.bottom.exponents()), box.index(iv.top.exponents()))) ++hits[c];
  }
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    if (hits[idx] != (poset.standard(idx) ? 1 : 0)) return false;
  }
  return true;
}

std::optional<StanleyPartition> partition_with_sdepth(const MonomialIdeal& ideal, std::size_t target) {
  const CharacteristicPoset poset(ideal);
  if (target > poset.maximal_point_bound()) return std::nullopt;
  return sdepth_partition(poset, target);
}

SdepthResult sdepth(const MonomialIdeal& ideal) {
  const CharacteristicPoset poset(ideal);
  for (std::size_t d = poset.maximal_point_bound() + 1; d-- > 0;) {
    if (auto p = sdepth_partition(poset, d)) return {d, std::move(*p)};
  }
  throw std::logic_error("singleton partition always exists");
}

std::optional<StanleyPartition> partition_with_degree_bound(const MonomialIdeal& ideal, std::uint64_t bound) {
  const CharacteristicPoset poset(ideal);
  IntervalCover cover(
      poset, [&](std::size_t bottom, std::size_t) { return poset.box().degree(bottom) <= bound; }, true);
  return cover.run();
}

std::uint64_t min_max_generator_degree(const MonomialIdeal& ideal) {
  for (std::uint64_t r = 0;; ++r) {
    if (partition_with_degree_bound(ideal, r)) return r;
  }
}

bool stanley_conjecture_check(const MonomialIdeal& ideal, unsigned characteristic) {
  return partition_with_sdepth(ideal, depth(ideal, characteristic)).has_value();
}

bool h_regularity_check(const MonomialIdeal& ideal, unsigned characteristic) {
  const std::int64_t reg = regularity(ideal, characteristic);
  return partition_with_degree_bound(ideal, static_cast<std::uint64_t>(std::max<std::int64_t>(reg, 0)))
      .has_value();
}

}  // namespace monoclean
