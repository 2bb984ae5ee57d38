#include "monoclean/sequences.hpp"

#include <algorithm>
#include <functional>

#include "monoclean/decomposition.hpp"
#include "monoclean/errors.hpp"
#include "monoclean/limits.hpp"

namespace monoclean {

MonomialSequence::MonomialSequence(std::vector<Monomial> items) : items_(std::move(items)) {
  if (items_.empty()) throw std::invalid_argument("monomial sequence must be non-empty");
  for (const auto& u : items_) {
    if (u.is_one()) throw std::invalid_argument("monomial sequence items must be non-units");
    require_same_ring(u.nvars(), items_.front().nvars());
  }
}

namespace {

void require_non_unit(const Monomial& u) {
  if (u.is_one()) throw std::invalid_argument("the unit monomial is not allowed here");
}

void require_proper(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) throw PreconditionError("operation requires a proper ideal");
}

MonomialIdeal add(const MonomialIdeal& ideal, const Monomial& u) {
  return sum(ideal, std::span<const Monomial>(&u, 1));
}

}  // namespace

bool is_regular_element(const MonomialIdeal& ideal, const Monomial& u) {
  require_proper(ideal);
  require_non_unit(u);
  const auto ass = associated_primes(ideal);
  return std::none_of(ass.begin(), ass.end(), [&](const MonomialPrime& p) { return p.contains(u); });
}

bool is_regular_sequence(const MonomialIdeal& ideal, const MonomialSequence& seq) {
  MonomialIdeal current = ideal;
  for (const auto& u : seq) {
    if (!current.is_proper() || !is_regular_element(current, u)) return false;
    current = add(current, u);
  }
  return current.is_proper();
}

bool is_filter_regular_element(const MonomialIdeal& ideal, const Monomial& u) {
  require_proper(ideal);
  require_non_unit(u);
  const auto ass = associated_primes(ideal);
  return std::none_of(ass.begin(), ass.end(),
                      [&](const MonomialPrime& p) { return !p.is_maximal() && p.contains(u); });
}

bool is_filter_regular_sequence(const MonomialIdeal& ideal, const MonomialSequence& seq) {
  MonomialIdeal current = ideal;
  for (const auto& u : seq) {
    if (!current.is_proper() || !is_filter_regular_element(current, u)) return false;
    current = add(current, u);
  }
  return true;
}

bool filter_regular_iff_regular_on_saturation(const MonomialIdeal& ideal, const Monomial& u) {
  const MonomialIdeal sat = saturate(ideal);
  const bool filter_regular = is_filter_regular_element(ideal, u);
  // S/I^sat = 0 when I is m-primary; every element is then regular on the zero module.
  const bool regular_mod_h0 = sat.is_unit() ? true : is_regular_element(sat, u);
  return filter_regular == regular_mod_h0;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::size_t cap) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(nvars, 0);
  std::function<void(std::size_t, std::size_t, std::vector<Monomial>&)> fill =
      [&](std::size_t i, std::size_t left, std::vector<Monomial>& sink) {
        if (i + 1 == nvars) {
          e[i] = static_cast<Exponent>(left);
          sink.emplace_back(e);
          return;
        }
        for (std::size_t a = left + 1; a-- > 0;) {
          e[i] = static_cast<Exponent>(a);
          fill(i + 1, left - a, sink);
        }
      };
  for (std::size_t d = 1; d <= cap; ++d) {
    std::vector<Monomial> level;
    fill(0, d, level);
    std::sort(level.begin(), level.end(), CanonicalOrder{});
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Monomial> regular_candidates(const MonomialIdeal& ideal, std::size_t degree_cap) {
  std::vector<Monomial> out;
  for (auto& u : monomials_up_to_degree(ideal.nvars(), degree_cap)) {
    if (is_regular_element(ideal, u)) out.push_back(std::move(u));
  }
  return out;
}

std::vector<Monomial> filter_regular_candidates(const MonomialIdeal& ideal, std::size_t degree_cap) {
  std::vector<Monomial> out;
  for (auto& u : monomials_up_to_degree(ideal.nvars(), degree_cap)) {
    if (is_filter_regular_element(ideal, u)) out.push_back(std::move(u));
  }
  return out;
}

std::optional<MonomialSequence> find_filter_regular_sequence(const MonomialIdeal& ideal,
                                                             std::size_t length,
                                                             std::size_t degree_cap) {
  if (length == 0) throw std::invalid_argument("sequence length must be positive");
  require_proper(ideal);
  const auto pool = monomials_up_to_degree(ideal.nvars(), degree_cap);
  std::vector<Monomial> picked;
  std::function<bool(const MonomialIdeal&)> dfs = [&](const MonomialIdeal& current) {
    if (picked.size() == length) return true;
    if (!current.is_proper()) return false;
    for (const auto& u : pool) {
      if (!is_filter_regular_element(current, u)) continue;
      picked.push_back(u);
      if (dfs(add(current, u))) return true;
      picked.pop_back();
    }
    return false;
  };
  if (!dfs(ideal)) return std::nullopt;
  return MonomialSequence(std::move(picked));
}

namespace {

bool pairwise_non_dividing(const std::vector<Monomial>& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (i != j && divides(items[i], items[j])) return false;
    }
  }
  return true;
}

// Colon equalities for position i+1 = `next`, against every later element.
bool d_step_holds(const MonomialIdeal& prefix, const Monomial& next, std::span<const Monomial> later) {
  for (const auto& w : later) {
    if (colon(prefix, next * w) != colon(prefix, w)) return false;
  }
  return true;
}

}  // namespace

bool is_d_sequence_on(const MonomialIdeal& ideal, const MonomialSequence& seq) {
  require_proper(ideal);
  const auto& us = seq.items();
  require_same_ring(ideal.nvars(), us.front().nvars());
  if (!pairwise_non_dividing(us)) return false;
  MonomialIdeal prefix = ideal;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (!d_step_holds(prefix, us[i], std::span<const Monomial>(us).subspan(i))) return false;
    prefix = add(prefix, us[i]);
  }
  return true;
}

std::optional<MonomialSequence> d_sequence_order(const MonomialIdeal& ideal, const MonomialSequence& seq) {
  require_proper(ideal);
  std::vector<Monomial> items = seq.items();
  require_same_ring(ideal.nvars(), items.front().nvars());
  if (!pairwise_non_dividing(items)) return std::nullopt;
  std::sort(items.begin(), items.end());
  std::vector<Monomial> order;
  std::vector<bool> used(items.size(), false);
  std::function<bool(const MonomialIdeal&)> dfs = [&](const MonomialIdeal& prefix) {
    if (order.size() == items.size()) return true;
    std::vector<Monomial> remaining;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (!used[k]) remaining.push_back(items[k]);
    }
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (used[k]) continue;
      if (!d_step_holds(prefix, items[k], remaining)) continue;
      used[k] = true;
      order.push_back(items[k]);
      if (dfs(add(prefix, items[k]))) return true;
      order.pop_back();
      used[k] = false;
    }
    return false;
  };
  if (!dfs(ideal)) return std::nullopt;
  return MonomialSequence(std::move(order));
}

bool gcd_condition(const MonomialSequence& seq) {
  const auto& us = seq.items();
  if (!pairwise_non_dividing(us)) return false;
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      const Monomial g = gcd(us[i], us[j]);
      for (std::size_t k = j + 1; k < us.size(); ++k) {
        if (!divides(g, us[k])) return false;
      }
    }
  }
  return true;
}

std::optional<MonomialSequence> gcd_condition_order(const MonomialSequence& seq) {
  std::vector<Monomial> items = seq.items();
  if (!pairwise_non_dividing(items)) return std::nullopt;
  std::sort(items.begin(), items.end());
  std::vector<Monomial> order;
  std::vector<bool> used(items.size(), false);
  std::function<bool()> dfs = [&]() {
    if (order.size() == items.size()) return true;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (used[k]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < order.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < order.size() && ok; ++j) ok = divides(gcd(order[i], order[j]), items[k]);
      }
      if (!ok) continue;
      used[k] = true;
      order.push_back(items[k]);
      if (dfs()) return true;
      order.pop_back();
      used[k] = false;
    }
    return false;
  };
  if (!dfs()) return std::nullopt;
  return MonomialSequence(std::move(order));
}

bool is_forest_type(const MonomialIdeal& ideal) {
  require_proper(ideal);
  if (ideal.is_zero()) throw PreconditionError("forest type is defined for nonzero ideals");
  const auto& g = ideal.gens();
  const std::size_t m = g.size();
  if (m > limits::kMaxGenerators) {
    throw ResourceError("forest-type scan is capped at " + std::to_string(limits::kMaxGenerators) +
                        " generators");
  }
  // branch_mask[t][j]: the i with gcd(u_t, u_i) | gcd(u_t, u_j).
  std::vector<std::vector<std::uint32_t>> branch_mask(m, std::vector<std::uint32_t>(m, 0));
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t j = 0; j < m; ++j) {
      const Monomial gj = gcd(g[t], g[j]);
      for (std::size_t i = 0; i < m; ++i) {
        if (divides(gcd(g[t], g[i]), gj)) branch_mask[t][j] |= std::uint32_t{1} << i;
      }
    }
  }
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << m); ++subset) {
    if ((subset & (subset - 1)) == 0) continue;  // singletons are leaves
    bool has_leaf = false;
    for (std::size_t t = 0; t < m && !has_leaf; ++t) {
      if (!(subset >> t & 1)) continue;
      const std::uint32_t others = subset & ~(std::uint32_t{1} << t);
      for (std::size_t j = 0; j < m && !has_leaf; ++j) {
        if ((others >> j & 1) && (others & ~branch_mask[t][j]) == 0) has_leaf = true;
      }
    }
    if (!has_leaf) return false;
  }
  return true;
}

}  // namespace monoclean
