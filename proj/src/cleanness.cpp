#include "monoclean/cleanness.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "monoclean/box.hpp"
#include "monoclean/errors.hpp"
#include "monoclean/limits.hpp"

namespace monoclean {

std::string_view to_string(CleannessMode mode) {
  switch (mode) {
    case CleannessMode::Clean: return "clean";
    case CleannessMode::PrettyClean: return "pretty";
    case CleannessMode::AlmostClean: return "almost";
  }
  return "?";
}

std::optional<CleannessMode> parse_mode(std::string_view text) {
  if (text == "clean") return CleannessMode::Clean;
  if (text == "pretty" || text == "pretty-clean") return CleannessMode::PrettyClean;
  if (text == "almost" || text == "almost-clean") return CleannessMode::AlmostClean;
  return std::nullopt;
}

std::vector<MonomialPrime> OrderedDecomposition::radicals() const {
  std::vector<MonomialPrime> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.radical());
  return out;
}

std::vector<std::vector<Monomial>> t_sets(const OrderedDecomposition& decomposition) {
  std::vector<std::vector<Monomial>> out;
  if (decomposition.components.empty()) return out;
  const std::size_t n = decomposition.components.front().nvars();
  MonomialIdeal prefix = MonomialIdeal::unit(n);
  for (const auto& q : decomposition.components) {
    std::vector<Monomial> t;
    for (const auto& g : prefix.gens()) {
      if (!q.contains(g)) t.push_back(g);
    }
    out.push_back(std::move(t));
    prefix = intersect(prefix, q.ideal());
  }
  return out;
}

namespace {

std::set<MonomialPrime> as_set(const std::vector<MonomialPrime>& v) { return {v.begin(), v.end()}; }

bool heights_sorted(const std::vector<MonomialPrime>& radicals) {
  return std::is_sorted(radicals.begin(), radicals.end(),
                        [](const MonomialPrime& a, const MonomialPrime& b) { return a.height() < b.height(); });
}

}  // namespace

bool check_ordering(const OrderedDecomposition& decomposition, CleannessMode mode) {
  if (decomposition.components.empty()) return true;
  for (const auto& t : t_sets(decomposition)) {
    if (t.size() != 1) return false;
  }
  const auto radicals = decomposition.radicals();
  const MonomialIdeal ideal =
      Decomposition{decomposition.components}.intersection(decomposition.components.front().nvars());
  switch (mode) {
    case CleannessMode::Clean:
      return heights_sorted(radicals) && as_set(radicals) == as_set(minimal_primes(ideal));
    case CleannessMode::PrettyClean:
      return heights_sorted(radicals);
    case CleannessMode::AlmostClean:
      return as_set(radicals) == as_set(associated_primes(ideal));
  }
  return false;
}

// --- ordering search -------------------------------------------------------

namespace {

class OrderingSearch {
 public:
  OrderingSearch(std::vector<IrreducibleComponent> comps, CleannessMode mode)
      : comps_(std::move(comps)), mode_(mode) {}

  std::optional<std::vector<std::size_t>> run() {
    const std::size_t n = comps_.front().nvars();
    if (dfs(0, MonomialIdeal::unit(n), 0)) return order_;
    return std::nullopt;
  }

 private:
  bool height_constrained() const { return mode_ != CleannessMode::AlmostClean; }

  bool dfs(std::uint64_t used, const MonomialIdeal& prefix, std::size_t last_height) {
    if (order_.size() == comps_.size()) return true;
    const auto key = std::make_pair(used, height_constrained() ? last_height : 0);
    if (dead_.count(key)) return false;
    for (std::size_t k = 0; k < comps_.size(); ++k) {
      if (used >> k & 1) continue;
      const auto& q = comps_[k];
      if (height_constrained() && q.height() < last_height) continue;
      std::size_t outside = 0;
      for (const auto& g : prefix.gens()) outside += q.contains(g) ? 0 : 1;
      if (outside != 1) continue;
      order_.push_back(k);
      if (dfs(used | std::uint64_t{1} << k, intersect(prefix, q.ideal()), q.height())) return true;
      order_.pop_back();
    }
    dead_.insert(key);
    return false;
  }

  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::size_t>& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.first * 131 + k.second);
    }
  };

  std::vector<IrreducibleComponent> comps_;
  CleannessMode mode_;
  std::vector<std::size_t> order_;
  std::unordered_set<std::pair<std::uint64_t, std::size_t>, KeyHash> dead_;
};


// Components may be redundant or differ from the canonical ones, so the
// fallback walks over all irreducible Q with associated radical and exponents
// inside the bound. The state is the running intersection J.
//
// With heights nondecreasing, the intersection of the components of height
// <= h is forced: it is U_h, the intersection of the canonical components of
// height <= h (J_h/I has dimension < n - h, and S/J_h has no associated prime
// of smaller dimension). So each height level is searched on its own, from
// U_{h-1} to U_h, with components of that height containing U_h.
class ComponentSearch {
 public:
  ComponentSearch(const MonomialIdeal& ideal, CleannessMode mode, const Monomial& bound)
      : ideal_(ideal), mode_(mode), bound_(bound) {
    const auto ass = associated_primes(ideal);
    const auto min = minimal_primes(ideal);
    for (const auto& p : ass) {
      if (mode == CleannessMode::Clean && std::find(min.begin(), min.end(), p) == min.end()) continue;
      primes_.push_back(p);
    }
  }

  std::optional<std::vector<IrreducibleComponent>> run() {
    const std::size_t n = ideal_.nvars();
    if (mode_ == CleannessMode::AlmostClean) {
      if (!stage(MonomialIdeal::unit(n), ideal_, primes_)) return std::nullopt;
      return path_;
    }
    const auto comps = irreducible_decomposition(ideal_).components;
    std::set<std::size_t> heights;
    for (const auto& p : primes_) heights.insert(p.height());
    MonomialIdeal from = MonomialIdeal::unit(n);
    for (std::size_t h : heights) {
      MonomialIdeal to = MonomialIdeal::unit(n);
      for (const auto& c : comps) {
        if (c.height() <= h) to = intersect(to, c.ideal());
      }
      std::vector<MonomialPrime> level;
      for (const auto& p : primes_) {
        if (p.height() == h) level.push_back(p);
      }
      if (!stage(from, to, level)) return std::nullopt;
      from = std::move(to);
    }
    if (from != ideal_) return std::nullopt;
    return path_;
  }

 private:
  // Irreducible ideals with radical p and exponents in [1, bound] containing `floor`.
  void add_candidates(const MonomialPrime& p, const MonomialIdeal& floor) {
    const auto vars = p.vars();
    std::vector<Exponent> e(ideal_.nvars(), 0);
    for (auto v : vars) e[v] = 1;
    while (true) {
      IrreducibleComponent q{Monomial(e)};
      if (std::all_of(floor.gens().begin(), floor.gens().end(), [&](const Monomial& g) { return q.contains(g); }))
        cands_.push_back(std::move(q));
      std::size_t pos = 0;
      for (; pos < vars.size(); ++pos) {
        const auto v = vars[pos];
        if (e[v] < std::max<Exponent>(bound_[v], 1)) {
          ++e[v];
          break;
        }
        e[v] = 1;
      }
      if (pos == vars.size()) break;
    }
  }

  bool stage(const MonomialIdeal& from, const MonomialIdeal& to, const std::vector<MonomialPrime>& primes) {
    cands_.clear();
    dead_.clear();
    target_ = &to;
    for (const auto& p : primes) add_candidates(p, to);
    std::sort(cands_.begin(), cands_.end());
    return dfs(from);
  }

  bool dfs(const MonomialIdeal& j) {
    if (j == *target_) return true;
    if (dead_.count(j)) return false;
    for (const auto& q : cands_) {
      std::size_t outside = 0;
      for (const auto& g : j.gens()) {
        outside += q.contains(g) ? 0 : 1;
        if (outside > 1) break;
      }
      if (outside != 1) continue;
      path_.push_back(q);
      if (dfs(intersect(j, q.ideal()))) return true;
      path_.pop_back();
    }
    dead_.insert(j);
    return false;
  }

  const MonomialIdeal& ideal_;
  CleannessMode mode_;
  Monomial bound_;
  std::vector<MonomialPrime> primes_;
  const MonomialIdeal* target_ = nullptr;
  std::vector<IrreducibleComponent> cands_;
  std::vector<IrreducibleComponent> path_;
  std::unordered_set<MonomialIdeal> dead_;
};

}  // namespace

CleannessVerdict decide(const MonomialIdeal& ideal, CleannessMode mode, std::optional<Monomial> bound) {
  if (!ideal.is_proper()) throw PreconditionError("cleanness is defined for proper ideals");
  // S itself: trivially clean.
  if (ideal.is_zero()) return {true, OrderedDecomposition{}};

  const Monomial cap = bound.value_or(ideal.lcm_of_generators());
  if (cap.nvars() != ideal.nvars()) throw RingMismatch("bound lives in a different ring");
  if (!divides(ideal.lcm_of_generators(), cap)) throw std::invalid_argument("bound must dominate lcm(G(I))");

  auto comps = irreducible_decomposition(ideal).components;
  if (comps.size() > limits::kMaxMaskWidth) throw ResourceError("too many irreducible components");

  if (mode == CleannessMode::Clean) {
    std::vector<MonomialPrime> ass;
    for (const auto& c : comps) ass.push_back(c.radical());
    if (minimal_elements(ass).size() != as_set(ass).size()) return {false, std::nullopt};
  }

  OrderingSearch search(comps, mode);
  if (auto order = search.run()) {
    OrderedDecomposition cert;
    for (std::size_t k : *order) cert.components.push_back(comps[k]);
    return {true, std::move(cert)};
  }
  ComponentSearch wide(ideal, mode, cap);
  auto path = wide.run();
  if (!path) return {false, std::nullopt};
  return {true, OrderedDecomposition{std::move(*path)}};
}

// --- filtration search -----------------------------------------------------

std::vector<MonomialIdeal> PrimeFiltration::chain(const MonomialIdeal& start) const {
  std::vector<MonomialIdeal> out{start};
  for (const auto& s : steps) out.push_back(sum(out.back(), std::span<const Monomial>(&s.v, 1)));
  return out;
}

namespace {

using PrimeMask = std::uint64_t;

bool strictly_inside(PrimeMask a, PrimeMask b) { return a != b && (a & ~b) == 0; }

MonomialPrime prime_from_mask(std::size_t n, PrimeMask mask) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1) vars.push_back(i);
  }
  return MonomialPrime(n, std::move(vars));
}

// Ideals containing I whose generators lie in the box are represented by
// their standard points in the box. Membership beyond the box is decided by
// truncating exponents to the cap.
class FiltrationSearch {
 public:
  FiltrationSearch(const MonomialIdeal& ideal, const Monomial& cap, CleannessMode mode)
      : n_(ideal.nvars()), box_(cap, limits::kMaxFiltrationBox), mode_(mode) {
    order_.resize(box_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<Monomial> points;
    points.reserve(box_.size());
    for (std::size_t idx = 0; idx < box_.size(); ++idx) points.push_back(box_.point(idx));
    std::sort(order_.begin(), order_.end(),
              [&](std::size_t a, std::size_t b) { return CanonicalOrder{}(points[a], points[b]); });
    start_.resize(box_.size());
    for (std::size_t idx = 0; idx < box_.size(); ++idx) start_[idx] = !contains(ideal, points[idx]);

    // Ass(S/I) from colon witnesses in the box; Min are its minimal elements.
    std::set<PrimeMask> ass;
    for (const auto& c : candidates(start_)) ass.insert(c.prime);
    for (PrimeMask p : ass) {
      ass_.push_back(p);
      bool minimal = std::none_of(ass.begin(), ass.end(), [&](PrimeMask q) { return strictly_inside(q, p); });
      if (minimal) min_.push_back(p);
    }
  }

  std::optional<PrimeFiltration> run() {
    std::vector<bool> standard = start_;
    std::vector<PrimeMask> used;
    if (!dfs(standard, used)) return std::nullopt;
    PrimeFiltration f;
    for (const auto& [idx, mask] : path_) f.steps.push_back({box_.point(idx), prime_from_mask(n_, mask)});
    return f;
  }

 private:
  struct Candidate {
    std::size_t idx;
    PrimeMask prime;
  };

  struct Key {
    std::vector<bool> standard;
    std::vector<PrimeMask> used;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = std::hash<std::vector<bool>>{}(k.standard);
      for (PrimeMask p : k.used) h = h * 1000003u ^ std::hash<PrimeMask>{}(p);
      return h;
    }
  };

  // Standard points v whose colon J : v is the monomial prime on the
  // variables x_i with v * x_i in J.
  std::vector<Candidate> candidates(const std::vector<bool>& standard) const {
    std::vector<Candidate> out;
    for (std::size_t idx : order_) {
      if (!standard[idx]) continue;
      PrimeMask p = 0;
      std::size_t top = idx;
      for (std::size_t i = 0; i < n_; ++i) {
        std::size_t up = box_.up(idx, i);
        if (up != ExponentBox::npos && !standard[up]) {
          p |= PrimeMask{1} << i;
        } else {
          top += (box_.cap(i) - box_.coord(idx, i)) * box_.stride(i);
        }
      }
      if (standard[top]) out.push_back({idx, p});
    }
    return out;
  }

  bool allowed(PrimeMask p, const std::vector<PrimeMask>& used) const {
    switch (mode_) {
      case CleannessMode::Clean:
        return std::find(min_.begin(), min_.end(), p) != min_.end();
      case CleannessMode::AlmostClean:
        return std::find(ass_.begin(), ass_.end(), p) != ass_.end();
      case CleannessMode::PrettyClean:
        return std::none_of(used.begin(), used.end(), [&](PrimeMask u) { return strictly_inside(u, p); });
    }
    return false;
  }

  bool dfs(const std::vector<bool>& standard, const std::vector<PrimeMask>& used) {
    if (std::none_of(standard.begin(), standard.end(), [](bool b) { return b; })) return true;
    const auto cands = candidates(standard);
    // Every prime in Ass(S/J) must occur in any filtration of S/J, so one
    // forbidden candidate prime kills the whole state.
    for (const auto& c : cands) {
      if (!allowed(c.prime, used)) return false;
    }
    Key key{standard, mode_ == CleannessMode::PrettyClean ? used : std::vector<PrimeMask>{}};
    if (dead_.count(key)) return false;

    for (const auto& c : cands) {
      std::vector<bool> next = standard;
      for (std::size_t idx : box_.upset(c.idx)) next[idx] = false;
      std::vector<PrimeMask> next_used = used;
      if (mode_ == CleannessMode::PrettyClean) {
        bool covered = std::any_of(used.begin(), used.end(),
                                   [&](PrimeMask u) { return (u & ~c.prime) == 0; });
        if (!covered) {
          std::erase_if(next_used, [&](PrimeMask u) { return strictly_inside(c.prime, u); });
          next_used.push_back(c.prime);
          std::sort(next_used.begin(), next_used.end());
        }
      }
      path_.emplace_back(c.idx, c.prime);
      if (dfs(next, next_used)) return true;
      path_.pop_back();
    }
    dead_.insert(std::move(key));
    return false;
  }

  std::size_t n_;
  ExponentBox box_;
  CleannessMode mode_;
  std::vector<std::size_t> order_;
  std::vector<bool> start_;
  std::vector<PrimeMask> ass_;
  std::vector<PrimeMask> min_;
  std::vector<std::pair<std::size_t, PrimeMask>> path_;
  std::unordered_set<Key, KeyHash> dead_;
};

}  // namespace

std::optional<PrimeFiltration> find_filtration(const MonomialIdeal& ideal, CleannessMode mode,
                                               std::optional<Monomial> bound) {
  if (!ideal.is_proper()) throw PreconditionError("filtrations are defined for proper ideals");
  if (ideal.nvars() > limits::kMaxMaskWidth) throw ResourceError("too many variables for filtration search");
  const Monomial lcm_cap = ideal.lcm_of_generators();
  Monomial cap = bound.value_or(lcm_cap);
  require_same_ring(cap.nvars(), ideal.nvars());
  if (!divides(lcm_cap, cap)) throw PreconditionError("filtration bound must dominate lcm(G(I))");
  FiltrationSearch search(ideal, cap, mode);
  return search.run();
}

FiltrationCheck validate_filtration(const PrimeFiltration& filtration, const MonomialIdeal& ideal,
                                    CleannessMode mode) {
  const auto fail = [](std::string why) { return FiltrationCheck{false, std::move(why)}; };
  if (!ideal.is_proper()) return fail("ideal is not proper");
  if (filtration.steps.empty()) return fail("empty filtration");

  MonomialIdeal current = ideal;
  std::vector<MonomialPrime> primes;
  for (std::size_t k = 0; k < filtration.steps.size(); ++k) {
    const auto& step = filtration.steps[k];
    const std::string where = "step " + std::to_string(k + 1) + ": ";
    if (step.v.nvars() != ideal.nvars() || step.prime.nvars() != ideal.nvars()) {
      return fail(where + "ring mismatch");
    }
    if (contains(current, step.v)) return fail(where + "chain not strictly increasing");
    if (colon(current, step.v) != MonomialIdeal::from_prime(step.prime)) {
      return fail(where + "colon ideal differs from the recorded prime");
    }
    primes.push_back(step.prime);
    current = sum(current, std::span<const Monomial>(&step.v, 1));
  }
  if (!filtration.steps.back().v.is_one() || !current.is_unit()) {
    return fail("chain does not terminate at S with v_r = 1");
  }

  const std::set<MonomialPrime> support(primes.begin(), primes.end());
  switch (mode) {
    case CleannessMode::Clean:
      if (support != as_set(minimal_primes(ideal))) return fail("support differs from Min(S/I)");
      break;
    case CleannessMode::AlmostClean:
      if (support != as_set(associated_primes(ideal))) return fail("support differs from Ass(S/I)");
      break;
    case CleannessMode::PrettyClean:
      for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
          if (primes[i] != primes[j] && primes[i].subset_of(primes[j])) {
            return fail("p_" + std::to_string(i + 1) + " strictly inside later p_" + std::to_string(j + 1));
          }
        }
      }
      break;
  }
  return {};
}

}  // namespace monoclean
