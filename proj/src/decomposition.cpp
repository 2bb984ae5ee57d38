#include "monoclean/decomposition.hpp"

#include <algorithm>
#include <unordered_map>

#include "monoclean/errors.hpp"

namespace monoclean {

IrreducibleComponent::IrreducibleComponent(Monomial powers) : powers_(std::move(powers)) {
  if (powers_.is_one()) throw std::invalid_argument("irreducible component needs a generator");
}

MonomialPrime IrreducibleComponent::radical() const {
  return MonomialPrime(powers_.nvars(), powers_.support());
}

std::size_t IrreducibleComponent::height() const { return powers_.support().size(); }

MonomialIdeal IrreducibleComponent::ideal() const {
  std::vector<Monomial> gens;
  for (std::size_t i : powers_.support()) gens.push_back(Monomial::variable(nvars(), i, powers_[i]));
  return MonomialIdeal(nvars(), std::move(gens));
}

bool IrreducibleComponent::contains(const Monomial& m) const {
  require_same_ring(nvars(), m.nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (powers_[i] > 0 && m[i] >= powers_[i]) return true;
  }
  return false;
}

bool IrreducibleComponent::subset_of(const IrreducibleComponent& other) const {
  // Each x_i^{a_i} must lie in other: same variable present with exponent <= a_i.
  require_same_ring(nvars(), other.nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (powers_[i] == 0) continue;
    if (other.powers_[i] == 0 || other.powers_[i] > powers_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b) {
  if (auto c = a.radical() <=> b.radical(); c != 0) return c;
  return a.powers_ <=> b.powers_;
}

MonomialIdeal Decomposition::intersection(std::size_t nvars) const {
  MonomialIdeal acc = MonomialIdeal::unit(nvars);
  for (const auto& c : components) acc = intersect(acc, c.ideal());
  return acc;
}

bool Decomposition::is_irredundant(std::size_t nvars) const {
  for (std::size_t k = 0; k < components.size(); ++k) {
    MonomialIdeal others = MonomialIdeal::unit(nvars);
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (j != k) others = intersect(others, components[j].ideal());
    }
    if (is_subset(others, components[k].ideal())) return false;
  }
  return true;
}

namespace {

// Irreducible components are meet-irreducible among monomial ideals, so the
// inclusion-minimal members of any irreducible decomposition form the
// irredundant one.
std::vector<IrreducibleComponent> keep_minimal(std::vector<IrreducibleComponent> comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<IrreducibleComponent> out;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j) {
      redundant = j != k && comps[j].subset_of(comps[k]);
    }
    if (!redundant) out.push_back(comps[k]);
  }
  return out;
}

class Splitter {
 public:
  std::vector<IrreducibleComponent> run(const MonomialIdeal& ideal) {
    if (auto it = memo_.find(ideal); it != memo_.end()) return it->second;
    const std::size_t n = ideal.nvars();

    auto mixed = std::find_if(ideal.gens().begin(), ideal.gens().end(),
                              [](const Monomial& g) { return !g.pure_power_variable(); });
    std::vector<IrreducibleComponent> result;
    if (mixed == ideal.gens().end()) {
      Monomial powers = Monomial::one(n);
      for (const auto& g : ideal.gens()) {
        std::size_t i = *g.pure_power_variable();
        powers = powers.with(i, g[i]);
      }
      result.emplace_back(std::move(powers));
    } else {
      // g = v * w with v = x_i^{a_i} and w coprime to v: I = (I, v) ∩ (I, w).
      const Monomial& g = *mixed;
      std::size_t i = g.support().front();
      Monomial v = Monomial::variable(n, i, g[i]);
      Monomial w = g / v;
      auto left = run(sum(ideal, std::span<const Monomial>(&v, 1)));
      auto right = run(sum(ideal, std::span<const Monomial>(&w, 1)));
      left.insert(left.end(), right.begin(), right.end());
      result = keep_minimal(std::move(left));
    }
    memo_.emplace(ideal, result);
    return result;
  }

 private:
  std::unordered_map<MonomialIdeal, std::vector<IrreducibleComponent>> memo_;
};

void require_proper(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) throw PreconditionError("operation requires a proper ideal");
}

}  // namespace

Decomposition irreducible_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("the zero ideal has no irreducible decomposition");
  if (ideal.is_unit()) throw DomainError("the unit ideal has no irreducible decomposition");
  Splitter splitter;
  return Decomposition{splitter.run(ideal)};
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  require_proper(ideal);
  if (ideal.is_zero()) return {MonomialPrime(ideal.nvars(), {})};
  std::vector<MonomialPrime> primes;
  for (const auto& c : irreducible_decomposition(ideal).components) primes.push_back(c.radical());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<MonomialPrime> minimal_elements(std::vector<MonomialPrime> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<MonomialPrime> out;
  for (const auto& p : primes) {
    bool minimal = std::none_of(primes.begin(), primes.end(),
                                [&](const MonomialPrime& q) { return q != p && q.subset_of(p); });
    if (minimal) out.push_back(p);
  }
  return out;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  return minimal_elements(associated_primes(ideal));
}

bool has_maximal_in_ass(const MonomialIdeal& ideal) {
  require_proper(ideal);
  return saturate(ideal) != ideal;
}

bool quotient_formula_check(const MonomialIdeal& ideal, const Monomial& u) {
  require_proper(ideal);
  require_same_ring(ideal.nvars(), u.nvars());
  if (u.is_one()) throw PreconditionError("the unit monomial is not a regular element");
  const auto ass = associated_primes(ideal);
  for (const auto& p : ass) {
    if (p.contains(u)) throw PreconditionError("monomial is a zero divisor on S/I");
  }

  const auto extend = [&](const std::vector<MonomialPrime>& primes) {
    std::vector<MonomialPrime> out;
    for (const auto& p : primes) {
      for (std::size_t k : u.support()) out.push_back(p.with_var(k));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  const MonomialIdeal extended = sum(ideal, std::span<const Monomial>(&u, 1));
  const bool ass_rule = associated_primes(extended) == extend(ass);
  const bool min_rule = minimal_primes(extended) == extend(minimal_elements(ass));
  bool height_rule = true;
  for (const auto& p : ass) {
    for (std::size_t k : u.support()) height_rule = height_rule && p.with_var(k).height() == p.height() + 1;
  }
  return ass_rule && min_rule && height_rule;
}

}  // namespace monoclean
