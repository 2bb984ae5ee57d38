#include "monoclean/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "monoclean/errors.hpp"

namespace monoclean {

RingContext::RingContext(std::size_t nvars, unsigned characteristic)
    : characteristic_(characteristic) {
  if (nvars == 0) throw std::invalid_argument("ring needs at least one variable");
  names_.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names_.push_back("x" + std::to_string(i + 1));
}

RingContext::RingContext(std::vector<std::string> names, unsigned characteristic)
    : names_(std::move(names)), characteristic_(characteristic) {
  if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("variable names must be distinct");
}

void require_same_ring(std::size_t a, std::size_t b) {
  if (a != b) {
    throw RingMismatch("ring mismatch: " + std::to_string(a) + " vs " + std::to_string(b) +
                       " variables");
  }
}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (Exponent e : exps_) {
    if (e > kMaxExponent) throw std::overflow_error("exponent exceeds 2^31 - 1");
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  std::vector<Exponent> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) s.push_back(i);
  }
  return s;
}

std::optional<std::size_t> Monomial::pure_power_variable() const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

Monomial Monomial::with(std::size_t index, Exponent power) const {
  std::vector<Exponent> e = exps_;
  e.at(index) = power;
  return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a.nvars(), b.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a.nvars(), b.nvars());
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a.nvars(), b.nvars());
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(a.nvars(), b.nvars());
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t s = std::uint64_t{a[i]} + b[i];
    if (s > kMaxExponent) throw std::overflow_error("monomial product overflows exponent range");
    e[i] = static_cast<Exponent>(s);
  }
  return Monomial(std::move(e));
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw std::invalid_argument("monomial quotient: divisor does not divide");
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] - b[i];
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& a, const Monomial& b) {
  require_same_ring(a.nvars(), b.nvars());
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return Monomial(std::move(e));
}

// --- primes ---------------------------------------------------------------

MonomialPrime::MonomialPrime(std::size_t nvars, std::vector<std::size_t> vars)
    : nvars_(nvars), vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (!vars_.empty() && vars_.back() >= nvars_) {
    throw std::out_of_range("prime variable index out of range");
  }
}

MonomialPrime MonomialPrime::maximal(std::size_t nvars) {
  std::vector<std::size_t> all(nvars);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return MonomialPrime(nvars, std::move(all));
}

bool MonomialPrime::has_var(std::size_t i) const {
  return std::binary_search(vars_.begin(), vars_.end(), i);
}

bool MonomialPrime::subset_of(const MonomialPrime& other) const {
  require_same_ring(nvars_, other.nvars_);
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

bool MonomialPrime::contains(const Monomial& m) const {
  require_same_ring(nvars_, m.nvars());
  return std::any_of(vars_.begin(), vars_.end(), [&](std::size_t i) { return m[i] > 0; });
}

MonomialPrime MonomialPrime::with_var(std::size_t i) const {
  std::vector<std::size_t> v = vars_;
  v.push_back(i);
  return MonomialPrime(nvars_, std::move(v));
}

std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
  if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
  if (auto c = a.vars_.size() <=> b.vars_.size(); c != 0) return c;
  return a.vars_ <=> b.vars_;
}

// --- ideals ---------------------------------------------------------------

std::vector<Monomial> minimal_generators(std::vector<Monomial> monomials) {
  // Low degree first: a divisor always precedes its proper multiples.
  std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<Monomial> kept;
  for (auto& m : monomials) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return divides(k, m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(), CanonicalOrder{});
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  if (nvars == 0) throw std::invalid_argument("ideal needs at least one variable");
  for (const auto& g : gens) require_same_ring(nvars, g.nvars());
  gens_ = minimal_generators(std::move(gens));
}

MonomialIdeal MonomialIdeal::from_prime(const MonomialPrime& p) {
  std::vector<Monomial> gens;
  for (std::size_t i : p.vars()) gens.push_back(Monomial::variable(p.nvars(), i));
  return MonomialIdeal(p.nvars(), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

Monomial MonomialIdeal::lcm_of_generators() const {
  Monomial acc = Monomial::one(nvars_);
  for (const auto& g : gens_) acc = lcm(acc, g);
  return acc;
}

std::optional<MonomialPrime> MonomialIdeal::as_prime() const {
  std::vector<std::size_t> vars;
  for (const auto& g : gens_) {
    if (g.degree() != 1) return std::nullopt;
    vars.push_back(*g.pure_power_variable());
  }
  return MonomialPrime(nvars_, std::move(vars));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  require_same_ring(ideal.nvars(), m.nvars());
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

bool is_subset(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  require_same_ring(inner.nvars(), outer.nvars());
  return std::all_of(inner.gens().begin(), inner.gens().end(),
                     [&](const Monomial& g) { return contains(outer, g); });
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.nvars(), b.nvars());
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, std::span<const Monomial> extra) {
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.nvars(), b.nvars());
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) gens.push_back(lcm(g, h));
  }
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
  require_same_ring(ideal.nvars(), f.nvars());
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) gens.push_back(colon(g, f));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal.nvars(), by.nvars());
  if (by.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  MonomialIdeal acc = colon(ideal, by.gens().front());
  for (std::size_t k = 1; k < by.gens().size(); ++k) acc = intersect(acc, colon(ideal, by.gens()[k]));
  return acc;
}

MonomialIdeal saturate(const MonomialIdeal& ideal) {
  const MonomialIdeal m = MonomialIdeal::from_prime(MonomialPrime::maximal(ideal.nvars()));
  MonomialIdeal current = ideal;
  while (true) {
    MonomialIdeal next = colon(current, m);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace monoclean

std::size_t std::hash<monoclean::Monomial>::operator()(const monoclean::Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

std::size_t std::hash<monoclean::MonomialIdeal>::operator()(
    const monoclean::MonomialIdeal& ideal) const noexcept {
  std::size_t h = ideal.nvars();
  std::hash<monoclean::Monomial> mh;
  for (const auto& g : ideal.gens()) h = h * 31 + mh(g);
  return h;
}
