#pragma once

// Exact monomial and monomial-ideal arithmetic over S = K[x1..xn] with the
// standard Z^n grading. Every ideal is stored through its minimal generating
// set G(I) in canonical order, so equal ideals compare equal structurally.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace monoclean {

using Exponent = std::uint32_t;
inline constexpr Exponent kMaxExponent = 0x7fffffffu;

/// The ambient polynomial ring. Names are for display only; the
/// characteristic tag is consumed by the homology code.
class RingContext {
 public:
  explicit RingContext(std::size_t nvars, unsigned characteristic = 0);
  explicit RingContext(std::vector<std::string> names, unsigned characteristic = 0);

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  unsigned characteristic() const noexcept { return characteristic_; }

 private:
  std::vector<std::string> names_;
  unsigned characteristic_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents)
      : Monomial(std::vector<Exponent>(exponents)) {}

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  bool is_squarefree() const noexcept;
  /// Indices of the variables dividing this monomial.
  std::vector<std::size_t> support() const;
  /// Single variable power x_i^a with a > 0, or none.
  std::optional<std::size_t> pure_power_variable() const;

  Monomial with(std::size_t index, Exponent power) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic order on exponent vectors (x1 compared first).
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<Exponent> exps_;
};

/// Canonical ordering: lex with x1 > x2 > ... > xn, larger monomials first.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

bool divides(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
/// Checked product; throws std::overflow_error past kMaxExponent.
Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; requires divides(b, a).
Monomial operator/(const Monomial& a, const Monomial& b);
/// a / gcd(a, b), the generator of (a) : b.
Monomial colon(const Monomial& a, const Monomial& b);

/// Monomial prime ideal (x_i : i in vars). The empty variable set is the zero prime.
class MonomialPrime {
 public:
  MonomialPrime(std::size_t nvars, std::vector<std::size_t> vars);
  static MonomialPrime maximal(std::size_t nvars);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<std::size_t>& vars() const noexcept { return vars_; }
  std::size_t height() const noexcept { return vars_.size(); }
  std::size_t dim() const noexcept { return nvars_ - vars_.size(); }
  bool is_maximal() const noexcept { return vars_.size() == nvars_; }
  bool has_var(std::size_t i) const;
  bool subset_of(const MonomialPrime& other) const;
  /// True iff the monomial lies in the prime, i.e. shares a variable with it.
  bool contains(const Monomial& m) const;
  MonomialPrime with_var(std::size_t i) const;

  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
  /// Height first, then variable lists lexicographically.
  friend std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b);

 private:
  std::size_t nvars_;
  std::vector<std::size_t> vars_;
};

class MonomialIdeal {
 public:
  /// Minimalizes and canonically orders the given generators.
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }
  static MonomialIdeal unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial::one(nvars)}); }
  static MonomialIdeal from_prime(const MonomialPrime& p);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const noexcept { return !is_unit(); }
  bool is_squarefree() const noexcept;
  /// Exponent vector of lcm(G(I)); the unit monomial for the zero ideal.
  Monomial lcm_of_generators() const;
  /// The prime this ideal equals, if it is generated by variables (or is zero).
  std::optional<MonomialPrime> as_prime() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
    return a.gens_ <=> b.gens_;
  }

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal elements of T in canonical order.
std::vector<Monomial> minimal_generators(std::vector<Monomial> monomials);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
/// I ⊆ J.
bool is_subset(const MonomialIdeal& inner, const MonomialIdeal& outer);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, std::span<const Monomial> extra);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f);
/// I : J; throws std::invalid_argument when J is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
/// I : m^infinity.
MonomialIdeal saturate(const MonomialIdeal& ideal);

void require_same_ring(std::size_t a, std::size_t b);

}  // namespace monoclean

template <>
struct std::hash<monoclean::Monomial> {
  std::size_t operator()(const monoclean::Monomial& m) const noexcept;
};

template <>
struct std::hash<monoclean::MonomialIdeal> {
  std::size_t operator()(const monoclean::MonomialIdeal& ideal) const noexcept;
};
