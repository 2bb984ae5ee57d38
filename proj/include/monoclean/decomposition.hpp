#pragma once

#include <vector>

#include "monoclean/monomial.hpp"

namespace monoclean {

/// Irreducible monomial ideal (x_{i1}^{a1}, ..., x_{it}^{at}). Stored as an
/// exponent vector whose zero entries mark absent variables.
class IrreducibleComponent {
 public:
  explicit IrreducibleComponent(Monomial powers);

  std::size_t nvars() const noexcept { return powers_.nvars(); }
  const Monomial& powers() const noexcept { return powers_; }
  MonomialPrime radical() const;
  std::size_t height() const;
  MonomialIdeal ideal() const;
  bool contains(const Monomial& m) const;
  /// this ⊆ other as ideals.
  bool subset_of(const IrreducibleComponent& other) const;

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  /// Canonical order: by radical, then by the pure-power exponents.
  friend std::strong_ordering operator<=>(const IrreducibleComponent& a,
                                          const IrreducibleComponent& b);

 private:
  Monomial powers_;
};

struct Decomposition {
  std::vector<IrreducibleComponent> components;

  MonomialIdeal intersection(std::size_t nvars) const;
  /// No component contains the intersection of the others.
  bool is_irredundant(std::size_t nvars) const;
};

/// The unique irredundant irreducible decomposition of a proper nonzero ideal.
Decomposition irreducible_decomposition(const MonomialIdeal& ideal);

/// Ass(S/I), sorted. The zero ideal yields the zero prime.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);
/// Min(S/I): inclusion-minimal elements of Ass(S/I), sorted.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);
std::vector<MonomialPrime> minimal_elements(std::vector<MonomialPrime> primes);

/// m ∈ Ass(S/I), decided through I^sat ≠ I.
bool has_maximal_in_ass(const MonomialIdeal& ideal);

/// Checks the Ass / Min / height transfer rules for S/(I,u) with u regular on
/// S/I. Throws PreconditionError when u is not regular.
bool quotient_formula_check(const MonomialIdeal& ideal, const Monomial& u);

}  // namespace monoclean
