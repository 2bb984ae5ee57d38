#pragma once

// Multigraded Betti numbers of S/I via upper Koszul simplicial complexes:
// beta_{i+1,a}(S/I) = dim H~_{i-1}(K^a(I)), K^a(I) = {σ ⊆ supp(a) : x^{a-σ} ∈ I}.

#include <cstdint>
#include <map>
#include <utility>

#include "monoclean/monomial.hpp"

namespace monoclean {

class BettiTable {
 public:
  explicit BettiTable(std::size_t nvars) : nvars_(nvars) {}

  using Key = std::pair<std::size_t, Monomial>;

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }
  std::uint64_t at(std::size_t i, const Monomial& degree) const;
  void set(std::size_t i, const Monomial& degree, std::uint64_t value);

  std::size_t projective_dimension() const;
  std::int64_t regularity() const;
  /// beta_i summed over all multidegrees of total degree d.
  std::uint64_t graded(std::size_t i, std::uint64_t d) const;
  /// Hilbert function of S/I at b from the K-polynomial: sum over a <= b of (-1)^i beta_{i,a}.
  std::int64_t hilbert_function(const Monomial& b) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t nvars_;
  std::map<Key, std::uint64_t> entries_;
};

/// characteristic 0 uses exact rational elimination; otherwise F_p.
BettiTable betti_table(const MonomialIdeal& ideal, unsigned characteristic = 0);

std::size_t projective_dimension(const MonomialIdeal& ideal, unsigned characteristic = 0);
/// n - pd(S/I).
std::size_t depth(const MonomialIdeal& ideal, unsigned characteristic = 0);
std::int64_t regularity(const MonomialIdeal& ideal, unsigned characteristic = 0);

}  // namespace monoclean
