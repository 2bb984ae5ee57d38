#pragma once

#include <optional>
#include <vector>

#include "monoclean/monomial.hpp"

namespace monoclean {

/// Ordered, non-empty list of non-unit monomials.
class MonomialSequence {
 public:
  explicit MonomialSequence(std::vector<Monomial> items);

  const std::vector<Monomial>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  const Monomial& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  friend bool operator==(const MonomialSequence&, const MonomialSequence&) = default;

 private:
  std::vector<Monomial> items_;
};

/// u is a non zero-divisor on S/I: u avoids every associated prime.
bool is_regular_element(const MonomialIdeal& ideal, const Monomial& u);
bool is_regular_sequence(const MonomialIdeal& ideal, const MonomialSequence& seq);

/// u avoids every associated prime of S/I other than m.
bool is_filter_regular_element(const MonomialIdeal& ideal, const Monomial& u);
bool is_filter_regular_sequence(const MonomialIdeal& ideal, const MonomialSequence& seq);

/// Filter-regular on S/I agrees with regular on S/I^sat.
bool filter_regular_iff_regular_on_saturation(const MonomialIdeal& ideal, const Monomial& u);

/// Non-unit monomials of total degree 1..cap, by degree then canonical order.
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::size_t cap);

std::vector<Monomial> regular_candidates(const MonomialIdeal& ideal, std::size_t degree_cap);
std::vector<Monomial> filter_regular_candidates(const MonomialIdeal& ideal, std::size_t degree_cap);

/// First filter-regular sequence of the given length in enumeration order.
std::optional<MonomialSequence> find_filter_regular_sequence(const MonomialIdeal& ideal,
                                                             std::size_t length,
                                                             std::size_t degree_cap);

/// d-sequence on S/I in the given order: pairwise non-dividing, and
/// (I + (u_1..u_i)) : u_{i+1} u_k = (I + (u_1..u_i)) : u_k for 0 <= i < t, k > i.
bool is_d_sequence_on(const MonomialIdeal& ideal, const MonomialSequence& seq);
/// Some permutation that is a d-sequence on S/I, first in lexicographic
/// permutation order.
std::optional<MonomialSequence> d_sequence_order(const MonomialIdeal& ideal, const MonomialSequence& seq);

/// No u_i | u_j for i != j, and gcd(u_i, u_j) | u_k for all i < j < k.
bool gcd_condition(const MonomialSequence& seq);
std::optional<MonomialSequence> gcd_condition_order(const MonomialSequence& seq);

/// Every non-empty subset of G(I) has a leaf. Throws ResourceError above
/// limits::kMaxGenerators generators.
bool is_forest_type(const MonomialIdeal& ideal);

}  // namespace monoclean
