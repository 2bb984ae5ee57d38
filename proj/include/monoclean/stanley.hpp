#pragma once

// Stanley decompositions of S/I through interval partitions of the
// characteristic poset P = {a ∈ [0, g] : x^a ∉ I}, g the exponent vector of
// lcm(G(I)). An interval [a, b] contributes x^a K[Z] with
// Z = {x_j : b_j = g_j}.

#include <cstdint>
#include <optional>
#include <vector>

#include "monoclean/monomial.hpp"

namespace monoclean {

struct StanleyInterval {
  Monomial bottom;
  Monomial top;

  friend bool operator==(const StanleyInterval&, const StanleyInterval&) = default;
};

struct StanleyPartition {
  Monomial cap;
  std::vector<StanleyInterval> intervals;

  /// Variables free on the interval (capped coordinates of its top).
  std::vector<std::size_t> free_vars(const StanleyInterval& interval) const;
  /// min |Z_i| over the pieces.
  std::size_t sdepth() const;
  /// max deg u_i over the pieces.
  std::uint64_t max_generator_degree() const;

  friend bool operator==(const StanleyPartition&, const StanleyPartition&) = default;
};

/// True iff the intervals are genuine and cover every point of the
/// characteristic poset exactly once.
bool is_poset_partition(const MonomialIdeal& ideal, const StanleyPartition& partition);

struct SdepthResult {
  std::size_t value = 0;
  StanleyPartition witness;
};

/// Exact sdepth(S/I). Throws ResourceError when the poset exceeds the cap.
SdepthResult sdepth(const MonomialIdeal& ideal);

/// A partition whose pieces all have sdepth >= target, if one exists.
std::optional<StanleyPartition> partition_with_sdepth(const MonomialIdeal& ideal, std::size_t target);
/// A partition whose generators all have degree <= bound, if one exists.
std::optional<StanleyPartition> partition_with_degree_bound(const MonomialIdeal& ideal, std::uint64_t bound);
/// Smallest achievable max generator degree over poset partitions.
std::uint64_t min_max_generator_degree(const MonomialIdeal& ideal);

/// depth(S/I) <= sdepth(S/I).
bool stanley_conjecture_check(const MonomialIdeal& ideal, unsigned characteristic = 0);
/// Some partition has every generator degree <= reg(S/I).
bool h_regularity_check(const MonomialIdeal& ideal, unsigned characteristic = 0);

}  // namespace monoclean
