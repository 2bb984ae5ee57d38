#pragma once

#include <cstddef>

namespace monoclean::limits {

/// Characteristic-poset points; MONOCLEAN_MAX_POSET overrides.
std::size_t max_poset_points();
inline constexpr std::size_t kMaxGenerators = 15;
inline constexpr std::size_t kMaxMultidegrees = 20000;
/// Exponent box explored by the filtration search.
inline constexpr std::size_t kMaxFiltrationBox = 20000;
/// Bitmask-backed searches (primes, component subsets).
inline constexpr std::size_t kMaxMaskWidth = 63;

}  // namespace monoclean::limits
