#pragma once

// Text syntax: monomials look like `x1^2*x2*x4` (exponent 1 omitted, unit is
// `1`); ideals are comma-separated monomials, the zero ideal is `0`.

#include <string>
#include <string_view>
#include <vector>

#include "monoclean/monomial.hpp"

namespace monoclean {

Monomial parse_monomial(std::string_view text, const RingContext& ring);
MonomialIdeal parse_ideal(std::string_view text, const RingContext& ring);
/// Ordered list of monomials; order and repeats are preserved.
std::vector<Monomial> parse_sequence(std::string_view text, const RingContext& ring);

/// Largest k such that a token `xk` occurs; 0 when none do.
std::size_t infer_nvars(std::string_view text);

std::string format(const Monomial& m, const RingContext& ring);
std::string format(const MonomialIdeal& ideal, const RingContext& ring);
std::string format(const MonomialPrime& p, const RingContext& ring);
std::string format(std::span<const Monomial> seq, const RingContext& ring);

}  // namespace monoclean
