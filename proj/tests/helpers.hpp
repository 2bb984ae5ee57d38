#pragma once

#include <random>
#include <string>
#include <vector>

#include "monoclean/monomial.hpp"
#include "monoclean/text.hpp"

namespace testing_helpers {

inline monoclean::MonomialIdeal I(const std::string& text, std::size_t n) {
  return monoclean::parse_ideal(text, monoclean::RingContext(n));
}

inline monoclean::Monomial M(const std::string& text, std::size_t n) {
  return monoclean::parse_monomial(text, monoclean::RingContext(n));
}

inline monoclean::MonomialPrime P(std::size_t n, std::vector<std::size_t> vars) {
  return monoclean::MonomialPrime(n, std::move(vars));
}

inline std::string str(const monoclean::MonomialIdeal& ideal) {
  return monoclean::format(ideal, monoclean::RingContext(ideal.nvars()));
}

/// Small random ideal for property tests: `count` generators with exponents <= max_exp.
inline monoclean::MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, unsigned max_exp,
                                             std::size_t count) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<monoclean::Monomial> gens;
  while (gens.size() < count) {
    std::vector<monoclean::Exponent> v(n);
    for (auto& x : v) x = e(rng);
    monoclean::Monomial m(v);
    if (!m.is_one()) gens.push_back(m);
  }
  return monoclean::MonomialIdeal(n, gens);
}

}  // namespace testing_helpers
