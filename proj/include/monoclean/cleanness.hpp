#pragma once

// Clean / pretty clean / almost clean verdicts for S/I.
//
// Two independent routes:
//  * decide(): irreducible decompositions I = Q_1 ∩ ... ∩ Q_r, possibly
//    redundant, with every T_i = G(Mon(∩_{j<i} Q_j \ Q_i)) a
//    singleton, plus a per-mode side condition on the radicals.
//  * find_filtration(): direct search for a multigraded prime filtration
//    I = I_0 ⊂ I_1 ⊂ ... ⊂ I_r = S, I_i = I_{i-1} + (v_i), I_{i-1} : v_i = p_i.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoclean/decomposition.hpp"
#include "monoclean/monomial.hpp"

namespace monoclean {

enum class CleannessMode { Clean, PrettyClean, AlmostClean };

std::string_view to_string(CleannessMode mode);
std::optional<CleannessMode> parse_mode(std::string_view text);

struct OrderedDecomposition {
  std::vector<IrreducibleComponent> components;

  std::vector<MonomialPrime> radicals() const;
};

/// T_1..T_r; T_1 = {1}.
std::vector<std::vector<Monomial>> t_sets(const OrderedDecomposition& decomposition);

/// Singleton T-sets plus the mode side condition: heights nondecreasing and
/// radicals = Min (clean), heights nondecreasing (pretty clean), radicals =
/// Ass (almost clean). Ass and Min are those of the intersection.
bool check_ordering(const OrderedDecomposition& decomposition, CleannessMode mode);

struct CleannessVerdict {
  bool holds = false;
  std::optional<OrderedDecomposition> certificate;
};

/// Tries orderings of the canonical irredundant decomposition first; the
/// certificate is then the first valid ordering in canonical order. Failing
/// that, searches all irreducible components Q ⊇ I with associated radical
/// and pure-power exponents in [1, bound] (default lcm(G(I))).
CleannessVerdict decide(const MonomialIdeal& ideal, CleannessMode mode,
                        std::optional<Monomial> bound = std::nullopt);

struct FiltrationStep {
  Monomial v;
  MonomialPrime prime;

  friend bool operator==(const FiltrationStep&, const FiltrationStep&) = default;
};

struct PrimeFiltration {
  std::vector<FiltrationStep> steps;

  /// I_0, ..., I_r starting from `start`.
  std::vector<MonomialIdeal> chain(const MonomialIdeal& start) const;
  friend bool operator==(const PrimeFiltration&, const PrimeFiltration&) = default;
};

/// Depth-first filtration search. Candidate v_i range over the box
/// [0, bound]; bound defaults to the exponents of lcm(G(I)) and must dominate
/// them. Returns the first filtration in canonical candidate order.
std::optional<PrimeFiltration> find_filtration(const MonomialIdeal& ideal, CleannessMode mode,
                                               std::optional<Monomial> bound = std::nullopt);

struct FiltrationCheck {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

/// Re-verifies a filtration certificate through plain ideal arithmetic.
FiltrationCheck validate_filtration(const PrimeFiltration& filtration, const MonomialIdeal& ideal,
                                    CleannessMode mode);

}  // namespace monoclean
