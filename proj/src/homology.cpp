#include "monoclean/homology.hpp"

#include <algorithm>
#include <bit>

#include "monoclean/box.hpp"
#include "monoclean/errors.hpp"
#include "monoclean/limits.hpp"
#include "monoclean/linalg.hpp"

namespace monoclean {

std::uint64_t BettiTable::at(std::size_t i, const Monomial& degree) const {
  auto it = entries_.find({i, degree});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(std::size_t i, const Monomial& degree, std::uint64_t value) {
  require_same_ring(nvars_, degree.nvars());
  if (value == 0) {
    entries_.erase({i, degree});
  } else {
    entries_[{i, degree}] = value;
  }
}

std::size_t BettiTable::projective_dimension() const {
  std::size_t pd = 0;
  for (const auto& [key, value] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::int64_t BettiTable::regularity() const {
  std::int64_t reg = 0;
  for (const auto& [key, value] : entries_) {
    reg = std::max(reg, static_cast<std::int64_t>(key.second.degree()) - static_cast<std::int64_t>(key.first));
  }
  return reg;
}

std::uint64_t BettiTable::graded(std::size_t i, std::uint64_t d) const {
  std::uint64_t total = 0;
  for (const auto& [key, value] : entries_) {
    if (key.first == i && key.second.degree() == d) total += value;
  }
  return total;
}

std::int64_t BettiTable::hilbert_function(const Monomial& b) const {
  std::int64_t total = 0;
  for (const auto& [key, value] : entries_) {
    if (!divides(key.second, b)) continue;
    const auto v = static_cast<std::int64_t>(value);
    total += key.first % 2 == 0 ? v : -v;
  }
  return total;
}

namespace {

// Reduced homology ranks of the upper Koszul complex at multidegree a,
// indexed by face size k: result[k] = dim H~_{k-1}.
std::vector<std::uint64_t> koszul_homology(const MonomialIdeal& ideal, const Monomial& a,
                                           unsigned characteristic) {
  const auto support = a.support();
  const std::size_t s = support.size();
  std::vector<std::vector<std::uint32_t>> faces(s + 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << s); ++mask) {
    std::vector<Exponent> e(a.exponents().begin(), a.exponents().end());
    for (std::size_t k = 0; k < s; ++k) {
      if (mask >> k & 1) e[support[k]] -= 1;
    }
    if (contains(ideal, Monomial(std::move(e)))) faces[std::popcount(mask)].push_back(mask);
  }

  // boundary_rank[k] = rank of the boundary from size-k faces to size-(k-1) faces.
  std::vector<std::size_t> boundary_rank(s + 2, 0);
  for (std::size_t k = 1; k <= s; ++k) {
    if (faces[k].empty() || faces[k - 1].empty()) continue;
    IntMatrix d(faces[k - 1].size(), faces[k].size());
    for (std::size_t c = 0; c < faces[k].size(); ++c) {
      const std::uint32_t sigma = faces[k][c];
      int position = 0;
      for (std::size_t v = 0; v < s; ++v) {
        if (!(sigma >> v & 1)) continue;
        const std::uint32_t facet = sigma & ~(std::uint32_t{1} << v);
        auto it = std::lower_bound(faces[k - 1].begin(), faces[k - 1].end(), facet);
        if (it != faces[k - 1].end() && *it == facet) {
          d(static_cast<std::size_t>(it - faces[k - 1].begin()), c) = position % 2 == 0 ? 1 : -1;
        }
        ++position;
      }
    }
    boundary_rank[k] = rank(d, characteristic);
  }
  std::vector<std::uint64_t> out(s + 1, 0);
  for (std::size_t k = 0; k <= s; ++k) {
    out[k] = faces[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  }
  return out;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, unsigned characteristic) {
  if (!ideal.is_proper()) throw PreconditionError("Betti numbers are computed for proper ideals");
  const std::size_t n = ideal.nvars();
  if (n > 24) throw ResourceError("too many variables for Koszul-complex homology");
  BettiTable table(n);
  table.set(0, Monomial::one(n), 1);
  if (ideal.is_zero()) return table;

  const ExponentBox box(ideal.lcm_of_generators(), limits::kMaxMultidegrees);
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    const Monomial a = box.point(idx);
    // Off the lcm lattice K^a(I) is a cone and contributes nothing.
    Monomial lattice = Monomial::one(n);
    bool any = false;
    for (const auto& g : ideal.gens()) {
      if (divides(g, a)) {
        lattice = lcm(lattice, g);
        any = true;
      }
    }
    if (!any || lattice != a) continue;
    const auto h = koszul_homology(ideal, a, characteristic);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] != 0) table.set(k + 1, a, h[k]);
    }
  }
  return table;
}

std::size_t projective_dimension(const MonomialIdeal& ideal, unsigned characteristic) {
  return betti_table(ideal, characteristic).projective_dimension();
}

std::size_t depth(const MonomialIdeal& ideal, unsigned characteristic) {
  return ideal.nvars() - projective_dimension(ideal, characteristic);
}

std::int64_t regularity(const MonomialIdeal& ideal, unsigned characteristic) {
  return betti_table(ideal, characteristic).regularity();
}

}  // namespace monoclean
