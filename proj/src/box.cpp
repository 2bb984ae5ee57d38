#include "monoclean/box.hpp"

#include <string>

#include "monoclean/errors.hpp"

namespace monoclean {

ExponentBox::ExponentBox(const Monomial& cap, std::size_t max_points)
    : cap_(cap.exponents().begin(), cap.exponents().end()) {
  stride_.resize(cap_.size());
  for (std::size_t i = 0; i < cap_.size(); ++i) {
    stride_[i] = size_;
    std::size_t side = std::size_t{cap_[i]} + 1;
    if (size_ > max_points / side) {
      throw ResourceError("exponent box exceeds the cap of " + std::to_string(max_points) + " points");
    }
    size_ *= side;
  }
}

std::size_t ExponentBox::index(std::span<const Exponent> exps) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < cap_.size(); ++i) {
    Exponent e = exps[i] < cap_[i] ? exps[i] : cap_[i];
    idx += e * stride_[i];
  }
  return idx;
}

Monomial ExponentBox::point(std::size_t idx) const {
  std::vector<Exponent> e(cap_.size());
  for (std::size_t i = 0; i < cap_.size(); ++i) e[i] = coord(idx, i);
  return Monomial(std::move(e));
}

bool ExponentBox::leq(std::size_t a, std::size_t b) const {
  for (std::size_t i = 0; i < cap_.size(); ++i) {
    if (coord(a, i) > coord(b, i)) return false;
  }
  return true;
}

std::vector<std::size_t> ExponentBox::interval(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out{a};
  for (std::size_t i = 0; i < cap_.size(); ++i) {
    const Exponent lo = coord(a, i), hi = coord(b, i);
    const std::size_t count = out.size();
    for (Exponent e = lo + 1; e <= hi; ++e) {
      for (std::size_t k = 0; k < count; ++k) out.push_back(out[k] + (e - lo) * stride_[i]);
    }
  }
  return out;
}

std::vector<std::size_t> ExponentBox::upset(std::size_t a) const {
  std::size_t top = 0;
  for (std::size_t i = 0; i < cap_.size(); ++i) top += cap_[i] * stride_[i];
  return interval(a, top);
}

std::size_t ExponentBox::degree(std::size_t idx) const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < cap_.size(); ++i) d += coord(idx, i);
  return d;
}

}  // namespace monoclean
