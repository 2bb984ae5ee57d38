#pragma once

#include <cstddef>
#include <vector>

#include "monoclean/monomial.hpp"

namespace monoclean {

/// The finite grid [0, cap] of exponent vectors, flattened with mixed-radix
/// indices (x1 varies fastest).
class ExponentBox {
 public:
  explicit ExponentBox(const Monomial& cap, std::size_t max_points);

  std::size_t nvars() const noexcept { return cap_.size(); }
  std::size_t size() const noexcept { return size_; }
  Exponent cap(std::size_t i) const { return cap_[i]; }

  std::size_t index(std::span<const Exponent> exps) const;
  Monomial point(std::size_t idx) const;
  Exponent coord(std::size_t idx, std::size_t i) const { return (idx / stride_[i]) % (cap_[i] + 1); }
  std::size_t stride(std::size_t i) const { return stride_[i]; }
  /// Index of the point raised by one in coordinate i, or npos at the cap.
  std::size_t up(std::size_t idx, std::size_t i) const {
    return coord(idx, i) < cap_[i] ? idx + stride_[i] : npos;
  }
  bool leq(std::size_t a, std::size_t b) const;
  /// Every index b with a <= b componentwise.
  std::vector<std::size_t> upset(std::size_t a) const;
  /// Every index c with a <= c <= b; requires leq(a, b).
  std::vector<std::size_t> interval(std::size_t a, std::size_t b) const;
  std::size_t degree(std::size_t idx) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Exponent> cap_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

}  // namespace monoclean
