#pragma once

#include <cstdint>
#include <vector>

namespace monoclean {

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Rank over Q (characteristic 0, exact rational elimination) or over F_p.
std::size_t rank(const IntMatrix& m, unsigned characteristic = 0);

}  // namespace monoclean
