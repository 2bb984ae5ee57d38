#include "monoclean/linalg.hpp"

#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace monoclean {
namespace {

template <class Field, class IsZero, class Div>
std::size_t eliminate(std::vector<std::vector<Field>>& a, std::size_t cols, IsZero is_zero, Div div) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && is_zero(a[pivot][c])) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (is_zero(a[i][c])) continue;
      Field f = div(a[i][c], a[r][c]);
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

struct ModP {
  std::uint64_t v;
  std::uint64_t p;
  ModP& operator-=(const ModP& o) {
    v = (v + p - o.v) % p;
    return *this;
  }
  ModP operator*(const ModP& o) const { return {v * o.v % p, p}; }
};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

std::size_t rank(const IntMatrix& m, unsigned characteristic) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (characteristic == 0) {
    using Q = boost::multiprecision::cpp_rational;
    std::vector<std::vector<Q>> a(m.rows, std::vector<Q>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i) {
      for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = m(i, j);
    }
    return eliminate(
        a, m.cols, [](const Q& x) { return x == 0; }, [](const Q& x, const Q& y) { return Q(x / y); });
  }
  if (characteristic < 2 || characteristic > 0xffffffffu) throw std::invalid_argument("bad characteristic");
  const std::uint64_t p = characteristic;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("characteristic must be 0 or a prime");
  }
  std::vector<std::vector<ModP>> a(m.rows, std::vector<ModP>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      std::int64_t x = m(i, j) % static_cast<std::int64_t>(p);
      if (x < 0) x += static_cast<std::int64_t>(p);
      a[i][j] = {static_cast<std::uint64_t>(x), p};
    }
  }
  return eliminate(
      a, m.cols, [](const ModP& x) { return x.v == 0; },
      [p](const ModP& x, const ModP& y) { return ModP{x.v * inverse_mod(y.v, p) % p, p}; });
}

}  // namespace monoclean
