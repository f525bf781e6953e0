#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kmcells/error.hpp"

namespace kmcells::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

// Exact determinant by fraction-free elimination with row pivoting.
inline std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j])) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace kmcells::detail
