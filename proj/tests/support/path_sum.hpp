// Matrix star as the supremum of all path products, by iterated powers.

#pragma once

#include "rtea/matrix.hpp"

namespace rtea::testing {

inline bool matrix_leq(const RtefMatrix& a, const RtefMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!leq(a(i, j), b(i, j))) return false;
    }
  }
  return true;
}

/// sup_{l <= L} M^l, continued past `min_length` until a power adds nothing.
inline RtefMatrix path_sum_star(const RtefMatrix& m, std::size_t min_length) {
  const std::size_t n = m.rows();
  RtefMatrix acc = RtefMatrix::identity(n);
  RtefMatrix power = RtefMatrix::identity(n);
  for (std::size_t len = 1;; ++len) {
    power = mat_mul(power, m);
    RtefMatrix next = mat_sup(acc, power);
    bool stable = matrix_leq(next, acc);
    acc = std::move(next);
    if (len >= min_length && stable) return acc;
    if (len > 8 * min_length + 32) return acc;
  }
}

}  // namespace rtea::testing
