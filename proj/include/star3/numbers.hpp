#pragma once

#include "star3/bigint.hpp"

#include <vector>

namespace star3 {

/// C_0..C_N from C_{k+1} = sum_i C_i C_{k-i}.
inline std::vector<BigInt> catalan_numbers(int N) {
  std::vector<BigInt> c(N + 1);
  c[0] = 1;
  for (int k = 0; k < N; ++k) {
    BigInt s = 0;
    for (int i = 0; i <= k; ++i) s += c[i] * c[k - i];
    c[k + 1] = s;
  }
  return c;
}

/// M_0..M_N from M_{k+1} = M_k + sum_{i<k} M_i M_{k-1-i}.
inline std::vector<BigInt> motzkin_numbers(int N) {
  std::vector<BigInt> m(N + 1);
  m[0] = 1;
  for (int k = 0; k < N; ++k) {
    BigInt s = m[k];
    for (int i = 0; i + 1 <= k; ++i) s += m[i] * m[k - 1 - i];
    m[k + 1] = s;
  }
  return m;
}

}  // namespace star3
