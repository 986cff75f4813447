#pragma once

// Shared test helpers: deterministic instance generators and the Example-1
// fixtures used across suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "qcldpc/qc_code.hpp"

namespace qcldpc::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0, bound); modulo bias is irrelevant for test sampling
  std::uint64_t pick(std::uint64_t bound) { return eng_() % bound; }
  bool flip() { return eng_() & 1u; }

 private:
  std::mt19937_64 eng_;
};

inline CyclicPoly random_poly(Rng& rng, std::uint32_t s) {
  // mix sparse and dense supports
  const std::uint64_t denom = rng.flip() ? 2 : 4;
  CyclicPoly p(s);
  for (std::uint32_t e = 0; e < s; ++e)
    if (rng.pick(denom) == 0) p += CyclicPoly::monomial(s, e);
  return p;
}

inline PolyMatrix random_poly_matrix(Rng& rng, std::size_t rows,
                                     std::size_t cols, std::uint32_t s) {
  PolyMatrix pm(rows, cols, s);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) pm.at(i, j) = random_poly(rng, s);
  return pm;
}

inline WeightMatrix random_weight_matrix(Rng& rng, std::size_t m,
                                         std::size_t n,
                                         bool nonzero_columns) {
  WeightMatrix wm(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) wm.set(i, j, rng.flip() ? 1 : 0);
  if (nonzero_columns)
    for (std::size_t j = 0; j < n; ++j)
      if (wm.column_weight(j) == 0) wm.set(rng.pick(m), j, 1);
  return wm;
}

inline ExponentMatrix random_exponent_matrix(Rng& rng, std::size_t m,
                                             std::size_t n, std::uint32_t s,
                                             bool nonzero_columns) {
  const auto wm = random_weight_matrix(rng, m, n, nonzero_columns);
  ExponentMatrix em(m, n, s);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (wm.get(i, j)) em.set(i, j, static_cast<int>(rng.pick(s)));
  return em;
}

// k distinct indices from [0, n), ascending.
inline std::vector<std::size_t> random_subset(Rng& rng, std::size_t n,
                                              std::size_t k) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i)
    std::swap(pool[i], pool[i + rng.pick(n - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Random instance whose top-order minors all vanish: a random (m-1)-row
// matrix with one row duplicated.
inline ExponentMatrix random_degenerate_matrix(Rng& rng, std::size_t m,
                                               std::size_t n,
                                               std::uint32_t s) {
  const auto base = random_exponent_matrix(rng, m - 1, n, s, true);
  const std::size_t dup = rng.pick(m - 1);
  ExponentMatrix em(m, n, s);
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = 0; j < n; ++j) em.set(i, j, base.get(i, j));
  for (std::size_t j = 0; j < n; ++j)
    em.set(m - 1, j, base.get(dup, j));
  return em;
}

// H(x) = [[0, x^2, x], [1, 0, x^2]] with s = 3.
inline ExponentMatrix example1() {
  ExponentMatrix em(2, 3, 3);
  em.set(0, 1, 2);
  em.set(0, 2, 1);
  em.set(1, 0, 0);
  em.set(1, 2, 2);
  return em;
}

// The 6x9 parity-check matrix example1() expands to.
inline const char* example1_expanded_rows[] = {
    "000010001", "000001100", "000100010",
    "100000010", "010000001", "001000100",
};

}  // namespace qcldpc::testing
