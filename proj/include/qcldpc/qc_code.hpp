#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qcldpc/binary_matrix.hpp"
#include "qcldpc/cyclic_poly.hpp"
#include "qcldpc/rational.hpp"

namespace qcldpc {

// m x n matrix over {0,1}: the blueprint of a type-1 quasi-cyclic code.
// Entry 1 means the corresponding circulant block is a cyclic permutation
// matrix, entry 0 means an all-zero block.
class WeightMatrix {
 public:
  WeightMatrix(std::size_t m, std::size_t n);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  int get(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, int v);

  std::size_t column_weight(std::size_t j) const;
  std::vector<std::size_t> column_weights() const;
  std::size_t total_ones() const;

  BinaryMatrix to_binary() const;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t m_, n_;
  std::vector<std::uint8_t> entries_;
};

inline constexpr int absent_entry = -1;

// Type-1 polynomial parity-check matrix: each entry is either absent (the
// zero block) or a monomial exponent in [0, s). Absence is a distinct state
// from a zero polynomial so both round-trip through parsing.
class ExponentMatrix {
 public:
  ExponentMatrix(std::size_t m, std::size_t n, std::uint32_t s);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::uint32_t modulus() const { return s_; }

  int get(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, int v);  // absent_entry or [0, s)
  bool is_absent(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j] == absent_entry;
  }

  WeightMatrix weight_matrix() const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) =
      default;

 private:
  std::size_t m_, n_;
  std::uint32_t s_;
  std::vector<std::int32_t> entries_;
};

// General matrix over F2[x]/(x^s - 1); arises as the polynomial form of an
// ExponentMatrix and as submatrices during determinant work.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::uint32_t s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return s_; }

  const CyclicPoly& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  CyclicPoly& at(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  bool is_zero() const;

  PolyMatrix submatrix(std::span<const std::size_t> row_idx,
                       std::span<const std::size_t> col_idx) const;
  PolyMatrix drop_column(std::size_t j) const;

 private:
  std::size_t rows_, cols_;
  std::uint32_t s_;
  std::vector<CyclicPoly> entries_;
};

// Length-n vector of ring polynomials; candidate or actual codeword.
class CodewordPoly {
 public:
  CodewordPoly(std::size_t n, std::uint32_t s);  // zero word
  explicit CodewordPoly(std::vector<CyclicPoly> blocks);

  std::size_t block_count() const { return blocks_.size(); }
  std::uint32_t modulus() const { return s_; }

  const CyclicPoly& at(std::size_t i) const { return blocks_[i]; }
  CyclicPoly& at(std::size_t i) { return blocks_[i]; }

  std::size_t weight() const;
  bool is_zero() const;

  // Block-major flattening, coefficient order ascending within each block:
  // bit i*s + t carries the coefficient of x^t in block i.
  BitVector flatten() const;
  static CodewordPoly unflatten(const BitVector& bits, std::size_t n,
                                std::uint32_t s);

  // Same cyclic shift applied to every subblock.
  CodewordPoly shifted(std::uint32_t t) const;

  std::string to_string() const;  // "(x, x, x^2)"

 private:
  std::uint32_t s_;
  std::vector<CyclicPoly> blocks_;
};

struct DegreeDistribution {
  std::map<std::size_t, std::size_t> counts;  // column weight -> #columns

  std::size_t total_columns() const;
  std::string to_string() const;  // "12x^2+24x^3+12x^4"
};

struct ColumnSortResult {
  WeightMatrix sorted;
  // sorted column t came from original column perm[t]; ties keep original
  // order (stable).
  std::vector<std::size_t> perm;
};

// Projection onto {0,1}: absent -> 0, exponent -> 1.
WeightMatrix weight_of(const ExponentMatrix& em);

// The ms x ns parity-check matrix. Block (i,j) holding exponent a becomes the
// s x s circulant with P(r,c) = 1 iff (r - c) mod s == a; absent blocks are
// all-zero. The polynomial of a block reads along its FIRST COLUMN, which is
// what forces this orientation; it is pinned by a bit-exact golden test.
BinaryMatrix expand(const ExponentMatrix& em);

// Inverse of expand for type-1 inputs (reads first columns of each block).
ExponentMatrix collapse(const BinaryMatrix& bm, std::size_t m, std::size_t n,
                        std::uint32_t s);

PolyMatrix to_poly_matrix(const ExponentMatrix& em);
PolyMatrix select_columns(const ExponentMatrix& em,
                          std::span<const std::size_t> cols);

// Row i of the result is the ring sum over j of p_{i,j}(x) * c_j(x).
std::vector<CyclicPoly> syndrome(const ExponentMatrix& em,
                                 const CodewordPoly& c);

// True iff the polynomial syndrome is all-zero AND the expanded binary
// product H * c^T vanishes. The two paths must agree on every input;
// disagreement throws std::logic_error.
bool syndrome_consistency_check(const ExponentMatrix& em,
                                const CodewordPoly& c);

Rational design_rate(const WeightMatrix& wm);  // 1 - m/n, exact

ColumnSortResult sort_columns_ascending(const WeightMatrix& wm);

DegreeDistribution degree_distribution(const WeightMatrix& wm);

// Mean of sorted column weights l_{t1}..l_{t2}, 1-based, t1 < t2. The matrix
// must already be column-sorted ascending.
Rational avg_weight(const WeightMatrix& sorted_wm, std::size_t t1,
                    std::size_t t2);

// Deterministically assigns a random exponent in [0, s) to every 1-entry.
// Uses a fixed generator so results are identical across platforms.
ExponentMatrix instantiate_random(const WeightMatrix& wm, std::uint32_t s,
                                  std::uint64_t seed);

}  // namespace qcldpc
