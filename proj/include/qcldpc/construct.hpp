#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcldpc/qc_code.hpp"

namespace qcldpc {

// Determinant expansion is q! in the worst case; type-1 inputs stay sparse
// but the order is capped regardless.
inline constexpr std::size_t max_det_order = 12;

class construction_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MinorSelection {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

struct MaxMinor {
  std::size_t order;
  MinorSelection sel;
};

struct ConstructedCodeword {
  CodewordPoly word;
  bool via_fallback;        // true when every top-order minor vanished
  std::size_t minor_order;  // order of the minor actually used
};

// Determinant over the commutative ring F2[x]/(x^s - 1): ring sum over
// permutations of entry products (signs are irrelevant over F2). Branches
// through zero entries and zero partial products are pruned.
CyclicPoly det(const PolyMatrix& pm);

// Codeword from m+1 selected columns: position j in J carries the determinant
// of the selected submatrix with column j deleted, all other positions are
// zero. The result always has zero syndrome; it may be the all-zero word.
CodewordPoly determinant_codeword(const ExponentMatrix& em,
                                  std::vector<std::size_t> J);

// Largest order q with a nonzero q x q minor, with the lexicographically
// first witnessing (row set, column set) pair. Empty iff the matrix is zero.
std::optional<MaxMinor> max_nonzero_minor(const PolyMatrix& pm);

// determinant_codeword, falling back when that word is zero: locate a maximal
// nonzero minor of order r, extend its column set by the smallest unused
// column position, and run the same construction on the r x (r+1) submatrix.
// The returned word is nonzero and has zero syndrome against the full matrix
// (every minor of larger order vanishes, so rows outside the minor are
// satisfied too). Throws construction_error when the selected columns are
// identically zero.
ConstructedCodeword construct_nonzero_codeword(const ExponentMatrix& em,
                                               std::vector<std::size_t> J);

}  // namespace qcldpc
