#pragma once

#include <cstdint>
#include <vector>

#include "qcldpc/binary_matrix.hpp"
#include "qcldpc/qc_code.hpp"

namespace qcldpc::oracle {

// Default enumeration budget: 2^20 codewords. Hard ceiling 2^24.
inline constexpr std::size_t default_dim_cap = 20;
inline constexpr std::size_t hard_dim_cap = 24;

inline constexpr std::size_t max_cofactor_order = 6;

std::size_t rank_f2(BinaryMatrix a);

struct NullspaceBasis {
  std::size_t dim;
  std::vector<BitVector> basis;  // reduced, ordered by free column
};

NullspaceBasis nullspace(const BinaryMatrix& a);

enum class DistanceStatus {
  exact,       // distance holds the minimum weight
  undefined,   // nullspace dimension 0: the code has no nonzero codewords
  infeasible,  // nullspace dimension above the cap; nothing enumerated
};

struct DistanceResult {
  DistanceStatus status;
  std::uint32_t distance = 0;
  BitVector achiever;  // a minimum-weight codeword (status == exact only)
  std::size_t nullspace_dim = 0;
};

// Exhaustive minimum distance: enumerates all 2^dim - 1 nonzero codewords in
// Gray-code order so each step is a single basis-vector XOR.
DistanceResult min_distance_exhaustive(const BinaryMatrix& a,
                                       std::size_t dim_cap = default_dim_cap);

// Recursive first-row cofactor expansion; an implementation of the ring
// determinant independent of construct's permutation expansion, kept as the
// cross-check for it.
CyclicPoly det_cofactor_oracle(const PolyMatrix& pm);

}  // namespace qcldpc::oracle
