#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcldpc/oracle.hpp"
#include "qcldpc/qc_code.hpp"
#include "qcldpc/rational.hpp"

namespace qcldpc {

// Report of the determinant-based distance bound. With column weights sorted
// ascending (l_1 <= ... <= l_n), k is the largest integer in [1, m] with
// l_{m+2-k} >= k and ell is the mean of l_2..l_{m+1-k}.
//
// Two forms are kept:
//   bound_product = (m+1) * k! * prod_{j=2}^{m+1-k} l_j   (exact integer)
//   bound_average = (m+1) * k! * ell^{m-k}                (exact rational)
// The product form counts the monomial terms directly and is never looser
// than the mean form (AM-GM); the mean form is the headline formula. When
// k == m the averaging range is empty: ell is reported as 1 and both trailing
// factors are the empty product.
struct DetBoundReport {
  std::size_t m = 0;
  std::uint32_t k = 0;
  Rational ell{1};
  std::uint64_t bound_product = 0;
  Rational bound_average{0};
  std::uint64_t bound_average_ceil = 0;
  std::vector<std::size_t> sorted_weights;
};

struct BoundSummary {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint32_t s = 0;
  std::size_t code_length = 0;  // n * s
  Rational design_rate{0};
  oracle::DistanceStatus d_base_status = oracle::DistanceStatus::infeasible;
  std::uint32_t d_base = 0;  // valid when d_base_status == exact
  std::optional<std::uint64_t> bound_simple;
  std::optional<DetBoundReport> det;  // empty when n < m+1
  std::optional<std::uint64_t> bound_constructive;
  // With m and n fixed and s as the growth parameter the determinant bound is
  // a constant, so linear distance growth is ruled out for any single
  // instance analyzed in that regime.
  bool linear_growth_possible = false;
};

// d * s, where d is the minimum distance of the binary code checked by the
// weight matrix itself.
std::uint64_t simple_bound(const WeightMatrix& wm, std::uint32_t s,
                           std::uint32_t d);

DetBoundReport det_bound(const WeightMatrix& wm);

// Weight of an actually constructed nonzero codeword, built from the m+1
// lightest columns. Empty when those columns are identically zero.
std::optional<std::uint64_t> constructive_bound(const ExponentMatrix& em);

// Witness matching simple_bound: the all-ones polynomial placed on the
// support of a base-code codeword. Zero-syndrome for every type-1 instance
// of the weight matrix; its weight is exactly |supp| * s.
CodewordPoly all_ones_witness(const WeightMatrix& wm,
                              const BitVector& base_codeword, std::uint32_t s);

BoundSummary summarize(const ExponentMatrix& em,
                       std::size_t dim_cap = oracle::default_dim_cap);
BoundSummary summarize_weight_matrix(
    const WeightMatrix& wm, std::uint32_t s,
    std::size_t dim_cap = oracle::default_dim_cap);

// Flat JSON object; unavailable values serialize as null.
std::string to_json(const BoundSummary& summary);

}  // namespace qcldpc
