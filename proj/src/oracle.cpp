#include "qcldpc/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace qcldpc::oracle {

std::size_t rank_f2(BinaryMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && !a.get(pivot, c)) ++pivot;
    if (pivot == rows) continue;
    a.swap_rows(rank, pivot);
    for (std::size_t r = pivot + 1; r < rows; ++r)
      if (a.get(r, c)) a.xor_row_into(rank, r);
    ++rank;
  }
  return rank;
}

NullspaceBasis nullspace(const BinaryMatrix& a) {
  BinaryMatrix r = a;
  const std::size_t rows = r.rows(), cols = r.cols();
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && !r.get(pivot, c)) ++pivot;
    if (pivot == rows) continue;
    r.swap_rows(rank, pivot);
    for (std::size_t row = 0; row < rows; ++row)
      if (row != rank && r.get(row, c)) r.xor_row_into(rank, row);
    pivots.emplace_back(rank, c);
    ++rank;
  }
  NullspaceBasis out;
  out.dim = cols - rank;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& [pr, pc] : pivots) is_pivot[pc] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(cols);
    v.set(f);
    for (const auto& [pr, pc] : pivots)
      if (r.get(pr, f)) v.set(pc);
    out.basis.push_back(std::move(v));
  }
  return out;
}

DistanceResult min_distance_exhaustive(const BinaryMatrix& a,
                                       std::size_t dim_cap) {
  if (dim_cap > hard_dim_cap)
    throw std::invalid_argument("min_distance_exhaustive: dim_cap above hard "
                                "ceiling " +
                                std::to_string(hard_dim_cap));
  const auto ns = nullspace(a);
  DistanceResult res;
  res.nullspace_dim = ns.dim;
  if (ns.dim == 0) {
    res.status = DistanceStatus::undefined;
    return res;
  }
  if (ns.dim > dim_cap) {
    res.status = DistanceStatus::infeasible;
    return res;
  }
  BitVector current(a.cols());
  std::uint32_t best = UINT32_MAX;
  BitVector best_vec;
  const std::uint64_t total = std::uint64_t{1} << ns.dim;
  for (std::uint64_t k = 1; k < total; ++k) {
    current.xor_with(ns.basis[std::countr_zero(k)]);
    const auto w = static_cast<std::uint32_t>(current.popcount());
    if (w < best) {
      best = w;
      best_vec = current;
    }
  }
  res.status = DistanceStatus::exact;
  res.distance = best;
  res.achiever = std::move(best_vec);
  return res;
}

CyclicPoly det_cofactor_oracle(const PolyMatrix& pm) {
  if (pm.rows() != pm.cols())
    throw std::invalid_argument("det_cofactor_oracle: matrix is not square");
  const std::size_t q = pm.rows();
  if (q > max_cofactor_order)
    throw std::invalid_argument("det_cofactor_oracle: order exceeds cap " +
                                std::to_string(max_cofactor_order));
  if (q == 1) return pm.at(0, 0);
  // expand along the first row; no signs over F2
  CyclicPoly acc(pm.modulus());
  std::vector<std::size_t> rows(q - 1);
  for (std::size_t i = 0; i < q - 1; ++i) rows[i] = i + 1;
  for (std::size_t j = 0; j < q; ++j) {
    std::vector<std::size_t> cols;
    cols.reserve(q - 1);
    for (std::size_t c = 0; c < q; ++c)
      if (c != j) cols.push_back(c);
    acc += pm.at(0, j) * det_cofactor_oracle(pm.submatrix(rows, cols));
  }
  return acc;
}

}  // namespace qcldpc::oracle
