#include "qcldpc/construct.hpp"

#include <algorithm>

namespace qcldpc {

namespace {

void det_rec(const PolyMatrix& pm, std::size_t row, std::uint32_t used,
             const CyclicPoly& partial, CyclicPoly& acc) {
  const std::size_t q = pm.rows();
  if (row == q) {
    acc += partial;
    return;
  }
  for (std::size_t col = 0; col < q; ++col) {
    if (used & (std::uint32_t{1} << col)) continue;
    const CyclicPoly& e = pm.at(row, col);
    if (e.is_zero()) continue;
    CyclicPoly next = partial * e;
    if (next.is_zero()) continue;  // zero divisor: the whole branch stays zero
    det_rec(pm, row + 1, used | (std::uint32_t{1} << col), next, acc);
  }
}

// Sorted index sets in lexicographic order: {0,1} < {0,2} < {1,2} < ...
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - (k - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

// Validates and canonicalizes a column selection of size m+1.
std::vector<std::size_t> checked_column_set(const ExponentMatrix& em,
                                            std::vector<std::size_t> J) {
  if (J.size() != em.rows() + 1)
    throw std::invalid_argument(
        "column set must have exactly m+1 indices, got " +
        std::to_string(J.size()));
  std::sort(J.begin(), J.end());
  if (std::adjacent_find(J.begin(), J.end()) != J.end())
    throw std::invalid_argument("column set contains a duplicate index");
  if (J.back() >= em.cols())
    throw std::invalid_argument("column index out of range");
  return J;
}

}  // namespace

CyclicPoly det(const PolyMatrix& pm) {
  if (pm.rows() != pm.cols())
    throw std::invalid_argument("det: matrix is not square");
  const std::size_t q = pm.rows();
  if (q > max_det_order)
    throw std::invalid_argument("det: order " + std::to_string(q) +
                                " exceeds cap " +
                                std::to_string(max_det_order));
  CyclicPoly acc(pm.modulus());
  CyclicPoly one = CyclicPoly::monomial(pm.modulus(), 0);
  det_rec(pm, 0, 0, one, acc);
  return acc;
}

CodewordPoly determinant_codeword(const ExponentMatrix& em,
                                  std::vector<std::size_t> J) {
  J = checked_column_set(em, std::move(J));
  const PolyMatrix hj = select_columns(em, J);
  CodewordPoly c(em.cols(), em.modulus());
  for (std::size_t idx = 0; idx < J.size(); ++idx)
    c.at(J[idx]) = det(hj.drop_column(idx));
  return c;
}

std::optional<MaxMinor> max_nonzero_minor(const PolyMatrix& pm) {
  for (std::size_t r = std::min(pm.rows(), pm.cols()); r >= 1; --r) {
    auto rows = first_combination(r);
    do {
      auto cols = first_combination(r);
      do {
        if (!det(pm.submatrix(rows, cols)).is_zero())
          return MaxMinor{r, {rows, cols}};
      } while (next_combination(cols, pm.cols()));
    } while (next_combination(rows, pm.rows()));
  }
  return std::nullopt;
}

ConstructedCodeword construct_nonzero_codeword(const ExponentMatrix& em,
                                               std::vector<std::size_t> J) {
  J = checked_column_set(em, std::move(J));
  CodewordPoly direct = determinant_codeword(em, J);
  if (!direct.is_zero())
    return {std::move(direct), false, em.rows()};

  const PolyMatrix hj = select_columns(em, J);
  const auto mm = max_nonzero_minor(hj);
  if (!mm)
    throw construction_error(
        "selected columns are identically zero; no nonzero codeword from "
        "this construction");
  const std::size_t r = mm->order;

  // extend the witness column set by the smallest position not already in it
  std::vector<std::size_t> extended = mm->sel.cols;
  for (std::size_t pos = 0; pos < hj.cols(); ++pos) {
    if (std::find(extended.begin(), extended.end(), pos) == extended.end()) {
      extended.push_back(pos);
      break;
    }
  }
  std::sort(extended.begin(), extended.end());

  const PolyMatrix sub = hj.submatrix(mm->sel.rows, extended);  // r x (r+1)
  CodewordPoly c(em.cols(), em.modulus());
  for (std::size_t idx = 0; idx < extended.size(); ++idx)
    c.at(J[extended[idx]]) = det(sub.drop_column(idx));
  if (c.is_zero())
    throw std::logic_error(
        "construct_nonzero_codeword: fallback produced a zero word despite a "
        "nonzero minor");
  return {std::move(c), true, r};
}

}  // namespace qcldpc
