#include "qcldpc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "qcldpc/construct.hpp"

namespace qcldpc {

std::uint64_t simple_bound(const WeightMatrix& wm, std::uint32_t s,
                           std::uint32_t d) {
  if (d < 1)
    throw std::invalid_argument(
        "simple_bound: base distance must be >= 1 (trivial base code)");
  if (s < 1) throw std::invalid_argument("simple_bound: need s >= 1");
  if (d > wm.cols())
    throw std::invalid_argument(
        "simple_bound: base distance exceeds base code length");
  return checked_mul_u64(d, s);
}

DetBoundReport det_bound(const WeightMatrix& wm) {
  const std::size_t m = wm.rows(), n = wm.cols();
  if (n < m + 1)
    throw std::invalid_argument(
        "det_bound: need at least m+1 columns (construction selects m+1)");
  auto weights = wm.column_weights();
  std::sort(weights.begin(), weights.end());
  if (weights[0] == 0)
    throw std::invalid_argument(
        "det_bound: zero-weight column among the first m+1 sorted columns; "
        "k is undefined");

  // largest k in [1, m] with l_{m+2-k} >= k (1-based positions)
  std::uint32_t k = 0;
  for (std::size_t cand = m; cand >= 1; --cand) {
    if (weights[m + 1 - cand] >= cand) {  // position m+2-cand, 0-based
      k = static_cast<std::uint32_t>(cand);
      break;
    }
  }
  // k >= 1 always holds here: l_{m+1} >= 1 was just checked

  DetBoundReport report;
  report.m = m;
  report.k = k;
  report.sorted_weights = weights;

  Rational ell(1);
  std::uint64_t weight_product = 1;
  const std::size_t hi = m + 1 - k;  // averaging range is positions 2..hi
  if (hi >= 2) {
    std::int64_t sum = 0;
    for (std::size_t pos = 2; pos <= hi; ++pos) {
      sum += static_cast<std::int64_t>(weights[pos - 1]);
      weight_product = checked_mul_u64(weight_product, weights[pos - 1]);
    }
    ell = Rational(sum, static_cast<std::int64_t>(hi - 1));
  }
  report.ell = ell;

  const std::uint64_t prefix = checked_mul_u64(m + 1, factorial_u64(k));
  report.bound_product = checked_mul_u64(prefix, weight_product);
  report.bound_average =
      Rational(static_cast<std::int64_t>(prefix)) *
      ell.pow(static_cast<unsigned>(m - k));
  report.bound_average_ceil =
      static_cast<std::uint64_t>(report.bound_average.ceil());
  return report;
}

std::optional<std::uint64_t> constructive_bound(const ExponentMatrix& em) {
  const std::size_t m = em.rows(), n = em.cols();
  if (n < m + 1)
    throw std::invalid_argument("constructive_bound: need at least m+1 columns");
  const auto sorted = sort_columns_ascending(em.weight_matrix());
  std::vector<std::size_t> J(sorted.perm.begin(),
                             sorted.perm.begin() + (m + 1));
  try {
    const auto built = construct_nonzero_codeword(em, std::move(J));
    if (!syndrome_consistency_check(em, built.word))
      throw std::logic_error(
          "constructive_bound: constructed word failed syndrome verification");
    return built.word.weight();
  } catch (const construction_error&) {
    return std::nullopt;
  }
}

CodewordPoly all_ones_witness(const WeightMatrix& wm,
                              const BitVector& base_codeword,
                              std::uint32_t s) {
  if (base_codeword.size() != wm.cols())
    throw std::invalid_argument("all_ones_witness: base word length mismatch");
  if (base_codeword.is_zero())
    throw std::invalid_argument("all_ones_witness: base word is zero");
  if (!wm.to_binary().multiply(base_codeword).is_zero())
    throw std::invalid_argument(
        "all_ones_witness: base word is not a codeword of the weight matrix");
  CodewordPoly c(wm.cols(), s);
  for (std::size_t j = 0; j < wm.cols(); ++j)
    if (base_codeword.get(j)) c.at(j) = CyclicPoly::all_ones(s);
  return c;
}

BoundSummary summarize_weight_matrix(const WeightMatrix& wm, std::uint32_t s,
                                     std::size_t dim_cap) {
  BoundSummary out;
  out.m = wm.rows();
  out.n = wm.cols();
  out.s = s;
  out.code_length = wm.cols() * s;
  out.design_rate = design_rate(wm);
  out.linear_growth_possible = false;

  const auto base = oracle::min_distance_exhaustive(wm.to_binary(), dim_cap);
  out.d_base_status = base.status;
  if (base.status == oracle::DistanceStatus::exact) {
    out.d_base = base.distance;
    out.bound_simple = simple_bound(wm, s, base.distance);
  }
  if (out.n >= out.m + 1) out.det = det_bound(wm);
  return out;
}

BoundSummary summarize(const ExponentMatrix& em, std::size_t dim_cap) {
  BoundSummary out =
      summarize_weight_matrix(em.weight_matrix(), em.modulus(), dim_cap);
  if (out.n >= out.m + 1) out.bound_constructive = constructive_bound(em);
  return out;
}

std::string to_json(const BoundSummary& summary) {
  nlohmann::ordered_json j;
  j["m"] = summary.m;
  j["n"] = summary.n;
  j["s"] = summary.s;
  j["N"] = summary.code_length;
  j["design_rate"] = summary.design_rate.to_string();
  if (summary.d_base_status == oracle::DistanceStatus::exact)
    j["d_base"] = summary.d_base;
  else
    j["d_base"] = nullptr;
  if (summary.bound_simple)
    j["bound_simple"] = *summary.bound_simple;
  else
    j["bound_simple"] = nullptr;
  if (summary.det) {
    j["bound_det_product"] = summary.det->bound_product;
    j["bound_det_paper"] = summary.det->bound_average_ceil;
    j["k"] = summary.det->k;
    j["ell_num"] = summary.det->ell.num();
    j["ell_den"] = summary.det->ell.den();
  } else {
    j["bound_det_product"] = nullptr;
    j["bound_det_paper"] = nullptr;
    j["k"] = nullptr;
    j["ell_num"] = nullptr;
    j["ell_den"] = nullptr;
  }
  if (summary.bound_constructive)
    j["bound_constructive"] = *summary.bound_constructive;
  else
    j["bound_constructive"] = nullptr;
  j["linear_growth_possible"] = summary.linear_growth_possible;
  return j.dump(2);
}

}  // namespace qcldpc
