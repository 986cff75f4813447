#include "qcldpc/qc_code.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qcldpc {

WeightMatrix::WeightMatrix(std::size_t m, std::size_t n)
    : m_(m), n_(n), entries_(m * n, 0) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("WeightMatrix: dimensions must be positive");
}

void WeightMatrix::set(std::size_t i, std::size_t j, int v) {
  if (v != 0 && v != 1)
    throw std::invalid_argument(
        "WeightMatrix: entries must be 0 or 1 (type-1 restriction)");
  entries_[i * n_ + j] = static_cast<std::uint8_t>(v);
}

std::size_t WeightMatrix::column_weight(std::size_t j) const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < m_; ++i) w += entries_[i * n_ + j];
  return w;
}

std::vector<std::size_t> WeightMatrix::column_weights() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = column_weight(j);
  return out;
}

std::size_t WeightMatrix::total_ones() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::size_t{0});
}

BinaryMatrix WeightMatrix::to_binary() const {
  BinaryMatrix bm(m_, n_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (entries_[i * n_ + j]) bm.set(i, j);
  return bm;
}

ExponentMatrix::ExponentMatrix(std::size_t m, std::size_t n, std::uint32_t s)
    : m_(m), n_(n), s_(s), entries_(m * n, absent_entry) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("ExponentMatrix: dimensions must be positive");
  if (s < 1 || s > max_modulus)
    throw std::invalid_argument("ExponentMatrix: circulant size out of range");
}

void ExponentMatrix::set(std::size_t i, std::size_t j, int v) {
  if (v != absent_entry && (v < 0 || static_cast<std::uint32_t>(v) >= s_))
    throw std::invalid_argument("ExponentMatrix: exponent " +
                                std::to_string(v) + " out of range [0, " +
                                std::to_string(s_) + ")");
  entries_[i * n_ + j] = v;
}

WeightMatrix ExponentMatrix::weight_matrix() const {
  WeightMatrix wm(m_, n_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      wm.set(i, j, entries_[i * n_ + j] == absent_entry ? 0 : 1);
  return wm;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::uint32_t s)
    : rows_(rows), cols_(cols), s_(s), entries_(rows * cols, CyclicPoly(s)) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("PolyMatrix: dimensions must be positive");
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> row_idx,
                                 std::span<const std::size_t> col_idx) const {
  PolyMatrix out(row_idx.size(), col_idx.size(), s_);
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      out.at(i, j) = at(row_idx[i], col_idx[j]);
  return out;
}

PolyMatrix PolyMatrix::drop_column(std::size_t j) const {
  if (cols_ < 2) throw std::invalid_argument("PolyMatrix: cannot drop column");
  PolyMatrix out(rows_, cols_ - 1, s_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::size_t t = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c == j) continue;
      out.at(i, t++) = at(i, c);
    }
  }
  return out;
}

CodewordPoly::CodewordPoly(std::size_t n, std::uint32_t s)
    : s_(s), blocks_(n, CyclicPoly(s)) {
  if (n < 1)
    throw std::invalid_argument("CodewordPoly: need at least one block");
}

CodewordPoly::CodewordPoly(std::vector<CyclicPoly> blocks)
    : s_(blocks.empty() ? 0 : blocks.front().modulus()),
      blocks_(std::move(blocks)) {
  if (blocks_.empty())
    throw std::invalid_argument("CodewordPoly: need at least one block");
  for (const auto& b : blocks_)
    if (b.modulus() != s_)
      throw std::invalid_argument("CodewordPoly: blocks with mixed moduli");
}

std::size_t CodewordPoly::weight() const {
  std::size_t w = 0;
  for (const auto& b : blocks_) w += b.weight();
  return w;
}

bool CodewordPoly::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

BitVector CodewordPoly::flatten() const {
  BitVector v(blocks_.size() * s_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (std::uint32_t t : blocks_[i].support())
      v.set(i * s_ + t);
  return v;
}

CodewordPoly CodewordPoly::unflatten(const BitVector& bits, std::size_t n,
                                     std::uint32_t s) {
  if (bits.size() != n * s)
    throw std::invalid_argument("CodewordPoly: flat length != n*s");
  CodewordPoly c(n, s);
  for (std::size_t i = 0; i < n; ++i) {
    CyclicPoly p(s);
    for (std::uint32_t t = 0; t < s; ++t)
      if (bits.get(i * s + t)) p += CyclicPoly::monomial(s, t);
    c.at(i) = p;
  }
  return c;
}

CodewordPoly CodewordPoly::shifted(std::uint32_t t) const {
  CodewordPoly out(blocks_.size(), s_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    out.at(i) = blocks_[i].shifted(t);
  return out;
}

std::string CodewordPoly::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) out += ", ";
    out += blocks_[i].to_string();
  }
  return out + ")";
}

std::size_t DegreeDistribution::total_columns() const {
  std::size_t n = 0;
  for (const auto& [w, cnt] : counts) n += cnt;
  return n;
}

std::string DegreeDistribution::to_string() const {
  if (counts.empty()) return "0";
  std::string out;
  for (const auto& [w, cnt] : counts) {
    if (!out.empty()) out += "+";
    out += std::to_string(cnt) + "x^" + std::to_string(w);
  }
  return out;
}

WeightMatrix weight_of(const ExponentMatrix& em) {
  return em.weight_matrix();
}

BinaryMatrix expand(const ExponentMatrix& em) {
  const std::size_t m = em.rows(), n = em.cols();
  const std::uint32_t s = em.modulus();
  BinaryMatrix bm(m * s, n * s);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int a = em.get(i, j);
      if (a == absent_entry) continue;
      for (std::uint32_t r = 0; r < s; ++r) {
        const std::uint32_t c =
            (r + s - static_cast<std::uint32_t>(a)) % s;  // (r - c) mod s == a
        bm.set(i * s + r, j * s + c);
      }
    }
  }
  return bm;
}

ExponentMatrix collapse(const BinaryMatrix& bm, std::size_t m, std::size_t n,
                        std::uint32_t s) {
  if (bm.rows() != m * s || bm.cols() != n * s)
    throw std::invalid_argument("collapse: dimensions do not match m, n, s");
  ExponentMatrix em(m, n, s);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int exponent = absent_entry;
      for (std::uint32_t r = 0; r < s; ++r) {
        if (!bm.get(i * s + r, j * s)) continue;
        if (exponent != absent_entry)
          throw std::invalid_argument(
              "collapse: block first column has weight > 1 (not type-1)");
        exponent = static_cast<int>(r);
      }
      em.set(i, j, exponent);
    }
  }
  return em;
}

PolyMatrix to_poly_matrix(const ExponentMatrix& em) {
  PolyMatrix pm(em.rows(), em.cols(), em.modulus());
  for (std::size_t i = 0; i < em.rows(); ++i)
    for (std::size_t j = 0; j < em.cols(); ++j)
      if (!em.is_absent(i, j))
        pm.at(i, j) = CyclicPoly::monomial(
            em.modulus(), static_cast<std::uint32_t>(em.get(i, j)));
  return pm;
}

PolyMatrix select_columns(const ExponentMatrix& em,
                          std::span<const std::size_t> cols) {
  PolyMatrix pm(em.rows(), cols.size(), em.modulus());
  for (std::size_t i = 0; i < em.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= em.cols())
        throw std::invalid_argument("select_columns: index out of range");
      if (!em.is_absent(i, cols[j]))
        pm.at(i, j) = CyclicPoly::monomial(
            em.modulus(), static_cast<std::uint32_t>(em.get(i, cols[j])));
    }
  return pm;
}

std::vector<CyclicPoly> syndrome(const ExponentMatrix& em,
                                 const CodewordPoly& c) {
  if (c.block_count() != em.cols())
    throw std::invalid_argument("syndrome: codeword has " +
                                std::to_string(c.block_count()) +
                                " blocks, matrix has " +
                                std::to_string(em.cols()) + " columns");
  if (c.modulus() != em.modulus())
    throw std::invalid_argument("syndrome: modulus mismatch");
  const std::uint32_t s = em.modulus();
  std::vector<CyclicPoly> out(em.rows(), CyclicPoly(s));
  for (std::size_t i = 0; i < em.rows(); ++i)
    for (std::size_t j = 0; j < em.cols(); ++j) {
      const int a = em.get(i, j);
      if (a == absent_entry) continue;
      out[i] += c.at(j).shifted(static_cast<std::uint32_t>(a));
    }
  return out;
}

bool syndrome_consistency_check(const ExponentMatrix& em,
                                const CodewordPoly& c) {
  bool poly_zero = true;
  for (const auto& row : syndrome(em, c))
    if (!row.is_zero()) {
      poly_zero = false;
      break;
    }
  const bool binary_zero = expand(em).multiply(c.flatten()).is_zero();
  if (poly_zero != binary_zero)
    throw std::logic_error(
        "syndrome_consistency_check: polynomial and binary paths disagree");
  return poly_zero;
}

Rational design_rate(const WeightMatrix& wm) {
  return Rational(1) + Rational(-static_cast<std::int64_t>(wm.rows()),
                                static_cast<std::int64_t>(wm.cols()));
}

ColumnSortResult sort_columns_ascending(const WeightMatrix& wm) {
  const auto weights = wm.column_weights();
  std::vector<std::size_t> perm(wm.cols());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return weights[a] < weights[b];
  });
  WeightMatrix sorted(wm.rows(), wm.cols());
  for (std::size_t t = 0; t < wm.cols(); ++t)
    for (std::size_t i = 0; i < wm.rows(); ++i)
      sorted.set(i, t, wm.get(i, perm[t]));
  return {std::move(sorted), std::move(perm)};
}

DegreeDistribution degree_distribution(const WeightMatrix& wm) {
  DegreeDistribution dd;
  for (std::size_t j = 0; j < wm.cols(); ++j) ++dd.counts[wm.column_weight(j)];
  return dd;
}

Rational avg_weight(const WeightMatrix& sorted_wm, std::size_t t1,
                    std::size_t t2) {
  const std::size_t n = sorted_wm.cols();
  if (t1 < 1 || t2 > n) throw std::invalid_argument("avg_weight: index out of range");
  if (t2 <= t1) throw std::invalid_argument("avg_weight: need t1 < t2");
  const auto weights = sorted_wm.column_weights();
  if (!std::is_sorted(weights.begin(), weights.end()))
    throw std::invalid_argument("avg_weight: columns not sorted ascending");
  std::int64_t sum = 0;
  for (std::size_t t = t1; t <= t2; ++t)
    sum += static_cast<std::int64_t>(weights[t - 1]);
  return Rational(sum, static_cast<std::int64_t>(t2 - t1 + 1));
}

ExponentMatrix instantiate_random(const WeightMatrix& wm, std::uint32_t s,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ExponentMatrix em(wm.rows(), wm.cols(), s);
  // modulo reduction, not uniform_int_distribution: the latter's output is
  // not fixed by the standard and seeds must reproduce across platforms
  for (std::size_t i = 0; i < wm.rows(); ++i)
    for (std::size_t j = 0; j < wm.cols(); ++j)
      if (wm.get(i, j)) em.set(i, j, static_cast<int>(rng() % s));
  return em;
}

}  // namespace qcldpc
