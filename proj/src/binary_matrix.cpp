#include "qcldpc/binary_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qcldpc {

void BitVector::xor_with(const BitVector& o) {
  if (o.size_ != size_)
    throw std::invalid_argument("BitVector: size mismatch in xor");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool BitVector::is_zero() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
      data_(rows * wpr_, 0) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("BinaryMatrix: dimensions must be positive");
}

void BinaryMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  for (std::size_t i = 0; i < wpr_; ++i)
    data_[dst * wpr_ + i] ^= data_[src * wpr_ + i];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < wpr_; ++i)
    std::swap(data_[a * wpr_ + i], data_[b * wpr_ + i]);
}

BitVector BinaryMatrix::row_copy(std::size_t r) const {
  BitVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    if (get(r, c)) v.set(c);
  return v;
}

bool BinaryMatrix::row_dot(std::size_t r, const BitVector& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("BinaryMatrix: vector length mismatch");
  std::uint64_t acc = 0;
  const auto words = v.words();
  for (std::size_t i = 0; i < wpr_; ++i)
    acc ^= data_[r * wpr_ + i] & words[i];
  return std::popcount(acc) & 1u;
}

BitVector BinaryMatrix::multiply(const BitVector& v) const {
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (row_dot(r, v)) out.set(r);
  return out;
}

}  // namespace qcldpc
