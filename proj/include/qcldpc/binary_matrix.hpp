#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qcldpc {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n)
      : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void xor_with(const BitVector& o);
  std::size_t popcount() const;
  bool is_zero() const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Dense matrix over F2, rows packed into 64-bit words.
class BinaryMatrix {
 public:
  BinaryMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (c & 63);
    if (v)
      data_[r * wpr_ + (c >> 6)] |= m;
    else
      data_[r * wpr_ + (c >> 6)] &= ~m;
  }

  void xor_row_into(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);

  BitVector row_copy(std::size_t r) const;

  // Parity of the AND of row r with v (one F2 inner product).
  bool row_dot(std::size_t r, const BitVector& v) const;

  // Matrix-vector product over F2; v.size() must equal cols().
  BitVector multiply(const BitVector& v) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_, cols_, wpr_;
  std::vector<std::uint64_t> data_;
};

}  // namespace qcldpc
