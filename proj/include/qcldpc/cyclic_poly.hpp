#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

// Modulus cap. Fixed at build configuration so the coefficient mask has a
// compile-time width and ring multiplication is shift-XOR.
#ifndef QCLDPC_MAX_S
#define QCLDPC_MAX_S 512
#endif

namespace qcldpc {

inline constexpr std::uint32_t max_modulus = QCLDPC_MAX_S;

// Element of the factor ring F2[x]/(x^s - 1). The support (set of exponents
// with coefficient 1) is stored as a bit mask indexed by exponent, so addition
// is wordwise XOR and multiplication by x^t is a cyclic shift.
//
// Values are immutable in spirit: the mutating operators return new states but
// no aliasing or shared ownership exists, so instances are freely shareable
// across threads.
class CyclicPoly {
 public:
  static constexpr std::size_t kWords = (max_modulus + 63) / 64;

  explicit CyclicPoly(std::uint32_t s);  // zero polynomial

  static CyclicPoly monomial(std::uint32_t s, std::uint32_t a);
  static CyclicPoly all_ones(std::uint32_t s);
  static CyclicPoly from_support(std::uint32_t s,
                                 const std::vector<std::uint32_t>& exps);

  std::uint32_t modulus() const { return s_; }
  bool is_zero() const;
  std::uint32_t weight() const;
  bool coeff(std::uint32_t e) const;
  std::vector<std::uint32_t> support() const;  // ascending

  // Multiplication by the monomial x^t, t in [0, s).
  CyclicPoly shifted(std::uint32_t t) const;

  CyclicPoly& operator+=(const CyclicPoly& o);
  CyclicPoly& operator*=(const CyclicPoly& o);

  friend CyclicPoly operator+(CyclicPoly a, const CyclicPoly& b) {
    return a += b;
  }
  friend CyclicPoly operator*(CyclicPoly a, const CyclicPoly& b) {
    return a *= b;
  }

  friend bool operator==(const CyclicPoly&, const CyclicPoly&) = default;

  // "0" for zero, otherwise "+"-joined terms with ascending exponents;
  // exponent 0 prints as "1", exponent 1 as "x", k as "x^k".
  std::string to_string() const;

 private:
  using Words = std::array<std::uint64_t, kWords>;

  void set_bit(std::uint32_t e) { bits_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  bool test_bit(std::uint32_t e) const {
    return (bits_[e >> 6] >> (e & 63)) & 1u;
  }

  // ((v << k) mod x^s - 1): left part masked to s bits, wrapped part ORed in.
  Words rotated(const Words& v, std::uint32_t k) const;

  std::uint32_t s_;
  Words bits_;
};

}  // namespace qcldpc
