#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcldpc {

// Exact rational on int64, always normalized: den > 0, gcd(|num|, den) == 1.
// Bound arithmetic must stay exact, so every operation range-checks and
// throws std::overflow_error instead of wrapping.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  // Smallest integer >= value.
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational& operator+=(const Rational& o) {
    assign128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    return *this;
  }

  Rational& operator*=(const Rational& o) {
    assign128(i128(num_) * o.num_, i128(den_) * o.den_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const i128 lhs = i128(a.num_) * b.den_;
    const i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational pow(unsigned e) const {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

 private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  void assign(std::int64_t n, std::int64_t d) { assign128(n, d); }

  void assign128(i128 n, i128 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i128 g = gcd128(n, d);
    if (g != 0) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = INT64_MIN;
    constexpr i128 hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("Rational: value out of 64-bit range");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("unsigned multiply overflows 64 bits");
  return r;
}

inline std::uint64_t factorial_u64(unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= k; ++i) r = checked_mul_u64(r, i);
  return r;
}

}  // namespace qcldpc
