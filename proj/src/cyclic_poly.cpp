#include "qcldpc/cyclic_poly.hpp"

#include <bit>
#include <stdexcept>

namespace qcldpc {

namespace {

void check_modulus(std::uint32_t s) {
  if (s < 1)
    throw std::invalid_argument("CyclicPoly: modulus must be >= 1");
  if (s > max_modulus)
    throw std::invalid_argument("CyclicPoly: modulus " + std::to_string(s) +
                                " exceeds build cap " +
                                std::to_string(max_modulus));
}

void check_same_modulus(std::uint32_t a, std::uint32_t b) {
  if (a != b)
    throw std::invalid_argument("CyclicPoly: modulus mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
}

}  // namespace

CyclicPoly::CyclicPoly(std::uint32_t s) : s_(s), bits_{} { check_modulus(s); }

CyclicPoly CyclicPoly::monomial(std::uint32_t s, std::uint32_t a) {
  CyclicPoly p(s);
  if (a >= s)
    throw std::invalid_argument("CyclicPoly: exponent " + std::to_string(a) +
                                " out of range [0, " + std::to_string(s) + ")");
  p.set_bit(a);
  return p;
}

CyclicPoly CyclicPoly::all_ones(std::uint32_t s) {
  CyclicPoly p(s);
  for (std::uint32_t e = 0; e < s; ++e) p.set_bit(e);
  return p;
}

CyclicPoly CyclicPoly::from_support(std::uint32_t s,
                                    const std::vector<std::uint32_t>& exps) {
  CyclicPoly p(s);
  for (std::uint32_t e : exps) {
    if (e >= s)
      throw std::invalid_argument("CyclicPoly: exponent " + std::to_string(e) +
                                  " out of range [0, " + std::to_string(s) +
                                  ")");
    if (p.test_bit(e))
      throw std::invalid_argument("CyclicPoly: duplicate exponent " +
                                  std::to_string(e) + " in support");
    p.set_bit(e);
  }
  return p;
}

bool CyclicPoly::is_zero() const {
  for (std::uint64_t w : bits_)
    if (w != 0) return false;
  return true;
}

std::uint32_t CyclicPoly::weight() const {
  std::uint32_t w = 0;
  for (std::uint64_t word : bits_) w += std::popcount(word);
  return w;
}

bool CyclicPoly::coeff(std::uint32_t e) const {
  if (e >= s_)
    throw std::invalid_argument("CyclicPoly: exponent out of range");
  return test_bit(e);
}

std::vector<std::uint32_t> CyclicPoly::support() const {
  std::vector<std::uint32_t> out;
  for (std::size_t wi = 0; wi < kWords; ++wi) {
    std::uint64_t w = bits_[wi];
    while (w != 0) {
      out.push_back(static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

CyclicPoly::Words CyclicPoly::rotated(const Words& v, std::uint32_t k) const {
  if (k == 0) return v;
  Words out{};
  // high part: v << k, trimmed to s_ bits
  const std::uint32_t wk = k >> 6, bk = k & 63;
  for (std::size_t i = kWords; i-- > wk;) {
    std::uint64_t w = v[i - wk] << bk;
    if (bk != 0 && i - wk >= 1) w |= v[i - wk - 1] >> (64 - bk);
    out[i] = w;
  }
  // trim bits at positions >= s_
  const std::uint32_t last = (s_ - 1) >> 6;
  if ((s_ & 63) != 0)
    out[last] &= (std::uint64_t{1} << (s_ & 63)) - 1;
  for (std::size_t i = last + 1; i < kWords; ++i) out[i] = 0;
  // wrapped part: v >> (s_ - k); supports are disjoint, OR is exact
  const std::uint32_t r = s_ - k;
  const std::uint32_t wr = r >> 6, br = r & 63;
  for (std::size_t i = 0; i + wr < kWords; ++i) {
    std::uint64_t w = v[i + wr] >> br;
    if (br != 0 && i + wr + 1 < kWords) w |= v[i + wr + 1] << (64 - br);
    out[i] |= w;
  }
  return out;
}

CyclicPoly CyclicPoly::shifted(std::uint32_t t) const {
  if (t >= s_)
    throw std::invalid_argument("CyclicPoly: shift out of range [0, s)");
  CyclicPoly p(s_);
  p.bits_ = rotated(bits_, t);
  return p;
}

CyclicPoly& CyclicPoly::operator+=(const CyclicPoly& o) {
  check_same_modulus(s_, o.s_);
  for (std::size_t i = 0; i < kWords; ++i) bits_[i] ^= o.bits_[i];
  return *this;
}

CyclicPoly& CyclicPoly::operator*=(const CyclicPoly& o) {
  check_same_modulus(s_, o.s_);
  Words acc{};
  for (std::size_t wi = 0; wi < kWords; ++wi) {
    std::uint64_t w = bits_[wi];
    while (w != 0) {
      const std::uint32_t e =
          static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w));
      w &= w - 1;
      const Words term = rotated(o.bits_, e);
      for (std::size_t i = 0; i < kWords; ++i) acc[i] ^= term[i];
    }
  }
  bits_ = acc;
  return *this;
}

std::string CyclicPoly::to_string() const {
  const auto exps = support();
  if (exps.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i > 0) out += "+";
    if (exps[i] == 0)
      out += "1";
    else if (exps[i] == 1)
      out += "x";
    else
      out += "x^" + std::to_string(exps[i]);
  }
  return out;
}

}  // namespace qcldpc
