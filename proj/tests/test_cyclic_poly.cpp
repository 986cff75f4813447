#include "qcldpc/cyclic_poly.hpp"

#include "doctest.h"
#include "support.hpp"

using qcldpc::CyclicPoly;
using qcldpc::testing::Rng;
using qcldpc::testing::random_poly;

namespace {
CyclicPoly poly(std::uint32_t s, std::vector<std::uint32_t> exps) {
  return CyclicPoly::from_support(s, exps);
}
}  // namespace

TEST_CASE("addition is coefficientwise XOR") {
  CHECK(poly(3, {0, 2}) + poly(3, {0, 2}) == CyclicPoly(3));
  CHECK(poly(3, {1}) + poly(3, {2}) == poly(3, {1, 2}));
  CHECK(poly(3, {0, 1}) + poly(3, {1, 2}) == poly(3, {0, 2}));
  CHECK_THROWS_AS(poly(3, {1}) + poly(4, {1}), std::invalid_argument);
}

TEST_CASE("multiplication is cyclic convolution") {
  // x^2 * x^2 = x^4 = x mod (x^3 - 1)
  CHECK(poly(3, {2}) * poly(3, {2}) == poly(3, {1}));
  // x * (1 + x + x^2) = 1 + x + x^2
  CHECK(poly(3, {1}) * poly(3, {0, 1, 2}) == poly(3, {0, 1, 2}));
  // (1 + x)^2 = 1 + x^2 over F2
  CHECK(poly(4, {0, 1}) * poly(4, {0, 1}) == poly(4, {0, 2}));
  CHECK_THROWS_AS(poly(3, {1}) * poly(4, {1}), std::invalid_argument);
}

TEST_CASE("all_ones") {
  CHECK(CyclicPoly::all_ones(3) == poly(3, {0, 1, 2}));
  CHECK(CyclicPoly::all_ones(1) == poly(1, {0}));
  CHECK(CyclicPoly::all_ones(5) == poly(5, {0, 1, 2, 3, 4}));
  CHECK_THROWS_AS(CyclicPoly::all_ones(0), std::invalid_argument);
}

TEST_CASE("monomial") {
  CHECK(CyclicPoly::monomial(3, 2) == poly(3, {2}));
  CHECK(CyclicPoly::monomial(3, 0) == poly(3, {0}));
  CHECK(CyclicPoly::monomial(7, 6) == poly(7, {6}));
  CHECK_THROWS_AS(CyclicPoly::monomial(3, 3), std::invalid_argument);
}

TEST_CASE("weight counts the support") {
  CHECK(poly(3, {0, 1, 2}).weight() == 3);
  CHECK(CyclicPoly(5).weight() == 0);
  CHECK(poly(3, {2}).weight() == 1);
}

TEST_CASE("modulus cap is enforced") {
  CHECK_NOTHROW(CyclicPoly(qcldpc::max_modulus));
  CHECK_THROWS_AS(CyclicPoly(qcldpc::max_modulus + 1), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(0x5eed001);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = static_cast<std::uint32_t>(1 + rng.pick(32));
    const auto a = random_poly(rng, s);
    const auto b = random_poly(rng, s);
    const auto c = random_poly(rng, s);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("all-ones absorbs odd weights and kills even ones") {
  Rng rng(0x5eed002);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = static_cast<std::uint32_t>(1 + rng.pick(24));
    const auto a = random_poly(rng, s);
    const auto f = CyclicPoly::all_ones(s);
    if (a.weight() % 2 == 1)
      CHECK(a * f == f);
    else
      CHECK((a * f).is_zero());
  }
}

TEST_CASE("weight bounds under add and mul") {
  Rng rng(0x5eed003);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = static_cast<std::uint32_t>(1 + rng.pick(32));
    const auto a = random_poly(rng, s);
    const auto b = random_poly(rng, s);
    CHECK((a + b).weight() <= a.weight() + b.weight());
    CHECK((a * b).weight() <= a.weight() * b.weight());
  }
}

TEST_CASE("monomial exponents add modulo s") {
  for (std::uint32_t s : {1u, 2u, 5u, 7u, 64u, 65u}) {
    for (std::uint32_t i = 0; i < s; ++i)
      for (std::uint32_t j = 0; j < s; ++j)
        CHECK(CyclicPoly::monomial(s, i) * CyclicPoly::monomial(s, j) ==
              CyclicPoly::monomial(s, (i + j) % s));
  }
}

TEST_CASE("shifted equals multiplication by a monomial") {
  Rng rng(0x5eed004);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = static_cast<std::uint32_t>(1 + rng.pick(100));
    const auto a = random_poly(rng, s);
    const auto t = static_cast<std::uint32_t>(rng.pick(s));
    CHECK(a.shifted(t) == a * CyclicPoly::monomial(s, t));
  }
}

TEST_CASE("rendering matches the matrix notation") {
  CHECK(CyclicPoly(4).to_string() == "0");
  CHECK(poly(3, {0}).to_string() == "1");
  CHECK(poly(3, {1}).to_string() == "x");
  CHECK(poly(3, {2}).to_string() == "x^2");
  CHECK(poly(3, {0, 1, 2}).to_string() == "1+x+x^2");
}

TEST_CASE("from_support rejects duplicates and range violations") {
  CHECK_THROWS_AS(poly(3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(poly(3, {3}), std::invalid_argument);
}

TEST_CASE("large-modulus arithmetic near the word boundaries") {
  // weight-2 squares: (x^a + x^b)^2 = x^2a + x^2b
  const std::uint32_t s = 130;
  const auto p = poly(s, {63, 64});
  CHECK(p * p == poly(s, {126, 128}));
  const auto q = poly(s, {129});
  CHECK(q * q == poly(s, {128}));
  CHECK(q * poly(s, {1}) == poly(s, {0}));
}
