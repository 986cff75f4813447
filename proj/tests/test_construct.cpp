#include "qcldpc/construct.hpp"

#include "doctest.h"
#include "qcldpc/bounds.hpp"
#include "qcldpc/oracle.hpp"
#include "support.hpp"

using namespace qcldpc;
using testing::Rng;
using testing::example1;

namespace {

CyclicPoly poly(std::uint32_t s, std::vector<std::uint32_t> exps) {
  return CyclicPoly::from_support(s, exps);
}

// [[x^2, x], [0, x^2]] over s = 3
PolyMatrix example1_minor() {
  PolyMatrix pm(2, 2, 3);
  pm.at(0, 0) = poly(3, {2});
  pm.at(0, 1) = poly(3, {1});
  pm.at(1, 1) = poly(3, {2});
  return pm;
}

}  // namespace

TEST_CASE("determinant of small matrices") {
  CHECK(det(example1_minor()) == poly(3, {1}));  // x^4 = x mod (x^3 - 1)

  PolyMatrix one(1, 1, 5);
  one.at(0, 0) = poly(5, {0, 3});
  CHECK(det(one) == poly(5, {0, 3}));

  CHECK_THROWS_AS(det(PolyMatrix(2, 3, 4)), std::invalid_argument);
  CHECK_THROWS_AS(det(PolyMatrix(13, 13, 2)), std::invalid_argument);
}

TEST_CASE("identical rows force a zero determinant") {
  Rng rng(0x5eed020);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t q = 2 + rng.pick(3);
    const auto s = static_cast<std::uint32_t>(1 + rng.pick(12));
    auto pm = testing::random_poly_matrix(rng, q, q, s);
    const std::size_t src = rng.pick(q);
    std::size_t dst = rng.pick(q - 1);
    if (dst >= src) ++dst;
    for (std::size_t j = 0; j < q; ++j) pm.at(dst, j) = pm.at(src, j);
    CHECK(det(pm).is_zero());
    CHECK(oracle::det_cofactor_oracle(pm).is_zero());
  }
}

TEST_CASE("permutation expansion agrees with the cofactor oracle") {
  Rng rng(0x5eed021);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t q = 1 + rng.pick(4);
    const auto s = static_cast<std::uint32_t>(1 + rng.pick(16));
    const auto pm = testing::random_poly_matrix(rng, q, q, s);
    CHECK(det(pm) == oracle::det_cofactor_oracle(pm));
  }
}

TEST_CASE("row swaps do not change the determinant over F2") {
  Rng rng(0x5eed022);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t q = 2 + rng.pick(3);
    const auto s = static_cast<std::uint32_t>(1 + rng.pick(12));
    const auto pm = testing::random_poly_matrix(rng, q, q, s);
    std::vector<std::size_t> rows(q), cols(q);
    for (std::size_t i = 0; i < q; ++i) rows[i] = cols[i] = i;
    std::swap(rows[rng.pick(q)], rows[rng.pick(q)]);
    CHECK(det(pm) == det(pm.submatrix(rows, cols)));
  }
}

TEST_CASE("determinant weight is bounded by column weight-sum products") {
  Rng rng(0x5eed023);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t q = 1 + rng.pick(4);
    const auto s = static_cast<std::uint32_t>(1 + rng.pick(12));
    const auto pm = testing::random_poly_matrix(rng, q, q, s);
    std::uint64_t cap = 1;
    for (std::size_t j = 0; j < q; ++j) {
      std::uint64_t col_sum = 0;
      for (std::size_t i = 0; i < q; ++i) col_sum += pm.at(i, j).weight();
      cap *= col_sum;
    }
    CHECK(det(pm).weight() <= cap);
  }
}

TEST_CASE("codeword of determinants for the reference matrix") {
  const auto word = determinant_codeword(example1(), {0, 1, 2});
  CHECK(word.at(0) == poly(3, {1}));
  CHECK(word.at(1) == poly(3, {1}));
  CHECK(word.at(2) == poly(3, {2}));
  CHECK(syndrome_consistency_check(example1(), word));
}

TEST_CASE("determinant codewords always have zero syndrome") {
  Rng rng(0x5eed024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng.pick(4);
    const std::size_t n = m + 1 + rng.pick(4);
    const auto s = static_cast<std::uint32_t>(2 + rng.pick(15));
    const auto em = testing::random_exponent_matrix(rng, m, n, s, false);
    const auto J = testing::random_subset(rng, n, m + 1);
    CHECK(syndrome_consistency_check(em, determinant_codeword(em, J)));
  }
}

TEST_CASE("duplicated rows still give zero-syndrome (zero) words") {
  Rng rng(0x5eed025);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 2 + rng.pick(3);
    const std::size_t n = m + 1 + rng.pick(3);
    const auto s = static_cast<std::uint32_t>(2 + rng.pick(7));
    const auto em = testing::random_degenerate_matrix(rng, m, n, s);
    const auto J = testing::random_subset(rng, n, m + 1);
    const auto word = determinant_codeword(em, J);
    CHECK(word.is_zero());  // every full-order minor has two identical rows
    CHECK(syndrome_consistency_check(em, word));
  }
}

TEST_CASE("column-set validation") {
  CHECK_THROWS_AS(determinant_codeword(example1(), {0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(determinant_codeword(example1(), {0, 1, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(determinant_codeword(example1(), {0, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("maximal nonzero minor search") {
  const auto hj = select_columns(example1(), std::vector<std::size_t>{0, 1, 2});
  const auto mm = max_nonzero_minor(hj);
  REQUIRE(mm.has_value());
  CHECK(mm->order == 2);
  // lexicographically first witness: rows {0,1}, first nonzero column pair
  CHECK(mm->sel.rows == std::vector<std::size_t>{0, 1});
  CHECK(mm->sel.cols == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(det(hj.submatrix(mm->sel.rows, mm->sel.cols)).is_zero());

  CHECK_FALSE(max_nonzero_minor(PolyMatrix(2, 2, 4)).has_value());

  PolyMatrix single(1, 1, 3);
  single.at(0, 0) = poly(3, {1});
  const auto one = max_nonzero_minor(single);
  REQUIRE(one.has_value());
  CHECK(one->order == 1);
}

TEST_CASE("nonzero construction on the straightforward path") {
  const auto built = construct_nonzero_codeword(example1(), {0, 1, 2});
  CHECK_FALSE(built.via_fallback);
  CHECK(built.word.to_string() == "(x, x, x^2)");
  CHECK(built.word.weight() == 3);
}

TEST_CASE("fallback with a single nonzero entry") {
  // 2x3 matrix with one monomial at (0,0): all order-2 minors vanish, the
  // maximal nonzero minor is 1x1, and the built word pairs it with the next
  // column position
  ExponentMatrix em(2, 3, 4);
  em.set(0, 0, 3);
  const auto built = construct_nonzero_codeword(em, {0, 1, 2});
  CHECK(built.via_fallback);
  CHECK(built.minor_order == 1);
  CHECK_FALSE(built.word.is_zero());
  CHECK(built.word.at(1) == poly(4, {3}));
  CHECK(built.word.at(0).is_zero());
  CHECK(built.word.at(2).is_zero());
  CHECK(syndrome_consistency_check(em, built.word));
}

TEST_CASE("fallback on degenerate instances built by row duplication") {
  Rng rng(0x5eed026);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 2 + rng.pick(3);
    const std::size_t n = m + 1 + rng.pick(3);
    const auto s = static_cast<std::uint32_t>(2 + rng.pick(7));
    const auto em = testing::random_degenerate_matrix(rng, m, n, s);
    const auto sorted = sort_columns_ascending(em.weight_matrix());
    std::vector<std::size_t> J(sorted.perm.begin(),
                               sorted.perm.begin() + m + 1);
    const auto built = construct_nonzero_codeword(em, J);
    CHECK(built.via_fallback);
    CHECK(built.minor_order < m);
    CHECK_FALSE(built.word.is_zero());
    CHECK(syndrome_consistency_check(em, built.word));
  }
}

TEST_CASE("construction rejects columns that are identically zero") {
  ExponentMatrix em(1, 2, 3);  // both entries absent
  CHECK_THROWS_AS(construct_nonzero_codeword(em, {0, 1}), construction_error);
}

TEST_CASE("fallback syndrome rows equal higher-order minors of the host") {
  // append any host row to the r x (r+1) fallback matrix: the resulting
  // (r+1)-order determinant is exactly that row's syndrome contribution
  Rng rng(0x5eed027);
  int exercised = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + rng.pick(2);
    const std::size_t n = m + 1 + rng.pick(3);
    const auto s = static_cast<std::uint32_t>(2 + rng.pick(7));
    const auto em = testing::random_degenerate_matrix(rng, m, n, s);
    std::vector<std::size_t> J = testing::random_subset(rng, n, m + 1);
    const auto hj = select_columns(em, J);
    const auto mm = max_nonzero_minor(hj);
    if (!mm || mm->order >= m) continue;
    std::vector<std::size_t> extended = mm->sel.cols;
    for (std::size_t pos = 0; pos < hj.cols(); ++pos)
      if (std::find(extended.begin(), extended.end(), pos) == extended.end()) {
        extended.push_back(pos);
        break;
      }
    std::sort(extended.begin(), extended.end());
    const auto sub = hj.submatrix(mm->sel.rows, extended);
    std::vector<CyclicPoly> deltas;
    for (std::size_t idx = 0; idx < extended.size(); ++idx)
      deltas.push_back(det(sub.drop_column(idx)));
    for (std::size_t host_row = 0; host_row < m; ++host_row) {
      // syndrome of the embedded word against this row
      CyclicPoly acc(s);
      for (std::size_t idx = 0; idx < extended.size(); ++idx)
        acc += hj.at(host_row, extended[idx]) * deltas[idx];
      // the (r+1)x(r+1) determinant with the host row stacked on top
      std::vector<std::size_t> rows = {host_row};
      rows.insert(rows.end(), mm->sel.rows.begin(), mm->sel.rows.end());
      PolyMatrix stacked(mm->order + 1, mm->order + 1, s);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < extended.size(); ++j)
          stacked.at(i, j) = hj.at(rows[i], extended[j]);
      CHECK(acc == det(stacked));
      CHECK(acc.is_zero());  // maximality of r
      ++exercised;
    }
  }
  CHECK(exercised > 0);
}

TEST_CASE("determinant-codeword weights respect the term-count cap") {
  Rng rng(0x5eed028);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + rng.pick(2);
    const std::size_t n = m + 1 + rng.pick(3);
    const auto s = static_cast<std::uint32_t>(2 + rng.pick(15));
    const auto em = testing::random_exponent_matrix(rng, m, n, s, true);
    const auto report = det_bound(em.weight_matrix());
    const std::uint64_t per_delta =
        report.bound_product / (m + 1);  // k! * prod l_j
    const auto sorted = sort_columns_ascending(em.weight_matrix());
    std::vector<std::size_t> J(sorted.perm.begin(),
                               sorted.perm.begin() + m + 1);
    std::sort(J.begin(), J.end());
    const auto word = determinant_codeword(em, J);
    for (std::size_t j : J) CHECK(word.at(j).weight() <= per_delta);
  }
}
