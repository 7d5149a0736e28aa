// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "waring/errors.hpp"
#include "waring/matrix.hpp"
#include "waring/residue_ring.hpp"

namespace waring {
namespace {

const MonogenicOrder kZ = MonogenicOrder::integers();

MatrixOverOrder int_matrix(const MonogenicOrder& o, std::size_t n, std::initializer_list<long> v) {
  std::vector<OrderElement> e;
  for (long x : v) e.push_back(o.from_integer(Integer(x)));
  return MatrixOverOrder(n, std::move(e));
}

MatrixOverOrder random_matrix(const MonogenicOrder& o, std::size_t n, std::mt19937_64& rng, long bound) {
  std::vector<OrderElement> e;
  for (std::size_t i = 0; i < n * n; ++i) {
    std::vector<Integer> c(o.degree());
    for (auto& x : c) x = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    e.push_back(o.element(c));
  }
  return MatrixOverOrder(n, std::move(e));
}

TEST(Matrix, SpecExamples) {
  const auto I = MatrixOverOrder::identity(kZ, 2);
  EXPECT_EQ(mat_mul(kZ, I, I), I);
  const auto B = int_matrix(kZ, 2, {2, -1, 1, 0});
  EXPECT_EQ(mat_power(kZ, B, 3), int_matrix(kZ, 2, {4, -3, 3, -2}));
  const auto A = int_matrix(kZ, 2, {1, 2, 3, 4});
  const auto Z0 = MatrixOverOrder::zero(kZ, 2);
  EXPECT_EQ(mat_mul(kZ, A, Z0), Z0);
  EXPECT_EQ(mat_power(kZ, A, 0), I);
}

TEST(Matrix, DimensionMismatch) {
  const auto A = MatrixOverOrder::identity(kZ, 2);
  const auto B = MatrixOverOrder::identity(kZ, 3);
  try {
    mat_mul(kZ, A, B);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(CharPoly, SpecExamples) {
  const auto o = MonogenicOrder::quadratic({5, 1});
  const auto t = o.element({3, 1}), d = o.element({-2, 5});
  const MatrixOverOrder comp(2, {t, o.neg(d), o.one(), o.zero()});
  EXPECT_EQ(char_poly(o, comp), (CharPolyCoeffs<MonogenicOrder>{t, d}));
  EXPECT_EQ(char_poly(kZ, MatrixOverOrder::identity(kZ, 2)),
            (CharPolyCoeffs<MonogenicOrder>{kZ.from_int(2), kZ.from_int(1)}));
  const auto diag = int_matrix(kZ, 3, {2, 0, 0, 0, -3, 0, 0, 0, 5});
  EXPECT_EQ(char_poly(kZ, diag),
            (CharPolyCoeffs<MonogenicOrder>{kZ.from_int(4), kZ.from_int(-6 + 10 - 15), kZ.from_int(-30)}));
}

TEST(CharPoly, MatchesLeibnizMinors) {
  std::mt19937_64 rng(21);
  const auto o = MonogenicOrder::from_min_poly({-2, 0, 0});
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_matrix(o, n, rng, 4);
      EXPECT_EQ(char_poly(o, m), oracle::leibniz_char_coeffs(o, m.entries(), n));
    }
  const ResidueRing r(MonogenicOrder::quadratic({-1, 1}), 24);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ResidueElement> e;
    for (int i = 0; i < 9; ++i) e.push_back(r.element_at(rng() % r.size()));
    const Matrix<ResidueRing> m(3, e);
    EXPECT_EQ(char_poly(r, m), oracle::leibniz_char_coeffs(r, e, 3));
  }
}

TEST(Companion, SpecExamples) {
  const auto t = kZ.from_int(7), d = kZ.from_int(-3);
  EXPECT_EQ(companion(kZ, CharPolyCoeffs<MonogenicOrder>{t, d}), int_matrix(kZ, 2, {7, 3, 1, 0}));
  const auto shift = companion(kZ, CharPolyCoeffs<MonogenicOrder>(3, kZ.zero()));
  EXPECT_EQ(mat_power(kZ, shift, 3), MatrixOverOrder::zero(kZ, 3));
  EXPECT_NE(mat_power(kZ, shift, 2), MatrixOverOrder::zero(kZ, 3));
  const CharPolyCoeffs<MonogenicOrder> e{kZ.from_int(1), kZ.from_int(0), kZ.from_int(2)};
  EXPECT_EQ(char_poly(kZ, companion(kZ, e)), e);  // X^3 - X^2 - 2
}

TEST(PowerSums, SpecExamples) {
  auto p = [&](long t, long d, unsigned k) {
    return power_sum_newton(kZ, CharPolyCoeffs<MonogenicOrder>{kZ.from_int(t), kZ.from_int(d)}, k);
  };
  EXPECT_EQ(p(2, 1, 3), kZ.from_int(2));
  EXPECT_EQ(p(1, 0, 3), kZ.from_int(1));
  EXPECT_EQ(p(0, 1, 4), kZ.from_int(2));
  EXPECT_EQ(power_sum_newton(kZ, CharPolyCoeffs<MonogenicOrder>(3, kZ.one()), 3), kZ.from_int(1));
  EXPECT_EQ(trace_power_closed_2x2(kZ, kZ.from_int(2), kZ.from_int(1), 3), kZ.from_int(2));
  EXPECT_THROW(trace_power_closed_2x2(kZ, kZ.one(), kZ.one(), 5), Error);
}

TEST(PowerSums, SymbolicIdentities) {
  const oracle::BiPolyRing ring;
  const auto t = ring.monomial(1, 0, 1), d = ring.monomial(0, 1, 1);
  const CharPolyCoeffs<oracle::BiPolyRing> e{t, d};
  oracle::BiPoly cube;  // t^3 - 3 t D
  cube.terms = {{{3, 0}, 1}, {{1, 1}, -3}};
  oracle::BiPoly fourth;  // t^4 - 4 t^2 D + 2 D^2
  fourth.terms = {{{4, 0}, 1}, {{2, 1}, -4}, {{0, 2}, 2}};
  EXPECT_EQ(power_sum_newton(ring, e, 3), cube);
  EXPECT_EQ(power_sum_newton(ring, e, 4), fourth);
  EXPECT_EQ(trace_power_closed_2x2(ring, t, d, 3), cube);
  EXPECT_EQ(trace_power_closed_2x2(ring, t, d, 4), fourth);
  // The companion matrix over the polynomial ring gives the same traces.
  const auto c = companion(ring, e);
  EXPECT_EQ(mat_trace(ring, mat_power(ring, c, 3)), cube);
  EXPECT_EQ(mat_trace(ring, mat_power(ring, c, 4)), fourth);
}

TEST(PowerSums, EqualCompanionTraces) {
  std::mt19937_64 rng(99);
  const auto o = MonogenicOrder::quadratic({-5, 1});
  for (std::size_t n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      CharPolyCoeffs<MonogenicOrder> e;
      for (std::size_t i = 0; i < n; ++i)
        e.push_back(o.element({static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 11) - 5}));
      const auto c = companion(o, e);
      for (unsigned k = 0; k <= 8; ++k) EXPECT_EQ(power_sum_newton(o, e, k), mat_trace(o, mat_power(o, c, k)));
    }
}

}  // namespace
}  // namespace waring
