// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "waring/errors.hpp"
#include "waring/order.hpp"
#include "waring/ring.hpp"

namespace waring {

// Square matrix over a ring context, row-major.
template <CommutativeRing Ring>
class Matrix {
 public:
  using value_type = typename Ring::value_type;

  Matrix() = default;
  Matrix(std::size_t n, std::vector<value_type> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n_ * n_) fail(ErrorCode::kDimensionMismatch, "matrix is not square");
  }

  static Matrix zero(const Ring& ring, std::size_t n) {
    return Matrix(n, std::vector<value_type>(n * n, ring.zero()));
  }
  static Matrix identity(const Ring& ring, std::size_t n) {
    Matrix m = zero(ring, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }
  static Matrix diagonal(const Ring& ring, std::span<const value_type> d) {
    Matrix m = zero(ring, d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t size() const { return n_; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  value_type& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::vector<value_type>& entries() const { return a_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<value_type> a_;
};

using MatrixOverOrder = Matrix<MonogenicOrder>;

// Signed elementary symmetric functions (e_1, ..., e_n): the characteristic
// polynomial is X^n - e_1 X^{n-1} + e_2 X^{n-2} - ... + (-1)^n e_n.
template <CommutativeRing Ring>
using CharPolyCoeffs = std::vector<typename Ring::value_type>;

namespace detail {
template <CommutativeRing Ring>
void require_same_size(const Matrix<Ring>& a, const Matrix<Ring>& b) {
  if (a.size() != b.size())
    fail(ErrorCode::kDimensionMismatch, "matrix sizes " + std::to_string(a.size()) + " and " +
                                            std::to_string(b.size()) + " differ");
}
}  // namespace detail

template <CommutativeRing Ring>
Matrix<Ring> mat_add(const Ring& ring, const Matrix<Ring>& a, const Matrix<Ring>& b) {
  detail::require_same_size(a, b);
  std::vector<typename Ring::value_type> v;
  v.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    v.push_back(ring.add(a.entries()[i], b.entries()[i]));
  return Matrix<Ring>(a.size(), std::move(v));
}

template <CommutativeRing Ring>
Matrix<Ring> mat_sub(const Ring& ring, const Matrix<Ring>& a, const Matrix<Ring>& b) {
  detail::require_same_size(a, b);
  std::vector<typename Ring::value_type> v;
  v.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    v.push_back(ring.sub(a.entries()[i], b.entries()[i]));
  return Matrix<Ring>(a.size(), std::move(v));
}

template <CommutativeRing Ring>
Matrix<Ring> mat_mul(const Ring& ring, const Matrix<Ring>& a, const Matrix<Ring>& b) {
  detail::require_same_size(a, b);
  const std::size_t n = a.size();
  Matrix<Ring> c = Matrix<Ring>::zero(ring, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        c(i, j) = ring.add(c(i, j), ring.mul(a(i, k), b(k, j)));
  return c;
}

template <CommutativeRing Ring>
Matrix<Ring> mat_power(const Ring& ring, const Matrix<Ring>& a, unsigned k) {
  Matrix<Ring> result = Matrix<Ring>::identity(ring, a.size());
  Matrix<Ring> base = a;
  while (k > 0) {
    if (k & 1U) result = mat_mul(ring, result, base);
    k >>= 1U;
    if (k > 0) base = mat_mul(ring, base, base);
  }
  return result;
}

template <CommutativeRing Ring>
typename Ring::value_type mat_trace(const Ring& ring, const Matrix<Ring>& a) {
  auto t = ring.zero();
  for (std::size_t i = 0; i < a.size(); ++i) t = ring.add(t, a(i, i));
  return t;
}

// Berkowitz's algorithm: division-free, so valid over any commutative ring.
template <CommutativeRing Ring>
CharPolyCoeffs<Ring> char_poly(const Ring& ring, const Matrix<Ring>& a) {
  using V = typename Ring::value_type;
  const std::size_t n = a.size();
  // c holds det(X I - A_r) coefficients from X^r down to X^0.
  std::vector<V> c{ring.one()};
  for (std::size_t r = 0; r < n; ++r) {
    // A_{r+1} = [[A_r, S], [R, a_rr]] with S = column r, R = row r (first r entries).
    std::vector<V> col(r + 2);
    col[0] = ring.one();
    col[1] = ring.neg(a(r, r));
    std::vector<V> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = a(i, r);
    for (std::size_t j = 2; j < r + 2; ++j) {
      // -R * A_r^{j-2} * S
      auto acc = ring.zero();
      for (std::size_t i = 0; i < r; ++i) acc = ring.add(acc, ring.mul(a(r, i), s[i]));
      col[j] = ring.neg(acc);
      std::vector<V> next(r, ring.zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < r; ++l) next[i] = ring.add(next[i], ring.mul(a(i, l), s[l]));
      s = std::move(next);
    }
    // Lower-triangular Toeplitz product: (r+2) x (r+1) times c.
    std::vector<V> out(r + 2, ring.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        out[i] = ring.add(out[i], ring.mul(col[i - j], c[j]));
    c = std::move(out);
  }
  CharPolyCoeffs<Ring> e(n);
  for (std::size_t i = 1; i <= n; ++i) e[i - 1] = i % 2 == 0 ? c[i] : ring.neg(c[i]);
  return e;
}

// Companion matrix with first row (e_1, -e_2, e_3, ...) and ones on the
// subdiagonal; its characteristic coefficients are exactly e.
template <CommutativeRing Ring>
Matrix<Ring> companion(const Ring& ring, const CharPolyCoeffs<Ring>& e) {
  const std::size_t n = e.size();
  Matrix<Ring> m = Matrix<Ring>::zero(ring, n);
  for (std::size_t j = 0; j < n; ++j) m(0, j) = j % 2 == 0 ? e[j] : ring.neg(e[j]);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = ring.one();
  return m;
}

// trace(A^k) for any A with characteristic coefficients e, via Newton's
// identities: p_j = sum_{i<j} (-1)^{i-1} e_i p_{j-i} + (-1)^{j-1} j e_j for
// j <= n, and the order-n linear recurrence beyond that.
template <CommutativeRing Ring>
typename Ring::value_type power_sum_newton(const Ring& ring, const CharPolyCoeffs<Ring>& e,
                                           unsigned k) {
  using V = typename Ring::value_type;
  const std::size_t n = e.size();
  if (k == 0) return ring.from_int(static_cast<std::int64_t>(n));
  std::vector<V> p;
  p.reserve(k + 1);
  p.push_back(ring.from_int(static_cast<std::int64_t>(n)));
  for (std::size_t j = 1; j <= k; ++j) {
    auto acc = ring.zero();
    const std::size_t top = std::min(j - 1, n);
    for (std::size_t i = 1; i <= top; ++i) {
      const auto term = ring.mul(e[i - 1], p[j - i]);
      acc = i % 2 == 1 ? ring.add(acc, term) : ring.sub(acc, term);
    }
    if (j <= n) {
      const auto term = ring.scale(e[j - 1], static_cast<std::int64_t>(j));
      acc = j % 2 == 1 ? ring.add(acc, term) : ring.sub(acc, term);
    }
    p.push_back(std::move(acc));
  }
  return p[k];
}

// Closed forms for 2x2 matrices: t^3 - 3 t D and t^4 - 4 t^2 D + 2 D^2.
template <CommutativeRing Ring>
typename Ring::value_type trace_power_closed_2x2(const Ring& ring, const typename Ring::value_type& t,
                                                 const typename Ring::value_type& det, unsigned k) {
  const auto t2 = ring.mul(t, t);
  if (k == 3) return ring.sub(ring.mul(t2, t), ring.scale(ring.mul(t, det), 3));
  if (k == 4) {
    const auto t4 = ring.mul(t2, t2);
    return ring.add(ring.sub(t4, ring.scale(ring.mul(t2, det), 4)),
                    ring.scale(ring.mul(det, det), 2));
  }
  fail(ErrorCode::kUnsupportedK, "closed 2x2 trace form exists only for k = 3, 4");
}

}  // namespace waring
