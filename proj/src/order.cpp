// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#include "waring/order.hpp"

#include <utility>

#include "waring/errors.hpp"

namespace waring {

Integer integer_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer polynomial_discriminant(std::span<const Integer> lower) {
  const std::size_t n = lower.size();
  if (n == 0) fail(ErrorCode::kInvalidArgument, "polynomial of degree zero");
  // Coefficients from the leading term down.
  std::vector<Integer> f(n + 1), df(n);
  f[0] = 1;
  for (std::size_t i = 0; i < n; ++i) f[i + 1] = lower[n - 1 - i];
  for (std::size_t i = 0; i < n; ++i) df[i] = f[i] * static_cast<unsigned long>(n - i);

  // Sylvester matrix of f (degree n) and f' (degree n - 1).
  const std::size_t size = 2 * n - 1;
  std::vector<std::vector<Integer>> syl(size, std::vector<Integer>(size, 0));
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t i = 0; i <= n; ++i) syl[r][r + i] = f[i];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < n; ++i) syl[n - 1 + r][r + i] = df[i];

  Integer res = integer_determinant(std::move(syl));
  const std::size_t pairs = n * (n - 1) / 2;
  return pairs % 2 == 0 ? res : Integer(-res);
}

Integer quadratic_field_disc(const Integer& d) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), d.get_mpz_t(), 4);
  return r == 1 ? d : Integer(4 * d);
}

std::optional<Integer> fundamental_disc_to_d(const Integer& disc) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), disc.get_mpz_t(), 4);
  if (r == 1) {
    if (disc != 1 && is_squarefree(disc)) return disc;
    return std::nullopt;
  }
  if (r != 0) return std::nullopt;
  Integer m = disc / 4;
  mpz_fdiv_r_ui(r.get_mpz_t(), m.get_mpz_t(), 4);
  if ((r == 2 || r == 3) && is_squarefree(m)) return m;
  return std::nullopt;
}

MonogenicOrder MonogenicOrder::from_min_poly(std::vector<Integer> lower, std::string label) {
  if (lower.empty()) fail(ErrorCode::kInvalidArgument, "minimal polynomial needs degree >= 1");
  MonogenicOrder o;
  o.disc_ = polynomial_discriminant(lower);
  if (o.disc_ == 0)
    fail(ErrorCode::kZeroDiscriminant, "minimal polynomial has a repeated root");
  o.lower_ = std::move(lower);
  o.label_ = std::move(label);
  return o;
}

MonogenicOrder MonogenicOrder::quadratic(const QuadraticSpec& spec) {
  if (spec.d == 0 || spec.d == 1 || !is_squarefree(spec.d))
    fail(ErrorCode::kInvalidSpec, "d must be squarefree and different from 0 and 1");
  if (spec.f < 1) fail(ErrorCode::kInvalidSpec, "conductor f must be >= 1");
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), spec.d.get_mpz_t(), 4);
  std::vector<Integer> lower(2);
  if (r == 1) {
    // f*omega with omega = (1 + sqrt d)/2 satisfies x^2 - f x - f^2 (d-1)/4.
    lower[0] = -spec.f * spec.f * ((spec.d - 1) / 4);
    lower[1] = -spec.f;
  } else {
    lower[0] = -spec.f * spec.f * spec.d;
    lower[1] = 0;
  }
  std::string label = "Z[" + (spec.f == 1 ? std::string() : spec.f.get_str() + "*") +
                      (r == 1 ? "(1+sqrt(" + spec.d.get_str() + "))/2"
                              : "sqrt(" + spec.d.get_str() + ")") +
                      "]";
  MonogenicOrder o = from_min_poly(std::move(lower), std::move(label));
  o.quad_ = spec;
  return o;
}

MonogenicOrder MonogenicOrder::integers() { return from_min_poly({Integer(0)}, "Z"); }

void MonogenicOrder::check(const OrderElement& a) const {
  if (a.degree() != lower_.size())
    fail(ErrorCode::kDimensionMismatch, "element has " + std::to_string(a.degree()) +
                                            " coordinates, order has degree " +
                                            std::to_string(lower_.size()));
}

OrderElement MonogenicOrder::zero() const {
  return OrderElement(std::vector<Integer>(lower_.size(), 0));
}

OrderElement MonogenicOrder::one() const { return from_integer(1); }

OrderElement MonogenicOrder::from_integer(const Integer& c) const {
  std::vector<Integer> v(lower_.size(), 0);
  v[0] = c;
  return OrderElement(std::move(v));
}

OrderElement MonogenicOrder::theta() const {
  if (lower_.size() == 1) return from_integer(-lower_[0]);
  std::vector<Integer> v(lower_.size(), 0);
  v[1] = 1;
  return OrderElement(std::move(v));
}

OrderElement MonogenicOrder::element(std::vector<Integer> coords) const {
  OrderElement e(std::move(coords));
  check(e);
  return e;
}

OrderElement MonogenicOrder::add(const OrderElement& a, const OrderElement& b) const {
  check(a);
  check(b);
  std::vector<Integer> v(a.coords());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
  return OrderElement(std::move(v));
}

OrderElement MonogenicOrder::sub(const OrderElement& a, const OrderElement& b) const {
  check(a);
  check(b);
  std::vector<Integer> v(a.coords());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
  return OrderElement(std::move(v));
}

OrderElement MonogenicOrder::neg(const OrderElement& a) const {
  check(a);
  std::vector<Integer> v(a.coords());
  for (auto& c : v) c = -c;
  return OrderElement(std::move(v));
}

OrderElement MonogenicOrder::mul(const OrderElement& a, const OrderElement& b) const {
  check(a);
  check(b);
  const std::size_t n = lower_.size();
  std::vector<Integer> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
  }
  // theta^n = -(c0 + c1 theta + ... + c_{n-1} theta^{n-1})
  for (std::size_t j = 2 * n - 2; j >= n; --j) {
    if (prod[j] == 0) continue;
    const Integer c = prod[j];
    prod[j] = 0;
    for (std::size_t i = 0; i < n; ++i) prod[j - n + i] -= c * lower_[i];
  }
  prod.resize(n);
  return OrderElement(std::move(prod));
}

OrderElement MonogenicOrder::scale(const OrderElement& a, std::int64_t c) const {
  return scale(a, Integer(static_cast<long>(c)));
}

OrderElement MonogenicOrder::scale(const OrderElement& a, const Integer& c) const {
  check(a);
  std::vector<Integer> v(a.coords());
  for (auto& x : v) x *= c;
  return OrderElement(std::move(v));
}

OrderElement MonogenicOrder::pow(const OrderElement& a, unsigned e) const {
  OrderElement result = one();
  OrderElement base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool MonogenicOrder::is_zero(const OrderElement& a) const {
  check(a);
  for (const auto& c : a.coords())
    if (c != 0) return false;
  return true;
}

Integer MonogenicOrder::trace(const OrderElement& a) const {
  check(a);
  const std::size_t n = lower_.size();
  Integer t = 0;
  OrderElement basis = one();
  const OrderElement th = n == 1 ? one() : theta();
  for (std::size_t j = 0; j < n; ++j) {
    t += mul(a, basis)[j];
    if (j + 1 < n) basis = mul(basis, th);
  }
  return t;
}

const Integer& descriptor_disc(const OrderDescriptor& order) {
  return std::visit([](const auto& o) -> const Integer& {
    if constexpr (std::is_same_v<std::decay_t<decltype(o)>, MonogenicOrder>)
      return o.disc();
    else
      return o.disc;
  }, order);
}

int descriptor_degree(const OrderDescriptor& order) {
  return std::visit([](const auto& o) -> int {
    if constexpr (std::is_same_v<std::decay_t<decltype(o)>, MonogenicOrder>)
      return o.degree();
    else
      return o.degree;
  }, order);
}

}  // namespace waring
