// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "waring/integer.hpp"

namespace waring {

// Q(sqrt d) together with a conductor f; names the order Z[f*omega].
struct QuadraticSpec {
  Integer d;
  Integer f = 1;
};

// Coordinates on the power basis 1, theta, ..., theta^(n-1).
class OrderElement {
 public:
  OrderElement() = default;
  explicit OrderElement(std::vector<Integer> coords) : coords_(std::move(coords)) {}

  std::size_t degree() const { return coords_.size(); }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  bool operator==(const OrderElement&) const = default;

 private:
  std::vector<Integer> coords_;
};

// The order Z[theta] for theta a root of a monic, squarefree integer
// polynomial. The discriminant is computed once at construction.
//
// Also acts as the exact ring context for OrderElement arithmetic.
class MonogenicOrder {
 public:
  using value_type = OrderElement;

  // lower_coeffs = c0, ..., c_{n-1} of x^n + c_{n-1} x^{n-1} + ... + c0.
  // Throws kZeroDiscriminant for polynomials with a repeated root.
  static MonogenicOrder from_min_poly(std::vector<Integer> lower_coeffs,
                                      std::string label = {});
  // Throws kInvalidSpec unless d is squarefree, d != 0, 1 and f >= 1.
  static MonogenicOrder quadratic(const QuadraticSpec& spec);
  // The rational integers, presented as Z[0] with minimal polynomial x.
  static MonogenicOrder integers();

  int degree() const { return static_cast<int>(lower_.size()); }
  const std::vector<Integer>& lower_coeffs() const { return lower_; }
  const Integer& disc() const { return disc_; }
  const std::string& label() const { return label_; }
  // Set when the order was built from a QuadraticSpec.
  const std::optional<QuadraticSpec>& quadratic_spec() const { return quad_; }

  OrderElement zero() const;
  OrderElement one() const;
  OrderElement from_int(std::int64_t c) const { return from_integer(Integer(static_cast<long>(c))); }
  OrderElement from_integer(const Integer& c) const;
  OrderElement theta() const;  // (0, 1, 0, ...); equals c0 = -lower[0] when degree is 1
  OrderElement element(std::vector<Integer> coords) const;  // checks the length

  OrderElement add(const OrderElement& a, const OrderElement& b) const;
  OrderElement sub(const OrderElement& a, const OrderElement& b) const;
  OrderElement neg(const OrderElement& a) const;
  OrderElement mul(const OrderElement& a, const OrderElement& b) const;
  OrderElement scale(const OrderElement& a, std::int64_t c) const;
  OrderElement scale(const OrderElement& a, const Integer& c) const;
  OrderElement pow(const OrderElement& a, unsigned e) const;
  bool equal(const OrderElement& a, const OrderElement& b) const { return a == b; }
  bool is_zero(const OrderElement& a) const;

  // Trace of multiplication by a on the power basis.
  Integer trace(const OrderElement& a) const;

  bool operator==(const MonogenicOrder& o) const { return lower_ == o.lower_; }

 private:
  MonogenicOrder() = default;
  void check(const OrderElement& a) const;

  std::vector<Integer> lower_;
  Integer disc_;
  std::string label_;
  std::optional<QuadraticSpec> quad_;
};

// An order known only by its degree and an externally supplied discriminant
// (for instance a non-monogenic ring of integers). Usable by the gcd
// criteria, not by anything that needs element arithmetic.
struct ExternalDiscOrder {
  int degree = 0;
  Integer disc;
  std::string label;
};

using OrderDescriptor = std::variant<MonogenicOrder, ExternalDiscOrder>;

const Integer& descriptor_disc(const OrderDescriptor& order);
int descriptor_degree(const OrderDescriptor& order);

// (-1)^{n(n-1)/2} Res(f, f') for the monic f with the given lower coefficients.
Integer polynomial_discriminant(std::span<const Integer> lower_coeffs);

// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer integer_determinant(std::vector<std::vector<Integer>> m);

// Field discriminant of Q(sqrt d): d if d = 1 (mod 4), else 4d.
Integer quadratic_field_disc(const Integer& d);

// When disc is a fundamental discriminant, the squarefree d with
// Q(sqrt d) of that discriminant.
std::optional<Integer> fundamental_disc_to_d(const Integer& disc);

}  // namespace waring
