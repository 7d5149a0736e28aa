// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <cstdint>

namespace waring {

// A commutative ring with unity, given as a context object that performs
// arithmetic on plain value types. MonogenicOrder (exact) and ResidueRing
// (modulo m) both model it, so the matrix and trace engines are written once.
template <class R>
concept CommutativeRing = requires(const R& ring, const typename R::value_type& a,
                                   std::int64_t c) {
  typename R::value_type;
  { ring.zero() } -> std::same_as<typename R::value_type>;
  { ring.one() } -> std::same_as<typename R::value_type>;
  { ring.from_int(c) } -> std::same_as<typename R::value_type>;
  { ring.add(a, a) } -> std::same_as<typename R::value_type>;
  { ring.sub(a, a) } -> std::same_as<typename R::value_type>;
  { ring.neg(a) } -> std::same_as<typename R::value_type>;
  { ring.mul(a, a) } -> std::same_as<typename R::value_type>;
  { ring.scale(a, c) } -> std::same_as<typename R::value_type>;
  { ring.equal(a, a) } -> std::same_as<bool>;
};

}  // namespace waring
