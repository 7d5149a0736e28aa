// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#include "waring/trace_group.hpp"

#include <limits>
#include <string>

#include "waring/errors.hpp"

namespace waring {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::int64_t factorial_modulus(unsigned k, const ResourceLimits& limits) {
  if (k < 2) fail(ErrorCode::kInvalidArgument, "k must be >= 2");
  if (k > limits.max_oracle_k)
    fail(ErrorCode::kResourceLimit, "k = " + std::to_string(k) + " exceeds max_oracle_k " +
                                        std::to_string(limits.max_oracle_k));
  const Integer f = factorial(k);
  if (!fits_int64(f)) fail(ErrorCode::kResourceLimit, "k! does not fit in 64 bits");
  return to_int64(f);
}

TraceGroup closed_form_group(const MonogenicOrder& order, unsigned k,
                             const ResourceLimits& limits) {
  const ResidueRing ring(order, factorial_modulus(k, limits), limits);
  TraceGroup tg{2, k, AdditiveSubgroup(ring, limits.max_closure_ops), false, {}, 0};
  return tg;
}

}  // namespace

std::uint64_t trace_tuple_count(const MonogenicOrder& order, int n, unsigned k) {
  const Integer f = factorial(k);
  if (!f.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (int i = 0; i < order.degree() * n; ++i) count = saturating_mul(count, f.get_ui());
  return count;
}

TraceGroup compute_trace_group(const MonogenicOrder& order, int n, unsigned k,
                               const ResourceLimits& limits) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "matrix size n must be >= 1");
  const std::int64_t modulus = factorial_modulus(k, limits);
  const std::uint64_t tuples = trace_tuple_count(order, n, k);
  if (tuples > limits.max_ring_size)
    fail(ErrorCode::kResourceLimit,
         "trace-group tuple space (" + std::to_string(modulus) + "^" +
             std::to_string(order.degree() * n) + ") exceeds max_ring_size " +
             std::to_string(limits.max_ring_size));
  const ResidueRing ring(order, modulus, limits);

  TraceGroup tg{n, k, AdditiveSubgroup(ring, limits.max_closure_ops), false, {}, 0};
  std::vector<bool> seen(ring.size(), false);

  // Odometer over (e_1, ..., e_n), e_1 most significant, each component in
  // ring index order, so tuples are visited lexicographically.
  std::vector<std::uint64_t> digits(n, 0);
  CharPolyCoeffs<ResidueRing> e(n, ring.zero());
  while (true) {
    ++tg.tuples_enumerated;
    const ResidueElement value = power_sum_newton(ring, e, k);
    const std::uint64_t idx = ring.index_of(value);
    if (!seen[idx]) {
      seen[idx] = true;
      tg.generators.push_back({value, e});
      tg.group.adjoin_index(idx);
      if (tg.group.is_full()) break;
    }
    int pos = n - 1;
    while (pos >= 0 && ++digits[pos] == ring.size()) {
      digits[pos] = 0;
      e[pos] = ring.zero();
      --pos;
    }
    if (pos < 0) break;
    e[pos] = ring.element_at(digits[pos]);
  }
  tg.is_full = tg.group.is_full();
  return tg;
}

TraceGroup compute_S(const MonogenicOrder& order, const ResourceLimits& limits) {
  TraceGroup tg = closed_form_group(order, 3, limits);
  const ResidueRing& ring = tg.ring();
  for (std::uint64_t i = 0; i < ring.size() && !tg.group.is_full(); ++i) {
    const ResidueElement t = ring.element_at(i);
    tg.group.adjoin(ring.pow(t, 3));
    tg.group.adjoin(ring.scale(t, 3));
  }
  tg.is_full = tg.group.is_full();
  return tg;
}

TraceGroup compute_G(const MonogenicOrder& order, const ResourceLimits& limits) {
  TraceGroup tg = closed_form_group(order, 4, limits);
  const ResidueRing& ring = tg.ring();
  const std::uint64_t size = ring.size();
  if (size > 0 && size > limits.max_ring_size / size)
    fail(ErrorCode::kResourceLimit, "u, v pairs for the fourth-power generators exceed max_ring_size");
  for (std::uint64_t i = 0; i < size && !tg.group.is_full(); ++i) {
    const ResidueElement t = ring.element_at(i);
    tg.group.adjoin(ring.pow(t, 4));
    tg.group.adjoin(ring.scale(ring.mul(t, t), 2));
  }
  for (std::uint64_t i = 0; i < size && !tg.group.is_full(); ++i) {
    const ResidueElement u = ring.element_at(i);
    const ResidueElement u2 = ring.scale(ring.mul(u, u), 4);
    for (std::uint64_t j = 0; j < size && !tg.group.is_full(); ++j)
      tg.group.adjoin(ring.mul(u2, ring.element_at(j)));
  }
  tg.is_full = tg.group.is_full();
  return tg;
}

bool trace_membership(const TraceGroup& tg, const MatrixOverOrder& m) {
  const MonogenicOrder& order = tg.ring().parent();
  if (static_cast<int>(m.size()) != tg.n)
    fail(ErrorCode::kDimensionMismatch, "matrix is " + std::to_string(m.size()) +
                                            "x" + std::to_string(m.size()) +
                                            ", trace group is for n = " + std::to_string(tg.n));
  const OrderElement t = mat_trace(order, m);
  return tg.group.contains(tg.ring().reduce(t));
}

}  // namespace waring
