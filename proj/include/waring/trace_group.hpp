// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "waring/limits.hpp"
#include "waring/matrix.hpp"
#include "waring/residue_ring.hpp"

namespace waring {

// One value trace(A^k) mod k! together with the characteristic coefficients
// (over R/k!R) of a matrix A that realizes it.
struct TraceGenerator {
  ResidueElement value;
  CharPolyCoeffs<ResidueRing> coeffs;
};

// The additive subgroup of R/k!R generated by traces of k-th powers of n x n
// matrices over R.
struct TraceGroup {
  int n = 0;
  unsigned k = 0;
  AdditiveSubgroup group;
  bool is_full = false;
  // Distinct generator values in order of first appearance, each with the
  // lexicographically first coefficient tuple producing it. Empty for groups
  // built from closed-form generator sets.
  std::vector<TraceGenerator> generators;
  std::uint64_t tuples_enumerated = 0;

  const ResidueRing& ring() const { return group.ring(); }
  std::int64_t modulus() const { return group.ring().modulus(); }
};

// Enumerates every coefficient tuple in (R/k!R)^n, maps it through
// power_sum_newton, and closes additively. Stops early once the group is all
// of R/k!R. Throws kResourceLimit if k > max_oracle_k or the tuple space
// exceeds max_ring_size.
TraceGroup compute_trace_group(const MonogenicOrder& order, int n, unsigned k,
                               const ResourceLimits& limits = {});

// Closure of {t^3} and {3t} in R/6R (n = 2, k = 3).
TraceGroup compute_S(const MonogenicOrder& order, const ResourceLimits& limits = {});

// Closure of {t^4}, {4u^2 v} and {2D^2} in R/24R (n = 2, k = 4).
TraceGroup compute_G(const MonogenicOrder& order, const ResourceLimits& limits = {});

// Whether trace(m) mod k! lies in the group, i.e. whether m is a sum of k-th
// powers of n x n matrices over R.
bool trace_membership(const TraceGroup& tg, const MatrixOverOrder& m);

// (k!)^(degree * n), saturating at UINT64_MAX.
std::uint64_t trace_tuple_count(const MonogenicOrder& order, int n, unsigned k);

}  // namespace waring
