// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "waring/criteria.hpp"
#include "waring/limits.hpp"
#include "waring/matrix.hpp"
#include "waring/trace_group.hpp"

namespace waring {

// trace(M) = sum_i trace(companion(summands[i])^k) + k! * remainder.
// Any matrix whose trace lies in k!R is itself a sum of k-th powers, so this
// identity certifies that M is one.
struct Certificate {
  unsigned k = 0;
  std::vector<CharPolyCoeffs<MonogenicOrder>> summands;
  OrderElement remainder;
};

// M = sum_i matrices[i]^k exactly.
struct Decomposition {
  unsigned k = 0;
  std::vector<MatrixOverOrder> matrices;
};

// Uses a precomputed trace group for (order, M.size(), k). Finds a shortest
// sum of generator values hitting trace(M) mod k! by breadth-first search
// (generators tried in tuple order) and lifts it. Throws kNotRepresentable if
// trace(M) mod k! is outside the group and kResourceLimit if the search
// depth cap is reached first.
Certificate certify_trace(const TraceGroup& tg, const MatrixOverOrder& m,
                          unsigned max_depth = ResourceLimits{}.max_certificate_depth);
Certificate certify_trace(const MonogenicOrder& order, const MatrixOverOrder& m, unsigned k,
                          const ResourceLimits& limits = {});

// Recomputes the trace identity exactly. Never throws on malformed input.
bool verify_certificate(const MonogenicOrder& order, const MatrixOverOrder& m, const Certificate& cert);

// Exhaustive search for M = A_1^k + ... + A_t^k with t <= max_terms and every
// coordinate of every A_i in [-entry_bound, entry_bound]. Fewer terms are
// tried first; candidates are ordered by largest |coordinate|, then
// lexicographically with coordinates ranked 0, 1, -1, 2, -2, ... Returns
// nullopt when nothing exists within the bounds (not a proof of impossibility).
std::optional<Decomposition> search_decomposition(const MonogenicOrder& order, const MatrixOverOrder& m,
                                                  unsigned k, unsigned entry_bound, unsigned max_terms,
                                                  const ResourceLimits& limits = {});

// The Q(sqrt 5) example: alpha = (1+sqrt 5)/2 is not a sum of cubes of
// elements, yet every 2x2 matrix over Z[alpha] is a sum of cubes.
struct CounterexampleReport {
  MonogenicOrder order;
  std::int64_t formula_cases_checked = 0;      // beta = a + b alpha with |a|, |b| <= 6
  std::vector<ResidueElement> cube_image_mod2;
  std::vector<ResidueElement> cube_closure_mod2;
  bool alpha_in_cube_closure = true;
  ElementWaringResult element_waring;          // q = 3
  Verdict matrix_verdict;                      // n = 2, k = 3, auto mode
};

// Throws kInternal if any of the checked facts fails.
CounterexampleReport counterexample_q5(const ResourceLimits& limits = {});

}  // namespace waring
