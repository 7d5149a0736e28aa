// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace waring {

// Caps for every enumeration the library performs. Exceeding one raises
// ErrorCode::kResourceLimit instead of running unbounded.
struct ResourceLimits {
  // Largest residue ring, tuple space, or candidate set that may be enumerated.
  std::uint64_t max_ring_size = 10'000'000;
  // Budget for additive-closure steps and decomposition lookups.
  std::uint64_t max_closure_ops = 100'000'000;
  // Largest power k the trace-group oracle accepts.
  unsigned max_oracle_k = 6;
  // Breadth-first depth for certificate search.
  unsigned max_certificate_depth = 8;
};

}  // namespace waring
