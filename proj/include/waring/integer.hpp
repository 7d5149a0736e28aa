// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace waring {

using Integer = mpz_class;

Integer factorial(unsigned k);

// Deterministic for every input that fits in 64 bits.
bool is_prime(std::uint64_t n);

// Sieve of Eratosthenes; ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Distinct prime factors of |n| in ascending order; n != 0.
std::vector<Integer> prime_factors(const Integer& n);

bool is_squarefree(const Integer& n);

// Least non-negative residue, for any sign of a.
std::int64_t floor_mod(const Integer& a, std::int64_t m);
inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool fits_int64(const Integer& a);
std::int64_t to_int64(const Integer& a);  // throws kInternal if out of range

std::string to_string(const Integer& a);

}  // namespace waring
