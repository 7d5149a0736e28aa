// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#include "waring/integer.hpp"

#include <limits>

#include "waring/errors.hpp"

namespace waring {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kZeroDiscriminant: return "ZeroDiscriminant";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kBadModulus: return "BadModulus";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kUnsupportedK: return "UnsupportedK";
    case ErrorCode::kUnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::kIndexCaveat: return "IndexCaveat";
    case ErrorCode::kNotRepresentable: return "NotRepresentable";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "InternalError";
}

Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  // mpz_probab_prime_p is deterministic (BPSW) below 2^64.
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<Integer> prime_factors(const Integer& n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "prime_factors of zero");
  Integer m = abs(n);
  std::vector<Integer> out;
  bool cofactor_prime = mpz_probab_prime_p(m.get_mpz_t(), 30) != 0;
  for (Integer p = 2; !cofactor_prime && p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
      cofactor_prime = mpz_probab_prime_p(m.get_mpz_t(), 30) != 0;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  Integer m = abs(n);
  bool cofactor_prime = mpz_probab_prime_p(m.get_mpz_t(), 30) != 0;
  for (Integer p = 2; !cofactor_prime && p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
      cofactor_prime = mpz_probab_prime_p(m.get_mpz_t(), 30) != 0;
    }
  }
  return true;
}

std::int64_t floor_mod(const Integer& a, std::int64_t m) {
  Integer r;
  Integer mm = static_cast<long>(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
  return r.get_si();
}

bool fits_int64(const Integer& a) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return a.fits_slong_p();
}

std::int64_t to_int64(const Integer& a) {
  if (!fits_int64(a)) fail(ErrorCode::kInternal, "integer exceeds 64 bits: " + a.get_str());
  return a.get_si();
}

std::string to_string(const Integer& a) { return a.get_str(); }

}  // namespace waring
