// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/integer.hpp"
#include "waring/limits.hpp"
#include "waring/order.hpp"

namespace waring {

// Rule identifiers carried by verdicts.
namespace rules {
inline constexpr const char* kLargeMatrices = "Thm-ngek";         // n >= k, gcd(k, disc R) = 1
inline constexpr const char* kCubes2x2 = "Thm-Rcube";             // (2,3), gcd(3, disc R) = 1
inline constexpr const char* kFourth2x2 = "Thm-Rfourth";          // (2,4), gcd(2, disc R) = 1
inline constexpr const char* kQuadraticPrime = "Thm-Oquad";       // quadratic O, prime q > n
inline constexpr const char* kElementWaring = "Cor-T3";           // O_q = O
inline constexpr const char* kTraceGroupOracle = "Cor-Fequiv-oracle";
inline constexpr const char* kNone = "none";
}  // namespace rules

enum class Answer { kYes, kNo, kUnknown };
enum class DecideMode { kAuto, kCriterionOnly, kOracleOnly };

const char* answer_name(Answer a);
const char* mode_name(DecideMode m);

// q = (p^r - 1)/(p^d - 1) with d | r, d < r.
struct BSTriple {
  std::uint64_t p = 0;
  unsigned r = 0;
  unsigned d = 0;
  Integer q;

  bool operator==(const BSTriple&) const = default;
};

struct PowerCountBound {
  enum class Kind { kExactSmall, kSymbolic, kUnknown };
  Kind kind = Kind::kUnknown;
  int value = 0;            // for kExactSmall
  std::string expression;   // for kSymbolic, in the unknown constant g_k
  unsigned q = 0;           // prime the symbolic expression is instantiated at
};

// A structured fact backing a verdict: a kind tag plus string/integer fields.
struct Witness {
  std::string kind;
  std::map<std::string, std::string> text;
  std::map<std::string, Integer> numbers;
  std::vector<std::vector<Integer>> elements;  // coordinate vectors, when relevant
};

struct Verdict {
  Answer answer = Answer::kUnknown;
  std::string rule = rules::kNone;
  std::vector<Witness> witnesses;
  PowerCountBound bound;
  // Deterministic work counters; wall-clock time only when requested.
  std::map<std::string, std::uint64_t> counters;
  std::optional<double> wall_clock_ms;
};

enum class Splitting { kSplit, kInert, kRamified };
const char* splitting_name(Splitting s);

// Kronecker symbol (a / n) for n >= 1.
int kronecker_symbol(const Integer& a, const Integer& n);

// gcd(k, |disc|) == 1.
bool gcd_criterion(const Integer& disc, const Integer& k);

// Splitting of p in Q(sqrt d) read off the Kronecker symbol of disc K.
// Requires f = 1; throws kInvalidSpec otherwise.
Splitting split_prime_quadratic(const QuadraticSpec& spec, std::uint64_t p);

// (residue degree, multiplicity) of the irreducible factors of the minimal
// polynomial mod p, sorted ascending. These are the prime-ideal degrees and
// ramification indices only when p does not divide the index of Z[theta] in
// the maximal order; the caller must assert that or kIndexCaveat is thrown.
std::vector<std::pair<int, int>> dedekind_degrees(const MonogenicOrder& order, std::uint64_t p,
                                                  bool caller_asserts_index_coprime);

// All (p, r, d) with prime p <= p_max, 1 <= d < r <= r_max, d | r and
// (p^r - 1)/(p^d - 1) = q. Sorted by (p, r, d).
std::vector<BSTriple> bs_representations(const Integer& q, std::uint64_t p_max, unsigned r_max);

inline constexpr std::uint64_t kDefaultBsPMax = 100'000;
inline constexpr unsigned kDefaultBsRMax = 64;

struct ElementWaringResult {
  bool full = false;  // O_q == O
  std::vector<Witness> witnesses;
};

// Whether the q-th powers of elements generate the ring additively, for Z
// or the maximal order of a quadratic field. Throws kUnsupportedOrder for
// anything else and kInvalidArgument when q is not prime.
ElementWaringResult element_waring(const MonogenicOrder& order, std::uint64_t q,
                                   std::uint64_t p_max = kDefaultBsPMax,
                                   unsigned r_max = kDefaultBsRMax);

// Whether the order is Z or the maximal order of a quadratic field; returns
// the field's d in the quadratic case.
bool is_integers(const MonogenicOrder& order);
std::optional<Integer> maximal_quadratic_d(const MonogenicOrder& order);

PowerCountBound power_count_bound(int n, unsigned k);

struct DecideOptions {
  DecideMode mode = DecideMode::kAuto;
  ResourceLimits limits;
  bool wall_clock = false;
};

// Decides whether every n x n matrix over the order is a sum of k-th powers.
Verdict decide(const OrderDescriptor& order, int n, unsigned k, const DecideOptions& options = {});

}  // namespace waring
