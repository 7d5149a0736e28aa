// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#include "waring/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "waring/errors.hpp"
#include "waring/trace_group.hpp"

namespace waring {

const char* answer_name(Answer a) {
  switch (a) {
    case Answer::kYes: return "yes";
    case Answer::kNo: return "no";
    case Answer::kUnknown: return "unknown";
  }
  return "unknown";
}

const char* mode_name(DecideMode m) {
  switch (m) {
    case DecideMode::kAuto: return "auto";
    case DecideMode::kCriterionOnly: return "criterion_only";
    case DecideMode::kOracleOnly: return "oracle_only";
  }
  return "auto";
}

const char* splitting_name(Splitting s) {
  switch (s) {
    case Splitting::kSplit: return "split";
    case Splitting::kInert: return "inert";
    case Splitting::kRamified: return "ramified";
  }
  return "split";
}

int kronecker_symbol(const Integer& a_in, const Integer& n_in) {
  if (n_in < 1) fail(ErrorCode::kInvalidArgument, "kronecker symbol needs n >= 1");
  Integer a = a_in, n = n_in;
  int result = 1;
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    const Integer a8 = ((a % 8) + 8) % 8;
    const bool flip = a8 == 3 || a8 == 5;
    while (n % 2 == 0) {
      n /= 2;
      if (flip) result = -result;
    }
  }
  // Jacobi symbol (a / n), n odd.
  a = ((a % n) + n) % n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const Integer n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool gcd_criterion(const Integer& disc, const Integer& k) {
  return gcd(abs(disc), k) == 1;
}

Splitting split_prime_quadratic(const QuadraticSpec& spec, std::uint64_t p) {
  if (spec.f != 1) fail(ErrorCode::kInvalidSpec, "prime splitting needs the maximal order (f = 1)");
  if (spec.d == 0 || spec.d == 1 || !is_squarefree(spec.d))
    fail(ErrorCode::kInvalidSpec, "d must be squarefree and different from 0 and 1");
  if (!is_prime(p)) fail(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  const Integer disc_k = quadratic_field_disc(spec.d);
  const Integer pz = static_cast<unsigned long>(p);
  if (disc_k % pz == 0) return Splitting::kRamified;
  return kronecker_symbol(disc_k, pz) == 1 ? Splitting::kSplit : Splitting::kInert;
}

// ---------------------------------------------------------------------------
// Polynomials over the prime field F_p, coefficients low to high, no trailing
// zeros (the zero polynomial is empty).

namespace {

using Poly = std::vector<std::int64_t>;

struct PrimeField {
  std::int64_t p;

  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
  }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  void trim(Poly& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  int deg(const Poly& f) const { return static_cast<int>(f.size()) - 1; }

  Poly monic(Poly f) const {
    trim(f);
    if (f.empty()) return f;
    const std::int64_t li = inv(f.back());
    for (auto& c : f) c = mul(c, li);
    return f;
  }

  Poly sub(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] + p) % p;
    trim(r);
    return r;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul(a[i], b[j])) % p;
    trim(r);
    return r;
  }

  // Quotient and remainder; b nonzero.
  std::pair<Poly, Poly> divmod(Poly a, const Poly& b) const {
    trim(a);
    const int db = deg(b);
    if (deg(a) < db) return {{}, a};
    Poly q(a.size() - b.size() + 1, 0);
    const std::int64_t li = inv(b.back());
    for (int i = deg(a); i >= db; --i) {
      const std::int64_t c = mul(a[i], li);
      q[i - db] = c;
      if (c == 0) continue;
      for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] - mul(c, b[j]) + p) % p;
    }
    trim(a);
    trim(q);
    return {q, a};
  }

  Poly mod(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
  Poly div(const Poly& a, const Poly& b) const { return divmod(a, b).first; }

  Poly gcd(Poly a, Poly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Poly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  Poly derivative(const Poly& f) const {
    Poly r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(mul(f[i], static_cast<std::int64_t>(i % p)));
    trim(r);
    return r;
  }

  Poly pow_mod(Poly base, std::uint64_t e, const Poly& f) const {
    Poly result{1};
    base = mod(base, f);
    while (e > 0) {
      if (e & 1U) result = mod(mul(result, base), f);
      e >>= 1U;
      if (e > 0) base = mod(mul(base, base), f);
    }
    return result;
  }

  bool is_one(const Poly& f) const { return f.size() == 1 && f[0] == 1; }

  // Squarefree decomposition of a monic f: (factor, multiplicity) pairs.
  std::vector<std::pair<Poly, int>> squarefree(const Poly& f) const {
    std::vector<std::pair<Poly, int>> out;
    Poly c = gcd(f, derivative(f));
    Poly w = div(f, c);
    int i = 1;
    while (!is_one(w)) {
      Poly y = gcd(w, c);
      Poly fac = div(w, y);
      if (!is_one(fac)) out.emplace_back(monic(fac), i);
      w = std::move(y);
      c = div(c, w);
      ++i;
    }
    if (!is_one(c)) {
      // c is a polynomial in x^p; take the p-th root coefficientwise.
      Poly root;
      for (std::size_t j = 0; j < c.size(); j += static_cast<std::size_t>(p)) root.push_back(c[j]);
      for (auto& [g, m] : squarefree(monic(root))) out.emplace_back(g, m * static_cast<int>(p));
    }
    return out;
  }

  // Distinct-degree factorization of a squarefree monic g: (degree, count).
  std::vector<std::pair<int, int>> distinct_degree(Poly g) const {
    std::vector<std::pair<int, int>> out;
    const Poly x{0, 1};
    Poly h = mod(x, g);
    for (int i = 1; deg(g) >= 2 * i; ++i) {
      h = pow_mod(h, static_cast<std::uint64_t>(p), g);
      Poly d = gcd(g, sub(h, x));
      if (!is_one(d)) {
        out.emplace_back(i, deg(d) / i);
        g = div(g, d);
        h = mod(h, g);
      }
    }
    if (deg(g) > 0) out.emplace_back(deg(g), 1);
    return out;
  }
};

}  // namespace

std::vector<std::pair<int, int>> dedekind_degrees(const MonogenicOrder& order, std::uint64_t p,
                                                  bool caller_asserts_index_coprime) {
  if (!is_prime(p)) fail(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  if (!caller_asserts_index_coprime)
    fail(ErrorCode::kIndexCaveat,
         "factorization mod p gives prime-ideal degrees only when p is coprime to the index of "
         "Z[theta] in the maximal order; assert it explicitly");
  if (p > (1ULL << 62)) fail(ErrorCode::kResourceLimit, "prime too large for F_p arithmetic");
  const PrimeField fp{static_cast<std::int64_t>(p)};
  Poly f;
  for (const auto& c : order.lower_coeffs()) f.push_back(floor_mod(c, fp.p));
  f.push_back(1);

  std::vector<std::pair<int, int>> out;
  for (const auto& [factor, mult] : fp.squarefree(f))
    for (const auto& [degree, count] : fp.distinct_degree(factor))
      for (int i = 0; i < count; ++i) out.emplace_back(degree, mult);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BSTriple> bs_representations(const Integer& q, std::uint64_t p_max, unsigned r_max) {
  std::vector<BSTriple> out;
  if (q < 3) return out;  // every representation is at least p + 1 >= 3
  for (std::uint64_t p : primes_up_to(p_max)) {
    const Integer pz = static_cast<unsigned long>(p);
    if (pz + 1 > q) break;
    for (unsigned r = 2; r <= r_max; ++r) {
      // Every admissible d has r - d >= ceil(r/2), and the value exceeds p^(r-d).
      Integer floor_bound;
      mpz_pow_ui(floor_bound.get_mpz_t(), pz.get_mpz_t(), (r + 1) / 2);
      if (floor_bound > q) break;
      Integer pr;
      mpz_pow_ui(pr.get_mpz_t(), pz.get_mpz_t(), r);
      for (unsigned d = 1; d < r; ++d) {
        if (r % d != 0) continue;
        Integer pd;
        mpz_pow_ui(pd.get_mpz_t(), pz.get_mpz_t(), d);
        const Integer value = (pr - 1) / (pd - 1);
        if (value == q) out.push_back({p, r, d, value});
      }
    }
  }
  return out;
}

bool is_integers(const MonogenicOrder& order) { return order.degree() == 1; }

namespace {

std::optional<Integer> maximal_quadratic_d_of(int degree, const Integer& disc) {
  if (degree != 2) return std::nullopt;
  return fundamental_disc_to_d(disc);
}

}  // namespace

std::optional<Integer> maximal_quadratic_d(const MonogenicOrder& order) {
  if (order.quadratic_spec() && order.quadratic_spec()->f == 1) return order.quadratic_spec()->d;
  return maximal_quadratic_d_of(order.degree(), order.disc());
}

ElementWaringResult element_waring(const MonogenicOrder& order, std::uint64_t q,
                                   std::uint64_t p_max, unsigned r_max) {
  if (!is_prime(q)) fail(ErrorCode::kInvalidArgument, std::to_string(q) + " is not prime");
  const bool integers = is_integers(order);
  const std::optional<Integer> d = maximal_quadratic_d(order);
  if (!integers && !d)
    fail(ErrorCode::kUnsupportedOrder,
         "element Waring test needs Z or the maximal order of a quadratic field");

  ElementWaringResult res;
  res.full = true;
  const Integer qz = static_cast<unsigned long>(q);
  if (order.disc() % qz == 0) {
    res.full = false;
    Witness w{"ramified", {}, {{"q", qz}, {"disc", order.disc()}}, {}};
    res.witnesses.push_back(std::move(w));
  }
  for (const auto& t : bs_representations(qz, p_max, r_max)) {
    Witness w{"bs_triple", {}, {{"p", Integer(static_cast<unsigned long>(t.p))},
                                {"r", Integer(t.r)}, {"d", Integer(t.d)}, {"q", t.q}}, {}};
    // A prime factor of degree r needs r <= degree of the field.
    bool has_degree_r_factor = false;
    if (!integers && t.r == 2) {
      has_degree_r_factor = split_prime_quadratic({*d, 1}, t.p) == Splitting::kInert;
      w.text["splitting_of_p"] = splitting_name(split_prime_quadratic({*d, 1}, t.p));
    }
    w.text["obstructs"] = has_degree_r_factor ? "true" : "false";
    if (has_degree_r_factor) res.full = false;
    res.witnesses.push_back(std::move(w));
  }
  return res;
}

PowerCountBound power_count_bound(int n, unsigned k) {
  PowerCountBound b;
  const bool prime = is_prime(k);
  if (n >= static_cast<int>(k)) {
    b.kind = PowerCountBound::Kind::kExactSmall;
    b.value = prime ? 5 : 7;
  } else if (prime) {
    b.kind = PowerCountBound::Kind::kSymbolic;
    b.expression = "g_k + 2^{q-1} + (q-1)/3 + 1";
    b.q = k;
  }
  return b;
}

// ---------------------------------------------------------------------------

namespace {

struct Partial {
  Answer answer = Answer::kUnknown;
  std::string rule = rules::kNone;
  std::vector<Witness> witnesses;
  std::map<std::string, std::uint64_t> counters;
};

Partial gcd_rule(const Integer& disc, unsigned tested, const char* rule) {
  Partial p;
  p.rule = rule;
  const Integer t = static_cast<unsigned long>(tested);
  const Integer g = gcd(abs(disc), t);
  p.witnesses.push_back({"gcd", {}, {{"tested", t}, {"disc", disc}, {"gcd", g}}, {}});
  if (g == 1) {
    p.answer = Answer::kYes;
  } else {
    p.answer = Answer::kNo;
    for (const auto& prime : prime_factors(g))
      p.witnesses.push_back({"offending_prime", {}, {{"p", prime}}, {}});
  }
  return p;
}

std::optional<Partial> apply_criteria(const OrderDescriptor& order, int n, unsigned k) {
  const Integer& disc = descriptor_disc(order);
  const int degree = descriptor_degree(order);
  if (n >= static_cast<int>(k)) return gcd_rule(disc, k, rules::kLargeMatrices);
  if (n == 2 && k == 3) return gcd_rule(disc, 3, rules::kCubes2x2);
  if (n == 2 && k == 4) return gcd_rule(disc, 2, rules::kFourth2x2);

  const bool prime_k = is_prime(k);
  if (prime_k && maximal_quadratic_d_of(degree, disc)) {
    return gcd_rule(disc, k, rules::kQuadraticPrime);
  }
  if (prime_k && std::holds_alternative<MonogenicOrder>(order)) {
    const auto& mono = std::get<MonogenicOrder>(order);
    if (is_integers(mono)) {
      const ElementWaringResult ew = element_waring(mono, k);
      if (ew.full) {
        Partial p;
        p.answer = Answer::kYes;
        p.rule = rules::kElementWaring;
        p.witnesses = ew.witnesses;
        p.witnesses.push_back({"element_waring", {{"full", "true"}}, {{"q", Integer(k)}}, {}});
        return p;
      }
    }
  }
  return std::nullopt;
}

Partial run_oracle(const OrderDescriptor& order, int n, unsigned k, const ResourceLimits& limits) {
  Partial p;
  p.rule = rules::kTraceGroupOracle;
  if (!std::holds_alternative<MonogenicOrder>(order)) {
    p.witnesses.push_back({"oracle_unavailable",
                           {{"reason", "order given by discriminant only; no element arithmetic"}},
                           {},
                           {}});
    return p;
  }
  const auto& mono = std::get<MonogenicOrder>(order);
  try {
    const TraceGroup tg = compute_trace_group(mono, n, k, limits);
    p.counters["tuples_enumerated"] = tg.tuples_enumerated;
    p.counters["closure_ops"] = tg.group.closure_ops();
    Witness w{"trace_group", {}, {{"modulus", Integer(static_cast<long>(tg.modulus()))},
                                  {"n", Integer(n)}, {"k", Integer(k)},
                                  {"group_size", Integer(static_cast<unsigned long>(tg.group.size()))},
                                  {"ring_size", Integer(static_cast<unsigned long>(tg.ring().size()))}},
              {}};
    p.witnesses.push_back(std::move(w));
    if (tg.is_full) {
      p.answer = Answer::kYes;
    } else {
      p.answer = Answer::kNo;
      // Some power-basis element must be missing, since they generate R/k!R.
      const ResidueRing& ring = tg.ring();
      for (int i = 0; i < mono.degree(); ++i) {
        ResidueElement b = ring.zero();
        b.coords[i] = 1;
        if (!tg.group.contains(b)) {
          Witness nm{"non_member", {}, {{"basis_index", Integer(i)}}, {}};
          nm.elements.push_back(ring.lift(b).coords());
          p.witnesses.push_back(std::move(nm));
          break;
        }
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kResourceLimit) throw;
    p.answer = Answer::kUnknown;
    p.witnesses.push_back({"resource_limit", {{"stage", "trace_group_oracle"}, {"message", e.what()}}, {}, {}});
  }
  return p;
}

Verdict finish(Partial p, int n, unsigned k) {
  Verdict v;
  v.answer = p.answer;
  v.rule = std::move(p.rule);
  v.witnesses = std::move(p.witnesses);
  v.counters = std::move(p.counters);
  v.bound = power_count_bound(n, k);
  return v;
}

}  // namespace

Verdict decide(const OrderDescriptor& order, int n, unsigned k, const DecideOptions& options) {
  if (n < 2 || k < 2) fail(ErrorCode::kInvalidArgument, "decide needs n >= 2 and k >= 2");
  const auto start = std::chrono::steady_clock::now();
  Verdict v;

  std::optional<Partial> criterion;
  if (options.mode != DecideMode::kOracleOnly) criterion = apply_criteria(order, n, k);

  if (options.mode == DecideMode::kCriterionOnly) {
    if (criterion) {
      v = finish(std::move(*criterion), n, k);
    } else {
      Partial none;
      none.witnesses.push_back({"no_rule", {{"reason", "no implemented criterion covers this (order, n, k)"}}, {}, {}});
      v = finish(std::move(none), n, k);
    }
  } else if (options.mode == DecideMode::kOracleOnly) {
    v = finish(run_oracle(order, n, k, options.limits), n, k);
  } else {
    Partial oracle = run_oracle(order, n, k, options.limits);
    if (criterion) {
      if (oracle.answer != Answer::kUnknown) {
        if (oracle.answer != criterion->answer)
          fail(ErrorCode::kInternal, std::string("criterion ") + criterion->rule + " says " +
                                         answer_name(criterion->answer) + " but the trace-group oracle says " +
                                         answer_name(oracle.answer));
        Witness agree{"oracle_agreement", {{"oracle_answer", answer_name(oracle.answer)}}, {}, {}};
        for (const auto& w : oracle.witnesses)
          if (w.kind == "trace_group") agree.numbers = w.numbers;
        criterion->witnesses.push_back(std::move(agree));
        criterion->counters = oracle.counters;
      } else {
        criterion->witnesses.push_back({"oracle_skipped", {{"reason", oracle.witnesses.empty() ? "" : oracle.witnesses.back().kind}}, {}, {}});
      }
      v = finish(std::move(*criterion), n, k);
    } else {
      v = finish(std::move(oracle), n, k);
    }
  }

  if (options.wall_clock) {
    v.wall_clock_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return v;
}

}  // namespace waring
