// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#include "waring/decompose.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_map>

#include "waring/errors.hpp"

namespace waring {

Certificate certify_trace(const TraceGroup& tg, const MatrixOverOrder& m, unsigned max_depth) {
  const ResidueRing& ring = tg.ring();
  const MonogenicOrder& order = ring.parent();
  if (static_cast<int>(m.size()) != tg.n)
    fail(ErrorCode::kDimensionMismatch, "matrix size does not match the trace group");
  if (tg.generators.empty() && tg.group.size() > 1)
    fail(ErrorCode::kInvalidArgument, "trace group carries no generator tuples to certify with");

  const OrderElement trace = mat_trace(order, m);
  const std::uint64_t target = ring.index_of(ring.reduce(trace));
  if (!tg.group.contains_index(target))
    fail(ErrorCode::kNotRepresentable, "trace of M mod " + std::to_string(tg.modulus()) +
                                           " lies outside the trace group, so M is not a sum of " +
                                           std::to_string(tg.k) + "-th powers");

  std::vector<std::uint64_t> gen_index;
  std::vector<std::size_t> gen_id;
  for (std::size_t i = 0; i < tg.generators.size(); ++i) {
    const std::uint64_t idx = ring.index_of(tg.generators[i].value);
    if (idx == 0) continue;
    gen_index.push_back(idx);
    gen_id.push_back(i);
  }

  // Breadth-first search from 0 over the Cayley graph.
  const std::uint64_t size = ring.size();
  std::vector<std::int32_t> via(size, -1);  // generator slot used to reach the node
  std::vector<std::uint64_t> prev(size, 0);
  std::vector<bool> visited(size, false);
  visited[0] = true;
  std::deque<std::uint64_t> frontier{0};
  unsigned depth = 0;
  while (!visited[target]) {
    if (frontier.empty() || depth >= max_depth)
      fail(ErrorCode::kResourceLimit, "certificate search exceeded depth " + std::to_string(max_depth));
    std::deque<std::uint64_t> next;
    for (std::uint64_t node : frontier) {
      for (std::size_t g = 0; g < gen_index.size(); ++g) {
        const std::uint64_t to = ring.add_index(node, gen_index[g]);
        if (visited[to]) continue;
        visited[to] = true;
        via[to] = static_cast<std::int32_t>(g);
        prev[to] = node;
        next.push_back(to);
      }
    }
    frontier = std::move(next);
    ++depth;
  }

  std::vector<std::size_t> path;
  for (std::uint64_t node = target; node != 0; node = prev[node]) path.push_back(gen_id[via[node]]);
  std::reverse(path.begin(), path.end());

  Certificate cert;
  cert.k = tg.k;
  OrderElement rest = trace;
  for (std::size_t id : path) {
    CharPolyCoeffs<MonogenicOrder> e;
    for (const auto& c : tg.generators[id].coeffs) e.push_back(ring.lift(c));
    rest = order.sub(rest, power_sum_newton(order, e, tg.k));
    cert.summands.push_back(std::move(e));
  }
  const Integer kf = factorial(tg.k);
  std::vector<Integer> r;
  for (const auto& c : rest.coords()) {
    if (c % kf != 0) fail(ErrorCode::kInternal, "certificate remainder is not divisible by k!");
    r.push_back(c / kf);
  }
  cert.remainder = OrderElement(std::move(r));
  return cert;
}

Certificate certify_trace(const MonogenicOrder& order, const MatrixOverOrder& m, unsigned k,
                          const ResourceLimits& limits) {
  const TraceGroup tg = compute_trace_group(order, static_cast<int>(m.size()), k, limits);
  return certify_trace(tg, m, limits.max_certificate_depth);
}

bool verify_certificate(const MonogenicOrder& order, const MatrixOverOrder& m, const Certificate& cert) {
  try {
    OrderElement rest = mat_trace(order, m);
    for (const auto& e : cert.summands) {
      if (e.size() != m.size()) return false;
      rest = order.sub(rest, power_sum_newton(order, e, cert.k));
    }
    return order.equal(rest, order.scale(cert.remainder, factorial(cert.k)));
  } catch (const Error&) {
    return false;
  }
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<std::int64_t> flatten(const MatrixOverOrder& m) {
  std::vector<std::int64_t> out;
  for (const auto& e : m.entries())
    for (const auto& c : e.coords()) {
      if (!fits_int64(c))
        fail(ErrorCode::kResourceLimit, "matrix entries exceed 64 bits during decomposition search");
      out.push_back(c.get_si());
    }
  return out;
}

MatrixOverOrder unflatten(const std::vector<std::int64_t>& v, std::size_t n, int degree) {
  std::vector<OrderElement> entries;
  for (std::size_t i = 0; i < n * n; ++i) {
    std::vector<Integer> coords;
    for (int j = 0; j < degree; ++j) coords.emplace_back(static_cast<long>(v[i * degree + j]));
    entries.emplace_back(std::move(coords));
  }
  return MatrixOverOrder(n, std::move(entries));
}

class SumSearch {
 public:
  SumSearch(std::vector<std::vector<std::int64_t>> powers,
            std::unordered_map<std::vector<std::int64_t>, std::size_t, VecHash> lookup,
            std::uint64_t max_ops)
      : powers_(std::move(powers)), lookup_(std::move(lookup)), max_ops_(max_ops) {}

  // Indices into powers_ summing to target with exactly `terms` terms.
  std::optional<std::vector<std::size_t>> find(const std::vector<std::int64_t>& target, unsigned terms) {
    chosen_.clear();
    if (recurse(target, terms, 0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool recurse(const std::vector<std::int64_t>& residual, unsigned terms, std::size_t start) {
    if (terms == 1) {
      if (++ops_ > max_ops_)
        fail(ErrorCode::kResourceLimit, "decomposition search exceeded max_closure_ops");
      auto it = lookup_.find(residual);
      if (it == lookup_.end()) return false;
      chosen_.push_back(it->second);
      return true;
    }
    std::vector<std::int64_t> next(residual.size());
    for (std::size_t i = start; i < powers_.size(); ++i) {
      for (std::size_t c = 0; c < residual.size(); ++c) next[c] = residual[c] - powers_[i][c];
      chosen_.push_back(i);
      if (recurse(next, terms - 1, i)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<std::vector<std::int64_t>> powers_;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, VecHash> lookup_;
  std::vector<std::size_t> chosen_;
  std::uint64_t ops_ = 0;
  std::uint64_t max_ops_;
};

}  // namespace

std::optional<Decomposition> search_decomposition(const MonogenicOrder& order, const MatrixOverOrder& m,
                                                  unsigned k, unsigned entry_bound, unsigned max_terms,
                                                  const ResourceLimits& limits) {
  if (k < 1) fail(ErrorCode::kInvalidArgument, "power k must be >= 1");
  const std::size_t n = m.size();
  const int degree = order.degree();
  for (const auto& e : m.entries())
    if (static_cast<int>(e.degree()) != degree)
      fail(ErrorCode::kDimensionMismatch, "matrix entry does not belong to the order");
  const std::size_t coords = n * n * static_cast<std::size_t>(degree);
  const std::uint64_t radix = 2ULL * entry_bound + 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < coords; ++i) {
    if (count > limits.max_ring_size / radix)
      fail(ErrorCode::kResourceLimit, "decomposition candidate space exceeds max_ring_size");
    count *= radix;
  }

  // Rank r encodes the value 0, 1, -1, 2, -2, ... for r = 0, 1, 2, 3, 4, ...
  auto value_of_rank = [](std::uint64_t r) -> std::int64_t {
    return r % 2 == 1 ? static_cast<std::int64_t>((r + 1) / 2) : -static_cast<std::int64_t>(r / 2);
  };
  std::vector<std::vector<std::int64_t>> candidates;
  candidates.reserve(count);
  std::vector<std::uint64_t> digits(coords, 0);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<std::int64_t> v(coords);
    for (std::size_t i = 0; i < coords; ++i) v[i] = value_of_rank(digits[i]);
    candidates.push_back(std::move(v));
    for (std::size_t pos = coords; pos-- > 0;) {
      if (++digits[pos] < radix) break;
      digits[pos] = 0;
    }
  }
  auto max_abs = [](const std::vector<std::int64_t>& v) {
    std::int64_t best = 0;
    for (auto x : v) best = std::max(best, std::abs(x));
    return best;
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const auto& a, const auto& b) { return max_abs(a) < max_abs(b); });

  std::vector<std::vector<std::int64_t>> powers;
  std::vector<std::size_t> root_of;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, VecHash> lookup;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const MatrixOverOrder a = unflatten(candidates[c], n, degree);
    std::vector<std::int64_t> p = flatten(mat_power(order, a, k));
    if (lookup.count(p)) continue;
    lookup.emplace(p, powers.size());
    powers.push_back(std::move(p));
    root_of.push_back(c);
  }

  const std::vector<std::int64_t> target = flatten(m);
  SumSearch search(std::move(powers), std::move(lookup), limits.max_closure_ops);
  for (unsigned terms = 1; terms <= max_terms; ++terms) {
    const auto found = search.find(target, terms);
    if (!found) continue;
    Decomposition dec;
    dec.k = k;
    MatrixOverOrder sum = MatrixOverOrder::zero(order, n);
    for (std::size_t idx : *found) {
      dec.matrices.push_back(unflatten(candidates[root_of[idx]], n, degree));
      sum = mat_add(order, sum, mat_power(order, dec.matrices.back(), k));
    }
    if (!(sum == m)) fail(ErrorCode::kInternal, "decomposition failed exact re-verification");
    return dec;
  }
  return std::nullopt;
}

CounterexampleReport counterexample_q5(const ResourceLimits& limits) {
  const MonogenicOrder order = MonogenicOrder::quadratic({5, 1});
  CounterexampleReport rep{order, 0, {}, {}, true, {}, {}};

  // beta = a + b alpha  =>  beta^3 = (a^3 + 3ab^2 + b^3) + alpha (3ab(a+b) + 2b^3)
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      const OrderElement beta = order.element({Integer(a), Integer(b)});
      const OrderElement cube = order.pow(beta, 3);
      const Integer c0 = a * a * a + 3 * a * b * b + b * b * b;
      const Integer c1 = 3 * a * b * (a + b) + 2 * b * b * b;
      if (cube[0] != c0 || cube[1] != c1)
        fail(ErrorCode::kInternal, "cube coordinate formula failed at a=" + std::to_string(a) +
                                       ", b=" + std::to_string(b));
      if (c1 % 2 != 0) fail(ErrorCode::kInternal, "alpha-coordinate of a cube is odd");
      ++rep.formula_cases_checked;
    }
  }

  const ResidueRing mod2(order, 2, limits);
  rep.cube_image_mod2 = power_image(mod2, 3);
  for (const auto& c : rep.cube_image_mod2)
    if (c.coords[1] != 0) fail(ErrorCode::kInternal, "a cube mod 2 has odd alpha-coordinate");
  const AdditiveSubgroup closure = additive_closure(mod2, rep.cube_image_mod2, limits);
  rep.cube_closure_mod2 = closure.members();
  rep.alpha_in_cube_closure = closure.contains(mod2.element({0, 1}));
  if (rep.alpha_in_cube_closure) fail(ErrorCode::kInternal, "alpha lies in the closure of cubes mod 2");

  rep.element_waring = element_waring(order, 3);
  if (rep.element_waring.full) fail(ErrorCode::kInternal, "element Waring test claims O_3 = O");

  DecideOptions opts;
  opts.limits = limits;
  rep.matrix_verdict = decide(order, 2, 3, opts);
  if (rep.matrix_verdict.answer != Answer::kYes)
    fail(ErrorCode::kInternal, "2x2 matrices over Z[(1+sqrt 5)/2] are not all sums of cubes");
  return rep;
}

}  // namespace waring
