// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#include "waring/residue_ring.hpp"

#include <algorithm>
#include <string>

#include "waring/errors.hpp"

namespace waring {

namespace {

// Keeps every product of two residues below 2^63.
constexpr std::int64_t kMaxModulus = 3'037'000'499;

}  // namespace

ResidueElement reduce(const OrderElement& a, std::int64_t m) {
  if (m < 2) fail(ErrorCode::kBadModulus, "modulus must be >= 2, got " + std::to_string(m));
  ResidueElement r;
  r.coords.reserve(a.degree());
  for (const auto& c : a.coords()) r.coords.push_back(floor_mod(c, m));
  return r;
}

ResidueRing::ResidueRing(MonogenicOrder parent, std::int64_t modulus, const ResourceLimits& limits)
    : parent_(std::move(parent)), m_(modulus), n_(parent_.degree()), size_(1) {
  if (m_ < 2) fail(ErrorCode::kBadModulus, "modulus must be >= 2, got " + std::to_string(m_));
  if (m_ > kMaxModulus)
    fail(ErrorCode::kResourceLimit, "modulus " + std::to_string(m_) + " too large");
  for (int i = 0; i < n_; ++i) {
    if (size_ > limits.max_ring_size / static_cast<std::uint64_t>(m_))
      fail(ErrorCode::kResourceLimit,
           "residue ring of size " + std::to_string(m_) + "^" + std::to_string(n_) +
               " exceeds max_ring_size " + std::to_string(limits.max_ring_size));
    size_ *= static_cast<std::uint64_t>(m_);
  }
  for (const auto& c : parent_.lower_coeffs()) lower_mod_.push_back(floor_mod(c, m_));
}

ResidueElement ResidueRing::zero() const {
  return ResidueElement{std::vector<std::int64_t>(n_, 0)};
}

ResidueElement ResidueRing::from_int(std::int64_t c) const {
  ResidueElement r = zero();
  r.coords[0] = floor_mod(c, m_);
  return r;
}

ResidueElement ResidueRing::reduce(const OrderElement& a) const {
  if (static_cast<int>(a.degree()) != n_)
    fail(ErrorCode::kDimensionMismatch, "element degree does not match residue ring");
  return waring::reduce(a, m_);
}

ResidueElement ResidueRing::element(std::vector<std::int64_t> coords) const {
  if (static_cast<int>(coords.size()) != n_)
    fail(ErrorCode::kDimensionMismatch, "residue element has wrong number of coordinates");
  for (auto& c : coords) c = floor_mod(c, m_);
  return ResidueElement{std::move(coords)};
}

OrderElement ResidueRing::lift(const ResidueElement& a) const {
  std::vector<Integer> v;
  v.reserve(a.coords.size());
  for (auto c : a.coords) v.emplace_back(static_cast<long>(c));
  return OrderElement(std::move(v));
}

ResidueElement ResidueRing::add(const ResidueElement& a, const ResidueElement& b) const {
  ResidueElement r = a;
  for (int i = 0; i < n_; ++i) {
    r.coords[i] += b.coords[i];
    if (r.coords[i] >= m_) r.coords[i] -= m_;
  }
  return r;
}

ResidueElement ResidueRing::sub(const ResidueElement& a, const ResidueElement& b) const {
  ResidueElement r = a;
  for (int i = 0; i < n_; ++i) {
    r.coords[i] -= b.coords[i];
    if (r.coords[i] < 0) r.coords[i] += m_;
  }
  return r;
}

ResidueElement ResidueRing::neg(const ResidueElement& a) const {
  ResidueElement r = a;
  for (auto& c : r.coords) c = c == 0 ? 0 : m_ - c;
  return r;
}

ResidueElement ResidueRing::mul(const ResidueElement& a, const ResidueElement& b) const {
  const int n = n_;
  std::vector<std::int64_t> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      prod[i + j] = (prod[i + j] + a.coords[i] * b.coords[j]) % m_;
    }
  }
  for (int j = 2 * n - 2; j >= n; --j) {
    const std::int64_t c = prod[j];
    if (c == 0) continue;
    prod[j] = 0;
    for (int i = 0; i < n; ++i) {
      // subtract c * lower_i, keeping the value in [0, m)
      prod[j - n + i] = floor_mod(prod[j - n + i] - (c * lower_mod_[i]) % m_, m_);
    }
  }
  prod.resize(n);
  return ResidueElement{std::move(prod)};
}

ResidueElement ResidueRing::scale(const ResidueElement& a, std::int64_t c) const {
  const std::int64_t cm = floor_mod(c, m_);
  ResidueElement r = a;
  for (auto& x : r.coords) x = (x * cm) % m_;
  return r;
}

ResidueElement ResidueRing::pow(const ResidueElement& a, std::uint64_t e) const {
  ResidueElement result = one();
  ResidueElement base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool ResidueRing::is_zero(const ResidueElement& a) const {
  return std::all_of(a.coords.begin(), a.coords.end(), [](std::int64_t c) { return c == 0; });
}

std::uint64_t ResidueRing::index_of(const ResidueElement& a) const {
  std::uint64_t idx = 0;
  for (auto c : a.coords) idx = idx * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(c);
  return idx;
}

ResidueElement ResidueRing::element_at(std::uint64_t index) const {
  ResidueElement r = zero();
  const auto m = static_cast<std::uint64_t>(m_);
  for (int i = n_ - 1; i >= 0; --i) {
    r.coords[i] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
  return r;
}

std::uint64_t ResidueRing::add_index(std::uint64_t a, std::uint64_t b) const {
  const auto m = static_cast<std::uint64_t>(m_);
  std::uint64_t out = 0, place = 1;
  for (int i = 0; i < n_; ++i) {
    std::uint64_t d = a % m + b % m;
    if (d >= m) d -= m;
    out += d * place;
    place *= m;
    a /= m;
    b /= m;
  }
  return out;
}

AdditiveSubgroup::AdditiveSubgroup(ResidueRing ring, std::uint64_t max_closure_ops)
    : ring_(std::move(ring)), in_(ring_.size(), false), max_ops_(max_closure_ops) {
  in_[0] = true;
  members_.push_back(0);
}

bool AdditiveSubgroup::adjoin(const ResidueElement& g) { return adjoin_index(ring_.index_of(g)); }

bool AdditiveSubgroup::adjoin_index(std::uint64_t g) {
  if (in_[g]) return false;
  generators_.push_back(ring_.element_at(g));
  // New group = union of the cosets H + j*g for j = 0 .. ord-1, where ord is
  // the least j with j*g in H.
  const std::size_t base = members_.size();
  std::uint64_t cur = g;
  while (!in_[cur]) {
    ops_ += base;
    if (ops_ > max_ops_)
      fail(ErrorCode::kResourceLimit,
           "additive closure exceeded max_closure_ops " + std::to_string(max_ops_));
    for (std::size_t i = 0; i < base; ++i) {
      const std::uint64_t x = ring_.add_index(members_[i], cur);
      in_[x] = true;
      members_.push_back(x);
    }
    cur = ring_.add_index(cur, g);
  }
  return true;
}

std::vector<std::uint64_t> AdditiveSubgroup::member_indices() const {
  std::vector<std::uint64_t> out(members_);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ResidueElement> AdditiveSubgroup::members() const {
  std::vector<ResidueElement> out;
  out.reserve(members_.size());
  for (auto i : member_indices()) out.push_back(ring_.element_at(i));
  return out;
}

std::vector<ResidueElement> power_image(const ResidueRing& ring, std::uint64_t q) {
  std::vector<bool> hit(ring.size(), false);
  for (std::uint64_t i = 0; i < ring.size(); ++i)
    hit[ring.index_of(ring.pow(ring.element_at(i), q))] = true;
  std::vector<ResidueElement> out;
  for (std::uint64_t i = 0; i < ring.size(); ++i)
    if (hit[i]) out.push_back(ring.element_at(i));
  return out;
}

AdditiveSubgroup additive_closure(const ResidueRing& ring, std::span<const ResidueElement> gens,
                                  const ResourceLimits& limits) {
  AdditiveSubgroup group(ring, limits.max_closure_ops);
  for (const auto& g : gens) {
    if (group.is_full()) break;
    group.adjoin(g);
  }
  return group;
}

bool is_power_surjective(const MonogenicOrder& order, std::int64_t p, const ResourceLimits& limits) {
  const ResidueRing ring(order, p, limits);
  std::vector<bool> seen(ring.size(), false);
  for (std::uint64_t i = 0; i < ring.size(); ++i) {
    const std::uint64_t img = ring.index_of(ring.pow(ring.element_at(i), static_cast<std::uint64_t>(p)));
    if (seen[img]) return false;
    seen[img] = true;
  }
  return true;
}

bool frobenius_kernel_check(const MonogenicOrder& order, std::int64_t p, const ResourceLimits& limits) {
  const ResidueRing ring(order, p, limits);
  for (std::uint64_t i = 1; i < ring.size(); ++i) {
    if (ring.is_zero(ring.pow(ring.element_at(i), static_cast<std::uint64_t>(p)))) return false;
  }
  return true;
}

}  // namespace waring
