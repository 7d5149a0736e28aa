// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "waring/limits.hpp"
#include "waring/order.hpp"

namespace waring {

// Canonical coordinates in [0, m) on the power basis.
struct ResidueElement {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const ResidueElement&, const ResidueElement&) = default;
};

// Coordinatewise reduction of an exact element; throws kBadModulus if m < 2.
ResidueElement reduce(const OrderElement& a, std::int64_t m);

// R/mR for a monogenic order R. Elements are enumerated lexicographically on
// their coordinate vectors: index = c0*m^(n-1) + c1*m^(n-2) + ... + c_{n-1}.
class ResidueRing {
 public:
  using value_type = ResidueElement;

  // Throws kBadModulus when m < 2 and kResourceLimit when m^n exceeds
  // limits.max_ring_size.
  ResidueRing(MonogenicOrder parent, std::int64_t modulus,
              const ResourceLimits& limits = {});

  const MonogenicOrder& parent() const { return parent_; }
  std::int64_t modulus() const { return m_; }
  int degree() const { return n_; }
  std::uint64_t size() const { return size_; }

  ResidueElement zero() const;
  ResidueElement one() const { return from_int(1); }
  ResidueElement from_int(std::int64_t c) const;
  ResidueElement reduce(const OrderElement& a) const;
  ResidueElement element(std::vector<std::int64_t> coords) const;  // reduces each coordinate
  // Representative with coordinates in [0, m).
  OrderElement lift(const ResidueElement& a) const;

  ResidueElement add(const ResidueElement& a, const ResidueElement& b) const;
  ResidueElement sub(const ResidueElement& a, const ResidueElement& b) const;
  ResidueElement neg(const ResidueElement& a) const;
  ResidueElement mul(const ResidueElement& a, const ResidueElement& b) const;
  ResidueElement scale(const ResidueElement& a, std::int64_t c) const;
  ResidueElement pow(const ResidueElement& a, std::uint64_t e) const;
  bool equal(const ResidueElement& a, const ResidueElement& b) const { return a == b; }
  bool is_zero(const ResidueElement& a) const;

  std::uint64_t index_of(const ResidueElement& a) const;
  ResidueElement element_at(std::uint64_t index) const;
  // Addition directly on indices (digitwise mod m).
  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const;

 private:
  MonogenicOrder parent_;
  std::int64_t m_;
  int n_;
  std::uint64_t size_;
  std::vector<std::int64_t> lower_mod_;  // min_poly lower coefficients mod m
};

// A subgroup of (R/mR, +). Holds a membership bitmap over ring indices; grows
// by adjoining generators one at a time.
class AdditiveSubgroup {
 public:
  explicit AdditiveSubgroup(ResidueRing ring, std::uint64_t max_closure_ops = ResourceLimits{}.max_closure_ops);

  const ResidueRing& ring() const { return ring_; }
  std::uint64_t size() const { return members_.size(); }
  bool is_full() const { return members_.size() == ring_.size(); }
  bool contains(const ResidueElement& a) const { return in_[ring_.index_of(a)]; }
  bool contains_index(std::uint64_t i) const { return in_[i]; }

  // Replaces the group by the one generated by it and g. Returns whether it
  // grew. Throws kResourceLimit when the closure budget runs out.
  bool adjoin(const ResidueElement& g);
  bool adjoin_index(std::uint64_t g);

  // The generators that enlarged the group, in the order they were adjoined.
  // Together they generate it.
  const std::vector<ResidueElement>& generators() const { return generators_; }
  // Member indices in ascending (lexicographic) order.
  std::vector<std::uint64_t> member_indices() const;
  std::vector<ResidueElement> members() const;
  std::uint64_t closure_ops() const { return ops_; }

 private:
  ResidueRing ring_;
  std::vector<bool> in_;
  std::vector<std::uint64_t> members_;  // insertion order
  std::vector<ResidueElement> generators_;
  std::uint64_t ops_ = 0;
  std::uint64_t max_ops_;
};

// Sorted image { x^q : x in ring }.
std::vector<ResidueElement> power_image(const ResidueRing& ring, std::uint64_t q);

AdditiveSubgroup additive_closure(const ResidueRing& ring, std::span<const ResidueElement> gens,
                                  const ResourceLimits& limits = {});

// Whether x -> x^p is onto R/pR (tested as injectivity).
bool is_power_surjective(const MonogenicOrder& order, std::int64_t p,
                         const ResourceLimits& limits = {});

// Whether x^p in pR forces x in pR.
bool frobenius_kernel_check(const MonogenicOrder& order, std::int64_t p,
                            const ResourceLimits& limits = {});

}  // namespace waring
