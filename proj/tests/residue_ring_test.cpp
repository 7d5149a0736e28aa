// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "waring/errors.hpp"
#include "waring/residue_ring.hpp"

namespace waring {
namespace {

using Pairs = std::set<std::pair<std::int64_t, std::int64_t>>;

Pairs as_pairs(const std::vector<ResidueElement>& v) {
  Pairs out;
  for (const auto& e : v) out.insert({e.coords.at(0), e.coords.at(1)});
  return out;
}

const MonogenicOrder kGolden = MonogenicOrder::quadratic({5, 1});  // x^2 - x - 1
const MonogenicOrder kRoot5 = MonogenicOrder::quadratic({5, 2});   // x^2 - 2x - 4, theta = 1 + sqrt 5
const MonogenicOrder kSqrt5 = MonogenicOrder::from_min_poly({-5, 0});
const MonogenicOrder kCubeRoot2 = MonogenicOrder::from_min_poly({-2, 0, 0});

TEST(ResidueRing, ReduceAndIndexing) {
  const ResidueRing r(kGolden, 6);
  EXPECT_EQ(r.size(), 36u);
  EXPECT_EQ(reduce(kGolden.from_int(-1), 6).coords, (std::vector<std::int64_t>{5, 0}));
  for (std::uint64_t i = 0; i < r.size(); ++i) EXPECT_EQ(r.index_of(r.element_at(i)), i);
  EXPECT_EQ(r.element_at(1).coords, (std::vector<std::int64_t>{0, 1}));  // c0 most significant
  for (std::uint64_t i = 0; i < r.size(); ++i)
    for (std::uint64_t j = 0; j < r.size(); ++j)
      EXPECT_EQ(r.add_index(i, j), r.index_of(r.add(r.element_at(i), r.element_at(j))));
}

TEST(ResidueRing, MultiplicationMatchesHandWritten) {
  const oracle::QuadMod hand{-1, -1, 6};
  const ResidueRing r(kGolden, 6);
  for (std::uint64_t i = 0; i < r.size(); ++i)
    for (std::uint64_t j = 0; j < r.size(); ++j) {
      const auto a = r.element_at(i), b = r.element_at(j);
      const auto want = hand.mul({a.coords[0], a.coords[1]}, {b.coords[0], b.coords[1]});
      const auto got = r.mul(a, b);
      EXPECT_EQ(got.coords[0], want.first);
      EXPECT_EQ(got.coords[1], want.second);
    }
}

TEST(ResidueRing, ReductionIsAHomomorphism) {
  std::mt19937_64 rng(11);
  const ResidueRing r(kCubeRoot2, 7);
  for (int t = 0; t < 200; ++t) {
    std::vector<Integer> a(3), b(3);
    for (auto& x : a) x = static_cast<long>(rng() % 2001) - 1000;
    for (auto& x : b) x = static_cast<long>(rng() % 2001) - 1000;
    const auto A = kCubeRoot2.element(a), B = kCubeRoot2.element(b);
    EXPECT_EQ(r.reduce(kCubeRoot2.mul(A, B)), r.mul(r.reduce(A), r.reduce(B)));
    EXPECT_EQ(r.reduce(kCubeRoot2.sub(A, B)), r.sub(r.reduce(A), r.reduce(B)));
  }
}

TEST(ResidueRing, Errors) {
  EXPECT_THROW(ResidueRing(kGolden, 1), Error);
  try {
    ResidueRing(kGolden, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadModulus);
  }
  ResourceLimits tiny;
  tiny.max_ring_size = 35;
  try {
    ResidueRing(kGolden, 6, tiny);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceLimit);
  }
}

TEST(PowerImage, SpecExamples) {
  const ResidueRing golden2(kGolden, 2);
  EXPECT_EQ(as_pairs(power_image(golden2, 3)), (Pairs{{0, 0}, {1, 0}}));
  const ResidueRing sqrt5_2(kSqrt5, 2);
  EXPECT_EQ(as_pairs(power_image(sqrt5_2, 2)), (Pairs{{0, 0}, {1, 0}}));
  const ResidueRing golden6(kGolden, 6);
  EXPECT_EQ(power_image(golden6, 1).size(), golden6.size());
}

TEST(PowerImage, MatchesHandEnumeration) {
  for (auto [c0, c1] : {std::pair{-1, -1}, std::pair{1, 0}, std::pair{-5, 0}, std::pair{-3, 0}}) {
    const auto order = MonogenicOrder::from_min_poly({c0, c1});
    for (std::int64_t m : {2, 3, 4, 6}) {
      const oracle::QuadMod hand{c0, c1, m};
      for (unsigned q : {2u, 3u, 4u}) {
        Pairs want;
        for (std::int64_t a = 0; a < m; ++a)
          for (std::int64_t b = 0; b < m; ++b) {
            oracle::QuadMod::El p{1, 0};
            for (unsigned i = 0; i < q; ++i) p = hand.mul(p, {a, b});
            want.insert(p);
          }
        EXPECT_EQ(as_pairs(power_image(ResidueRing(order, m), q)), want);
      }
    }
  }
}

TEST(AdditiveClosure, SpecExamples) {
  const ResidueRing z6(MonogenicOrder::integers(), 6);
  EXPECT_EQ(additive_closure(z6, {}).size(), 1u);
  const std::vector<ResidueElement> one{z6.one()};
  EXPECT_TRUE(additive_closure(z6, one).is_full());

  const ResidueRing golden2(kGolden, 2);
  const auto cubes = power_image(golden2, 3);
  const auto closure = additive_closure(golden2, cubes);
  EXPECT_EQ(as_pairs(closure.members()), (Pairs{{0, 0}, {1, 0}}));
  EXPECT_FALSE(closure.contains(golden2.element({0, 1})));
}

TEST(AdditiveClosure, MatchesBreadthFirstOracle) {
  std::mt19937_64 rng(5);
  const ResidueRing r(kGolden, 12);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ResidueElement> gens;
    const int count = static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) gens.push_back(r.element_at(rng() % r.size()));
    std::set<ResidueElement> want{r.zero()};
    std::vector<ResidueElement> frontier{r.zero()};
    while (!frontier.empty()) {
      const auto x = frontier.back();
      frontier.pop_back();
      for (const auto& g : gens)
        if (want.insert(r.add(x, g)).second) frontier.push_back(r.add(x, g));
    }
    const auto group = additive_closure(r, gens);
    const auto members = group.members();
    EXPECT_EQ(std::set<ResidueElement>(members.begin(), members.end()), want);
    EXPECT_TRUE(std::is_sorted(members.begin(), members.end()));
    // The recorded generators regenerate the group.
    EXPECT_EQ(additive_closure(r, group.generators()).size(), group.size());
  }
}

TEST(AdditiveClosure, BudgetIsEnforced) {
  const ResidueRing r(kGolden, 24);
  ResourceLimits limits;
  limits.max_closure_ops = 10;
  const std::vector<ResidueElement> gens{r.one(), r.element({0, 1})};
  try {
    additive_closure(r, gens, limits);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceLimit);
  }
}

TEST(Frobenius, SpecExamples) {
  EXPECT_TRUE(is_power_surjective(kGolden, 3));
  EXPECT_FALSE(is_power_surjective(kSqrt5, 2));
  EXPECT_FALSE(is_power_surjective(kCubeRoot2, 3));
  EXPECT_TRUE(frobenius_kernel_check(kGolden, 3));
  EXPECT_FALSE(frobenius_kernel_check(kSqrt5, 2));
  for (std::int64_t p : {2, 3, 5, 7, 11}) {
    EXPECT_TRUE(is_power_surjective(MonogenicOrder::integers(), p));
    EXPECT_TRUE(frobenius_kernel_check(MonogenicOrder::integers(), p));
  }
  EXPECT_FALSE(frobenius_kernel_check(kRoot5, 2));
}

TEST(Frobenius, EquivalentToCoprimality) {
  for (long d : {-1, 2, -2, 3, 5, -5, 13})
    for (long f = 1; f <= 3; ++f) {
      const auto o = MonogenicOrder::quadratic({d, f});
      for (std::int64_t p : {2, 3, 5, 7}) {
        const bool coprime = gcd(o.disc(), Integer(static_cast<long>(p))) == 1;
        EXPECT_EQ(is_power_surjective(o, p), coprime) << o.label() << " p=" << p;
        EXPECT_EQ(frobenius_kernel_check(o, p), coprime) << o.label() << " p=" << p;
      }
    }
}

}  // namespace
}  // namespace waring
