#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "discrim/charsum.h"
#include "discrim/errors.h"

namespace discrim {
namespace {

// Double loop over (x, y) with powers of g computed from scratch.
std::vector<GroupElement> naive_A(u64 p, u64 g) {
  std::vector<GroupElement> set;
  for (u64 x = 0; x < p - 1; ++x) {
    for (u64 y = 0; y < p - 1; ++y) {
      const i64 lhs = static_cast<i64>(3 * modpow(g, x, p)) - static_cast<i64>(modpow(g, y, p));
      if (reduce(lhs - 30, p) == 0) set.emplace_back(x, y);
    }
  }
  return set;
}

// max |S| over nontrivial characters, summing cos/sin straight from the angle.
double naive_max(const std::vector<GroupElement>& set, u64 order) {
  double best = 0.0;
  for (u64 s = 0; s < order; ++s) {
    for (u64 t = 0; t < order; ++t) {
      if (s == 0 && t == 0) continue;
      double re = 0.0, im = 0.0;
      for (const auto& [x, y] : set) {
        const double angle = 2.0 * M_PI * static_cast<double>((s * x + t * y) % order) /
                             static_cast<double>(order);
        re += std::cos(angle);
        im += std::sin(angle);
      }
      best = std::max(best, std::hypot(re, im));
    }
  }
  return best;
}

TEST(BuildA, Examples) {
  EXPECT_EQ(build_A(7, 3).size(), 5u);
  EXPECT_EQ(build_A(11, 2).size(), 9u);
  EXPECT_EQ(build_A(97), naive_A(97, smallest_primitive_root(97)));
  EXPECT_THROW(build_A(5), std::invalid_argument);
  EXPECT_THROW(build_A(7, 2), std::invalid_argument);
  EXPECT_THROW(build_A(15), std::invalid_argument);
}

TEST(BuildA, SizeIsPMinusTwo) {
  for (u64 p : primes_up_to(500)) {
    if (p <= 5) continue;
    const auto a = build_A(p);
    ASSERT_EQ(a.size(), p - 2) << p;
    ASSERT_TRUE(std::is_sorted(a.begin(), a.end()));
    if (p < 60) {
      ASSERT_EQ(a, naive_A(p, smallest_primitive_root(p))) << p;
    }
  }
}

TEST(CharSum, Singleton) {
  const std::vector<GroupElement> one = {{0, 0}};
  for (auto method : {CharSumMethod::kDirect, CharSumMethod::kDft}) {
    EXPECT_NEAR(max_nontrivial_char_sum(one, 6, method).value, 1.0, 1e-12);
  }
  EXPECT_NEAR(std::abs(character_sum(one, 6, 2, 5)), 1.0, 1e-15);
}

TEST(CharSum, MethodsAgreeWithNaive) {
  for (u64 p : {7, 11, 13, 23, 31}) {
    const auto a = build_A(p);
    const double naive = naive_max(a, p - 1);
    const auto direct = max_nontrivial_char_sum(a, p - 1, CharSumMethod::kDirect);
    const auto dft = max_nontrivial_char_sum(a, p - 1, CharSumMethod::kDft);
    EXPECT_NEAR(direct.value, naive, 1e-9) << p;
    EXPECT_NEAR(dft.value, naive, 1e-9) << p;
    EXPECT_LE(direct.error_margin, 1e-9);
  }
}

// The nontrivial sums are Jacobi sums, so the maximum is sqrt(p) exactly and
// the strict upper bound never holds.
TEST(CharSum, MaximumIsSqrtP) {
  const auto v7 = max_nontrivial_char_sum(build_A(7), 6);
  EXPECT_NEAR(v7.value, std::sqrt(7.0), v7.error_margin + 1e-15);
  const double v101 = max_nontrivial_char_sum(build_A(101), 100).value;
  EXPECT_GE(v101, std::sqrt(99.0) - 1e-6);
  EXPECT_NEAR(v101, std::sqrt(101.0), 1e-9);
  for (u64 p : primes_up_to(300)) {
    if (p <= 5) continue;
    const auto report = charsum_report(p);
    ASSERT_TRUE(report.upper_bound_attained()) << p;
    ASSERT_FALSE(report.upper_bound_holds()) << p;
    ASSERT_TRUE(report.lower_bound_holds()) << p;
    ASSERT_EQ(report.setA_size, p - 2);
    ASSERT_LT(report.identity_residual, 1e-6 * static_cast<double>((p - 1) * (p - 1)));
  }
}

TEST(CharSum, SizeGuards) {
  std::vector<GroupElement> one = {{0, 0}};
  EXPECT_THROW(max_nontrivial_char_sum(one, 501, CharSumMethod::kDirect), SizeLimitExceeded);
  EXPECT_THROW(max_nontrivial_char_sum(one, 4097), SizeLimitExceeded);
  EXPECT_NO_THROW(max_nontrivial_char_sum(one, 600));
}

TEST(PairCount, Identity) {
  const auto a7 = build_A(7);
  EXPECT_LT(pair_count_identity_check(a7, a7, 6).residual, 1e-6);

  const std::vector<GroupElement> origin = {{0, 0}};
  const auto a11 = build_A(11);
  const bool has_origin = std::binary_search(a11.begin(), a11.end(), GroupElement{0, 0});
  EXPECT_EQ(pair_count_identity_check(a11, origin, 10).direct_count, has_origin ? 1u : 0u);

  std::mt19937_64 rng(3);
  std::set<GroupElement> picked;
  while (picked.size() < 10) picked.emplace(rng() % 10, rng() % 10);
  const std::vector<GroupElement> b(picked.begin(), picked.end());
  const auto check = pair_count_identity_check(a11, b, 10);
  EXPECT_LT(check.residual, 1e-6);
  u64 direct = 0;
  for (const auto& b1 : b) {
    for (const auto& b2 : b) {
      const GroupElement sum{(b1.first + b2.first) % 10, (b1.second + b2.second) % 10};
      direct += std::binary_search(a11.begin(), a11.end(), sum) ? 1 : 0;
    }
  }
  EXPECT_EQ(check.direct_count, direct);
}

TEST(PairCount, RandomInstances) {
  std::mt19937_64 rng(99);
  const u64 primes[] = {7, 11, 13, 23, 47};
  for (int i = 0; i < 50; ++i) {
    const u64 p = primes[i % 5];
    const u64 order = p - 1;
    std::vector<GroupElement> b;
    for (std::uint32_t x = 0; x < order; ++x) {
      for (std::uint32_t y = 0; y < order; ++y) {
        if (rng() % 4 == 0) b.emplace_back(x, y);
      }
    }
    const auto check = pair_count_identity_check(build_A(p), b, order);
    ASSERT_LT(check.residual, 1e-6 * static_cast<double>(order * order)) << p;
  }
}

// Greedy B with (B + B) missing A.
std::vector<GroupElement> greedy_b(u64 p) {
  const auto a = build_A(p);
  const u64 order = p - 1;
  auto in_a = [&](GroupElement e) { return std::binary_search(a.begin(), a.end(), e); };
  std::vector<GroupElement> b;
  for (std::uint32_t x = 0; x < order; ++x) {
    for (std::uint32_t y = 0; y < order; ++y) {
      const GroupElement c{x, y};
      bool ok = !in_a({(2 * x) % order, (2 * y) % order});
      for (const auto& e : b) {
        if (!ok) break;
        ok = !in_a({(e.first + x) % order, (e.second + y) % order});
      }
      if (ok) b.push_back(c);
    }
  }
  return b;
}

TEST(BplusB, Bound) {
  for (u64 p : {7, 11, 13, 29}) {
    const auto a = build_A(p);
    for (std::uint32_t x = 0; x < p - 1; ++x) {
      const GroupElement single{x, 0};
      const GroupElement twice{(2 * x) % static_cast<std::uint32_t>(p - 1), 0};
      if (!std::binary_search(a.begin(), a.end(), twice)) {
        EXPECT_TRUE(bplusb_bound_check(p, std::vector<GroupElement>{single}));
        break;
      }
    }
  }
  EXPECT_TRUE(bplusb_bound_check(11, greedy_b(11)));
  EXPECT_TRUE(bplusb_bound_check(13, greedy_b(13)));
}

TEST(BplusB, RejectsViolation) {
  const auto a = build_A(11);
  // b + b = a for b = a / 2 when both coordinates of a are even.
  GroupElement half{0, 0};
  bool found = false;
  for (const auto& e : a) {
    if (e.first % 2 == 0 && e.second % 2 == 0) {
      half = {e.first / 2, e.second / 2};
      found = true;
      break;
    }
  }
  ASSERT_TRUE(found);
  try {
    bplusb_bound_check(11, std::vector<GroupElement>{half});
    FAIL() << "expected DisjointnessViolation";
  } catch (const DisjointnessViolation& e) {
    EXPECT_EQ(e.b1, half);
    EXPECT_EQ(e.b2, half);
    EXPECT_TRUE(std::binary_search(a.begin(), a.end(), e.a));
  }
}

}  // namespace
}  // namespace discrim
