#include <gtest/gtest.h>
#include <mpfr.h>

#include <cmath>

#include "discrim/census.h"
#include "discrim/dynamics.h"
#include "discrim/exact.h"

namespace discrim {
namespace {

u64 naive_order(u64 a, u64 p) {
  u64 x = a % p;
  for (u64 t = 1;; ++t) {
    if (x == 1) return t;
    x = x * a % p;
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_prime(5).cls, PrimeClass::kP1);
  EXPECT_EQ(classify_prime(11).cls, PrimeClass::kP2);
  EXPECT_EQ(classify_prime(7).cls, PrimeClass::kP3);
  EXPECT_EQ(classify_prime(13).cls, PrimeClass::kNone);
  EXPECT_THROW(classify_prime(3), std::invalid_argument);
  EXPECT_THROW(classify_prime(15), std::invalid_argument);
}

TEST(Classify, ListingsUpTo300) {
  std::vector<u64> lists[4];
  for (const auto& r : classify_primes(300)) lists[static_cast<int>(r.cls)].push_back(r.p);
  EXPECT_EQ(lists[0], (std::vector<u64>{5, 17, 29, 53, 89, 101, 113, 137, 149, 173, 197, 233, 257,
                                        269, 281, 293}));
  EXPECT_EQ(lists[1], (std::vector<u64>{11, 23, 47, 59, 71, 83, 107, 131, 167, 179, 191, 227, 239,
                                        251, 263}));
  EXPECT_EQ(lists[2], (std::vector<u64>{7, 19, 31, 43, 79, 127, 139, 163, 199, 211, 223, 283}));
}

TEST(Classify, PartitionMatchesOrderOfNine) {
  const auto records = classify_primes(100000, 2);
  for (const auto& r : records) {
    const bool in_p = 2 * mult_order(9, r.p) == r.p - 1;
    ASSERT_EQ(in_p, r.cls != PrimeClass::kNone) << r.p;
    if (r.p < 20000) {
      ASSERT_EQ(r.ord3, naive_order(3, r.p)) << r.p;
    }
    const bool p1 = r.p % 4 == 1 && r.ord3 == r.p - 1;
    const bool p2 = r.p % 4 == 3 && 2 * r.ord3 == r.p - 1;
    const bool p3 = r.p % 4 == 3 && r.ord3 == r.p - 1;
    ASSERT_EQ(in_p, p1 + p2 + p3 == 1) << r.p;
  }
}

TEST(Census, SmallX) {
  const auto report = census_scan(300);
  EXPECT_EQ(report.counts[0], 16u);
  EXPECT_EQ(report.counts[1], 15u);
  EXPECT_EQ(report.counts[2], 12u);
  EXPECT_EQ(report.prime_count, 62u);
  EXPECT_TRUE(report.counts_consistent());
}

TEST(Census, MillionWithinTolerance) {
  CensusConfig config;
  config.workers = 2;
  const auto report = census_scan(1000000, config);
  EXPECT_EQ(report.prime_count, 78498u);
  EXPECT_TRUE(report.counts_consistent());
  EXPECT_TRUE(report.within_tolerance());
  EXPECT_NEAR(report.predicted[0], 0.224373488, 1e-9);
  EXPECT_NEAR(report.predicted[2], 0.149582325, 1e-9);
  CensusConfig serial;
  EXPECT_EQ(census_scan(1000000, serial), report);
}

TEST(Fset, Examples) {
  const auto b1 = fset_member_interval(1);
  EXPECT_FALSE(b1.member);
  ASSERT_TRUE(b1.witness_exponent.has_value());
  EXPECT_EQ(*b1.witness_exponent, 2u);
  EXPECT_TRUE(fset_member_interval(2).member);
  const auto b4 = fset_member_interval(4);
  EXPECT_FALSE(b4.member);
  EXPECT_EQ(*b4.witness_exponent, 9u);
  const bool expected[6] = {false, true, true, false, true, true};
  for (u64 b = 1; b <= 6; ++b) EXPECT_EQ(fset_member_weyl(b), expected[b - 1]) << b;
  EXPECT_EQ(fset_count(6).count, 4u);
  EXPECT_EQ(fset_count(1).count, 0u);
}

TEST(Fset, IntervalMatchesExact) {
  FsetScanner scanner;
  for (u64 b = 1; b <= 3000; ++b) {
    const FsetRecord fast = scanner.next();
    const FsetRecord exact = fset_member_exact(b);
    ASSERT_EQ(fast, exact) << b;
    if (!exact.member) {
      const BigInt two_k = BigInt(1) << *exact.witness_exponent;
      const BigInt power = boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(b));
      ASSERT_LE(4 * power, 5 * two_k);
      ASSERT_LE(two_k, power);
    }
  }
}

TEST(Fset, WeylMatchesInterval) {
  const auto records = fset_scan(100000);
  for (u64 b = 1; b <= records.size(); ++b) {
    ASSERT_EQ(fset_member_weyl(b), records[b - 1].member) << b;
  }
  const auto count = fset_count(100000);
  EXPECT_NEAR(count.ratio, 0.6781, 0.01);
  EXPECT_NEAR(count.beta, 3.0 - std::log2(5.0), 1e-15);
}

// The 192-bit constant is the floor of frac(log2 5) * 2^192.
TEST(Fset, WeylConstantCertified) {
  mpfr_t value;
  mpfr_init2(value, 512);
  mpfr_set_ui(value, 5, MPFR_RNDN);
  mpfr_log2(value, value, MPFR_RNDD);
  mpfr_sub_ui(value, value, 2, MPFR_RNDD);
  mpfr_mul_2ui(value, value, 192, MPFR_RNDD);
  mpz_t floor_value;
  mpz_init(floor_value);
  mpfr_get_z(floor_value, value, MPFR_RNDD);
  char* digits = mpz_get_str(nullptr, 16, floor_value);
  std::string hex(digits);
  free(digits);
  mpz_clear(floor_value);
  mpfr_clear(value);

  char expected[49];
  std::snprintf(expected, sizeof(expected), "%016llx%016llx%016llx",
                static_cast<unsigned long long>(kLog2FiveFraction[0]),
                static_cast<unsigned long long>(kLog2FiveFraction[1]),
                static_cast<unsigned long long>(kLog2FiveFraction[2]));
  EXPECT_EQ(std::string(48 - hex.size(), '0') + hex, std::string(expected));
}

}  // namespace
}  // namespace discrim
