#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "discrim/census.h"
#include "discrim/dynamics.h"
#include "discrim/errors.h"
#include "discrim/sequences.h"

namespace discrim {
namespace {

const SequenceSpec kSalajan = SequenceSpec::salajan();

// Largest k with u_1..u_k pairwise distinct mod m, by quadratic comparison.
u64 naive_iota(u64 m) {
  std::vector<u64> seen;
  for (u64 j = 1;; ++j) {
    const u64 r = salajan_term_mod(j, m);
    if (std::find(seen.begin(), seen.end(), r) != seen.end()) return j - 1;
    seen.push_back(r);
  }
}

TEST(Period, Examples) {
  EXPECT_EQ(period_brute(kSalajan, 5), (PeriodInfo{5, 1, 4}));
  EXPECT_EQ(period_brute(kSalajan, 9), (PeriodInfo{9, 2, 2}));
  EXPECT_EQ(period_brute(kSalajan, 7), (PeriodInfo{7, 1, 6}));
  EXPECT_EQ(salajan_period_formula(11).period, 10u);
  for (u64 e = 1; e <= 20; ++e) {
    EXPECT_EQ(salajan_period_formula(u64{1} << e), (PeriodInfo{u64{1} << e, 1, u64{1} << e}));
  }
  u64 three = 1;
  for (u64 e = 1; e <= 10; ++e) {
    three *= 3;
    EXPECT_EQ(salajan_period_formula(three), (PeriodInfo{three, e, 2}));
  }
}

TEST(Period, BruteMatchesDirectIteration) {
  for (u64 d = 2; d <= 300; ++d) {
    std::vector<u64> v = stream_residues(kSalajan, d, 4 * d + 10);
    const PeriodInfo info = period_brute(kSalajan, d);
    const u64 n0 = info.pre_period;
    const u64 k = info.period;
    for (u64 n = n0; n + k <= v.size(); ++n) ASSERT_EQ(v[n - 1], v[n + k - 1]) << d;
    // Minimality of k and of the pre-period.
    for (u64 smaller = 1; smaller < k; ++smaller) {
      if (k % smaller != 0) continue;
      bool periodic = true;
      for (u64 n = n0; n + smaller <= v.size() && periodic; ++n) {
        periodic = v[n - 1] == v[n + smaller - 1];
      }
      ASSERT_FALSE(periodic) << d;
    }
    if (n0 > 1) {
      ASSERT_NE(v[n0 - 2], v[n0 + k - 2]) << d;
    }
  }
}

TEST(Period, FormulaMatchesBrute) {
  for (u64 d = 2; d <= 5000; ++d) ASSERT_EQ(period_brute(kSalajan, d), salajan_period_formula(d)) << d;
}

TEST(Period, LcmOverCoprimeFactors) {
  for (u64 d1 = 2; d1 <= 300; ++d1) {
    for (u64 d2 = d1 + 1; d2 <= 300; d2 += 7) {
      if (gcd(d1, d2) != 1 || (d1 * d2) % 9 == 0) continue;
      ASSERT_EQ(salajan_period_formula(d1 * d2).period,
                lcm(period_brute(kSalajan, d1).period, period_brute(kSalajan, d2).period))
          << d1 << "*" << d2;
    }
  }
}

TEST(Period, DivisibilityAndSize) {
  std::vector<u64> rho(10001);
  for (u64 d = 2; d <= 10000; ++d) {
    rho[d] = salajan_period_formula(d).period;
    ASSERT_LE(rho[d], d);
    if (d % 9 != 0) {
      ASSERT_EQ(rho[d] % 2, 0u) << d;
    }
  }
  for (u64 d2 = 2; d2 <= 2000; ++d2) {
    for (u64 d1 = 2; d1 <= d2; ++d1) {
      if (d2 % d1 == 0) {
        ASSERT_EQ(rho[d2] % rho[d1], 0u) << d1 << " | " << d2;
      }
    }
  }
}

TEST(Period, LiftingOverPrimePowers) {
  for (u64 p : primes_up_to(10000)) {
    if (p == 2 || p == 3) continue;
    const u64 rho_p = salajan_period_formula(p).period;
    const u64 rho_p2 = salajan_period_formula(p * p).period;
    ASSERT_TRUE(rho_p2 == rho_p || rho_p2 == p * rho_p) << p;
    const u64 rho_p3 = salajan_period_formula(p * p * p).period;
    ASSERT_EQ((rho_p * p * p) % rho_p3, 0u) << p;
  }
}

TEST(Period, CapIsExplicit) {
  EXPECT_THROW(period_brute(kSalajan, 1009, 10), CapExceeded);
}

TEST(Iota, Examples) {
  EXPECT_EQ(incongruence_index(kSalajan, 29), 14u);
  EXPECT_EQ(incongruence_index(kSalajan, 7), 2u);
  EXPECT_EQ(incongruence_index(kSalajan, 1), 1u);
  const Collision c = first_collision(kSalajan, 7);
  EXPECT_EQ(c.first, 2u);
  EXPECT_EQ(c.second, 3u);
}

TEST(Iota, MatchesNaive) {
  for (u64 m = 1; m <= 600; ++m) ASSERT_EQ(incongruence_index(kSalajan, m), naive_iota(m)) << m;
}

TEST(Iota, BoundedByPeriodWhenPurelyPeriodic) {
  for (u64 m = 2; m <= 5000; ++m) {
    if (m % 9 == 0) continue;
    ASSERT_LE(incongruence_index(kSalajan, m), salajan_period_formula(m).period) << m;
  }
}

// These primes have iota(p) = rho(p); 307 does not (u_2 = u_17 mod 307).
TEST(Iota, EqualsPeriodScan) {
  const auto scan = iota_equals_rho_scan(2000);
  for (u64 p : {193, 1093, 1181, 1871}) {
    EXPECT_TRUE(std::binary_search(scan.begin(), scan.end(), p)) << p;
  }
  EXPECT_EQ(scan, (std::vector<u64>{2, 5, 13, 41, 73, 193, 757, 769, 1093, 1181, 1597, 1621, 1871}));
  EXPECT_EQ(incongruence_index(kSalajan, 307), 16u);
  EXPECT_EQ(salajan_period_formula(307).period, 34u);
  EXPECT_EQ(salajan_term_mod(2, 307), salajan_term_mod(17, 307));
  EXPECT_EQ(iota_equals_rho_scan(2000, 3), scan);

  const auto small = iota_equals_rho_scan(100);
  EXPECT_FALSE(std::binary_search(small.begin(), small.end(), 29));
  const auto tiny = iota_equals_rho_scan(7);
  EXPECT_FALSE(std::binary_search(tiny.begin(), tiny.end(), 7));
}

TEST(Iota, PrimeBounds) {
  for (u64 p : primes_up_to(100000)) {
    if (p <= 5) continue;
    const u128 iota = incongruence_index(kSalajan, p);
    ASSERT_LE(2 * iota, p - 1) << p;
    ASSERT_LE(iota * iota * iota * iota, u128{256} * p * p * p) << p;
  }
}

TEST(Iota, ClassP3CollidesAtHalf) {
  for (u64 p : primes_up_to(10000)) {
    if (p <= 3) continue;
    if (classify_prime(p).cls != PrimeClass::kP3) continue;
    ASSERT_EQ(salajan_term_mod(2, p), salajan_term_mod((p - 1) / 2, p)) << p;
    ASSERT_LE(2 * incongruence_index(kSalajan, p), p) << p;
  }
}

TEST(Iota, ClassesP1P2HaveAdjacentCollision) {
  for (u64 p : primes_up_to(10000)) {
    if (p <= 5) continue;
    const PrimeClass cls = classify_prime(p).cls;
    if (cls != PrimeClass::kP1 && cls != PrimeClass::kP2) continue;
    bool found = false;
    for (u64 k = 1; k <= p - 3 && !found; ++k) {
      found = salajan_term_mod(k, p) == salajan_term_mod(k + 1, p);
    }
    ASSERT_TRUE(found) << p;
  }
}

TEST(Iota, LiftsToPrimeSquares) {
  for (u64 p : primes_up_to(200)) {
    if (p <= 3) continue;
    if (incongruence_index(kSalajan, p) >= salajan_period_formula(p).period) continue;
    ASSERT_LE(2 * incongruence_index(kSalajan, p * p), p * p) << p;
  }
}

TEST(Iota, PeriodOfClassPIsPMinusOne) {
  for (u64 p : primes_up_to(10000)) {
    if (p <= 3) continue;
    if (classify_prime(p).cls == PrimeClass::kNone) continue;
    ASSERT_EQ(salajan_period_formula(p).period, p - 1) << p;
    ASSERT_LT(static_cast<double>(incongruence_index(kSalajan, p)),
              3.0 + 4.0 * std::pow(static_cast<double>(p), 0.75))
        << p;
  }
}

}  // namespace
}  // namespace discrim
