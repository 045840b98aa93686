#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "discrim/exact.h"
#include "discrim/numtheory.h"

namespace discrim {
namespace {

bool trial_division_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 naive_order(u64 a, u64 m) {
  u64 x = a % m;
  for (u64 t = 1;; ++t) {
    if (x == 1 % m) return t;
    x = x * a % m;
  }
}

u64 naive_gcd(u64 a, u64 b) { return b == 0 ? a : naive_gcd(b, a % b); }

TEST(IsPrime, Examples) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(1093));
  EXPECT_TRUE(is_prime((u64{1} << 61) - 1));
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(18446744073709551615ULL));
}

TEST(IsPrime, MatchesTrialDivision) {
  for (u64 n = 0; n < 100000; ++n) ASSERT_EQ(is_prime(n), trial_division_prime(n)) << n;
}

TEST(IsPrime, StrongPseudoprimes) {
  for (u64 n : {2047ULL, 1373653ULL, 25326001ULL, 3215031751ULL, 2152302898747ULL,
                3474749660383ULL, 341550071728321ULL, 3825123056546413051ULL}) {
    EXPECT_FALSE(is_prime(n)) << n;
  }
  for (u64 n : {561ULL, 1105ULL, 1729ULL, 2465ULL, 2821ULL, 6601ULL, 8911ULL}) {
    EXPECT_FALSE(is_prime(n)) << n;
  }
}

TEST(Factorize, Examples) {
  EXPECT_TRUE(factorize(1).factors.empty());
  const auto f44 = factorize(44);
  ASSERT_EQ(f44.factors.size(), 2u);
  EXPECT_EQ(f44.factors[0].prime, 2u);
  EXPECT_EQ(f44.factors[0].exponent, 2);
  EXPECT_EQ(f44.factors[1].prime, 11u);
  EXPECT_EQ(f44.factors[1].exponent, 1);
  const auto f = factorize(4 * 15625);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, 2u);
  EXPECT_EQ(f.factors[0].exponent, 2);
  EXPECT_EQ(f.factors[1].prime, 5u);
  EXPECT_EQ(f.factors[1].exponent, 6);
}

TEST(Factorize, RecomposesSmall) {
  for (u64 n = 1; n <= 10000; ++n) {
    const auto f = factorize(n);
    ASSERT_EQ(f.recompose(), n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      ASSERT_TRUE(trial_division_prime(f.factors[i].prime));
      if (i > 0) {
        ASSERT_LT(f.factors[i - 1].prime, f.factors[i].prime);
      }
    }
  }
}

TEST(Factorize, RandomSixtyFourBit) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const u64 n = rng() | 1;
    const auto f = factorize(n);
    ASSERT_EQ(f.recompose(), n);
    for (const auto& pp : f.factors) ASSERT_TRUE(is_prime(pp.prime)) << pp.prime;
  }
}

TEST(Factorize, SemiprimeOfLargePrimes) {
  const u64 p = 4294967291ULL;  // largest prime below 2^32
  const u64 q = 4294967279ULL;
  const auto f = factorize(p * q);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, q);
  EXPECT_EQ(f.factors[1].prime, p);
  const auto square = factorize(p * p);
  ASSERT_EQ(square.factors.size(), 1u);
  EXPECT_EQ(square.factors[0].exponent, 2);
  EXPECT_TRUE(square.is_prime_power());
}

TEST(PadicValuation, Examples) {
  EXPECT_EQ(padic_valuation(2, 80), 4);
  EXPECT_EQ(padic_valuation(5, 80), 1);
  // 2^64 - 1 = 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
  EXPECT_EQ(padic_valuation(3, static_cast<i128>(~u64{0})), 1);
  EXPECT_EQ(padic_valuation(3, -81), 4);
  EXPECT_THROW(padic_valuation(3, 0), std::invalid_argument);
}

TEST(PadicValuation, MatchesDivisionLoop) {
  for (u64 p : {2, 3, 5, 7}) {
    for (i128 n = 1; n < 5000; ++n) {
      int v = 0;
      i128 m = n;
      while (m % p == 0) {
        m /= p;
        ++v;
      }
      ASSERT_EQ(padic_valuation(p, n), v);
    }
  }
}

TEST(Modpow, Examples) {
  EXPECT_EQ(modpow(9, 0, 97), 1u);
  EXPECT_EQ(modpow(9, 3, 52), 1u);
  EXPECT_EQ(modpow(3, 4, 25), 6u);
  EXPECT_EQ(modpow(-2, 3, 7), 6u);
}

TEST(MultOrder, Examples) {
  EXPECT_EQ(mult_order(3, 5), 4u);
  EXPECT_EQ(mult_order(9, 20), 2u);
  for (u64 e = 1; e <= 20; ++e) EXPECT_EQ(mult_order(9, u64{1} << (e + 2)), u64{1} << (e - 1));
  EXPECT_THROW(mult_order(3, 12), std::invalid_argument);
}

TEST(MultOrder, MatchesNaiveAndDividesLambda) {
  for (u64 m = 2; m < 2000; ++m) {
    const u64 lambda = carmichael_lambda(m);
    for (u64 a : {2, 3, 5, 7, 9, 10}) {
      if (naive_gcd(a, m) != 1) continue;
      const u64 order = mult_order(static_cast<i64>(a), m);
      ASSERT_EQ(order, naive_order(a, m)) << a << " mod " << m;
      ASSERT_EQ(lambda % order, 0u);
      ASSERT_EQ(modpow(a, order, m), 1 % m);
      for (const auto& q : factorize(order).factors) {
        ASSERT_NE(modpow(a, order / q.prime, m), 1u);
      }
    }
  }
}

TEST(CarmichaelLambda, MatchesMaximalOrder) {
  for (u64 m = 2; m < 300; ++m) {
    u64 best = 1;
    u64 units = 0;
    for (u64 a = 1; a < m; ++a) {
      if (naive_gcd(a, m) != 1) continue;
      ++units;
      best = std::max(best, naive_order(a, m));
    }
    ASSERT_EQ(carmichael_lambda(m), best) << m;
    ASSERT_EQ(euler_phi(m), units) << m;
  }
}

TEST(LcmOrder, NineVersusThree) {
  for (u64 m = 1; m <= 10000; ++m) {
    if (m % 3 == 0) continue;
    ASSERT_EQ(2 * mult_order(9, 4 * m), lcm(2, mult_order(3, 4 * m))) << m;
  }
}

TEST(PowersOfNine, DistinctModuloPowersOfTwoAndFive) {
  for (u64 n = 2; n <= 2048; n *= 2) {
    for (u64 top : {n - 1, n, n + 1}) {
      if (top < 2 || top > 2048) continue;
      int e2 = 0;
      while ((u64{2} << e2) <= top - 1) ++e2;
      const u64 mod2 = u64{1} << (e2 + 4);
      std::vector<char> seen(mod2, 0);
      u64 x = 1;
      for (u64 k = 1; k <= top; ++k) {
        x = x * 9 % mod2;
        ASSERT_FALSE(seen[x]) << "9^k mod 2^" << e2 + 4 << ", n=" << top;
        seen[x] = 1;
      }
    }
  }
  for (u64 top = 2; top <= 2048; top = top * 5 / 2) {
    int e5 = 0;
    u64 p5 = 1;
    while (p5 * 5 <= top - 1) {
      p5 *= 5;
      ++e5;
    }
    u64 mod5 = 25;
    for (int i = 0; i < e5; ++i) mod5 *= 5;
    std::vector<char> seen(mod5, 0);
    u64 x = 1;
    for (u64 k = 1; k <= top; ++k) {
      x = x * 81 % mod5;
      ASSERT_FALSE(seen[x]) << "81^k, n=" << top;
      seen[x] = 1;
    }
  }
}

TEST(BeylValuation, Examples) {
  EXPECT_EQ(beyl_valuation(2, 9, 4), 5);
  EXPECT_EQ(beyl_valuation(5, 81, 5), 2);
  EXPECT_EQ(beyl_valuation(7, 15, 1), 1);
  EXPECT_EQ(beyl_valuation(3, 10, 1), 2);
  EXPECT_THROW(beyl_valuation(5, 7, 3), std::invalid_argument);
  EXPECT_THROW(beyl_valuation(2, -1, 3), std::invalid_argument);
  EXPECT_THROW(beyl_valuation(3, 1, 3), std::invalid_argument);
}

TEST(BeylValuation, MatchesBigInteger) {
  for (u64 p : {2, 3, 5, 7}) {
    for (i64 r : {static_cast<i64>(p + 1), static_cast<i64>(2 * p + 1), i64{9}, i64{-5}}) {
      if (((r - 1) % static_cast<i64>(p)) != 0) continue;
      BigInt power = 1;
      for (u64 n = 1; n <= 200; ++n) {
        power *= r;
        ASSERT_EQ(beyl_valuation(p, r, n), big_padic_valuation(p, power - 1))
            << "p=" << p << " r=" << r << " n=" << n;
      }
    }
  }
}

TEST(PrimitiveRoot, Examples) {
  EXPECT_TRUE(is_primitive_root(3, 5));
  EXPECT_TRUE(is_primitive_root(3, 625));
  EXPECT_FALSE(is_primitive_root(4, 7));
  EXPECT_THROW(is_primitive_root(5, 25), std::invalid_argument);
  EXPECT_THROW(is_primitive_root(2, 15), std::invalid_argument);
}

TEST(ArtinConstant, Values) {
  EXPECT_DOUBLE_EQ(artin_constant(2), 0.5);
  EXPECT_NEAR(artin_constant(3), 0.5 * 5.0 / 6.0, 1e-15);
  EXPECT_NEAR(artin_constant(1000000), kArtinConstant, 1e-6);
  double previous = 1.0;
  for (u64 limit = 2; limit < 5000; limit += 37) {
    const double value = artin_constant(limit);
    ASSERT_LE(value, previous);
    ASSERT_GT(value, 0.37);
    ASSERT_LE(value, 0.5);
    previous = value;
  }
}

TEST(PrimeSieve, Counts) {
  EXPECT_EQ(primes_up_to(100).size(), 25u);
  EXPECT_EQ(prime_count(1000000), 78498u);
  EXPECT_EQ(prime_count(1), 0u);
  EXPECT_EQ(prime_count(2), 1u);
}

TEST(PrimeSieve, SegmentBoundaries) {
  const u64 lo = PrimeSieve::kSegmentSize - 1000;
  const u64 hi = 2 * PrimeSieve::kSegmentSize + 1000;
  std::vector<u64> found;
  PrimeSieve::for_each_prime(lo, hi, [&](u64 p) { found.push_back(p); });
  std::vector<u64> expected;
  for (u64 n = lo; n <= hi; ++n) {
    if (is_prime(n)) expected.push_back(n);
  }
  EXPECT_EQ(found, expected);
}

}  // namespace
}  // namespace discrim
