#include "discrim/numtheory.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace discrim {
namespace {

constexpr u64 kTrialDivisionBound = 1'000'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = primes_up_to(kTrialDivisionBound);
  return primes;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = modpow(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 pollard_brent(u64 n, u64 seed) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(seed);
  while (true) {
    const u64 c = rng() % (n - 1) + 1;
    u64 y = rng() % n;
    const u64 m = 128;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_composite(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const auto root = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  for (u64 r = root > 0 ? root - 1 : 0; r <= root + 1; ++r) {
    if (r > 1 && r * r == n) {
      split_composite(r, out);
      split_composite(r, out);
      return;
    }
  }
  u64 d = 0;
  for (u64 seed = 1; d == 0 || d == n; ++seed) d = pollard_brent(n, seed);
  split_composite(d, out);
  split_composite(n / d, out);
}

}  // namespace

u64 Factorization::recompose() const {
  u64 result = 1;
  for (const auto& [p, e] : factors) {
    for (int i = 0; i < e; ++i) result *= p;
  }
  return result;
}

u64 reduce(i128 value, u64 m) {
  i128 r = value % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 modpow(i128 base, u64 exp, u64 modulus) {
  if (modulus < 2) throw std::invalid_argument("modpow: modulus must be >= 2");
  u64 b = reduce(base, modulus);
  u64 result = 1;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, b, modulus);
    b = mulmod(b, b, modulus);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  const int s = std::countr_zero(n - 1);
  const u64 d = (n - 1) >> s;
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL,
                1795265022ULL}) {
    const u64 witness = a % n;
    if (witness == 0) continue;
    if (miller_rabin_witness(n, witness, d, s)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization result;
  result.value = n;
  u64 rest = n;
  for (u64 p : small_primes()) {
    if (p * p > rest) break;
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  if (rest > 1) {
    std::vector<u64> primes;
    split_composite(rest, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
      if (!result.factors.empty() && result.factors.back().prime == p) {
        ++result.factors.back().exponent;
      } else {
        result.factors.push_back({p, 1});
      }
    }
  }
  return result;
}

int padic_valuation(u64 p, i128 n) {
  if (p < 2) throw std::invalid_argument("padic_valuation: p must be >= 2");
  if (n == 0) throw std::invalid_argument("padic_valuation: n must be nonzero");
  u128 m = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
  int a = 0;
  while (m % p == 0) {
    m /= p;
    ++a;
  }
  return a;
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.factors) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

u64 euler_phi(u64 m) { return euler_phi(factorize(m)); }

u64 carmichael_lambda(const Factorization& f) {
  u64 lambda = 1;
  for (const auto& [p, e] : f.factors) {
    u64 part = 0;
    if (p == 2) {
      part = e <= 2 ? (u64{1} << (e - 1)) : (u64{1} << (e - 2));
    } else {
      part = p - 1;
      for (int i = 1; i < e; ++i) part *= p;
    }
    lambda = lcm(lambda, part);
  }
  return lambda;
}

u64 carmichael_lambda(u64 m) { return carmichael_lambda(factorize(m)); }

u64 mult_order(i64 a, u64 m) {
  if (m < 2) throw std::invalid_argument("mult_order: modulus must be >= 2");
  const u64 base = reduce(a, m);
  if (gcd(base, m) != 1) {
    throw std::invalid_argument("mult_order: gcd(a, m) must be 1, got a=" +
                                std::to_string(a) + " m=" + std::to_string(m));
  }
  u64 order = carmichael_lambda(m);
  for (const auto& [q, e] : factorize(order).factors) {
    for (int i = 0; i < e; ++i) {
      if (modpow(base, order / q, m) != 1) break;
      order /= q;
    }
  }
  return order;
}

int beyl_valuation(u64 p, i64 r, u64 n) {
  if (!is_prime(p)) throw std::invalid_argument("beyl_valuation: p must be prime");
  if (n == 0) throw std::invalid_argument("beyl_valuation: n must be positive");
  if (r == -1) throw std::invalid_argument("beyl_valuation: r must not be -1");
  if (r == 1) throw std::invalid_argument("beyl_valuation: r = 1 gives r^n - 1 = 0");
  if (reduce(static_cast<i128>(r) - 1, p) != 0) {
    throw std::invalid_argument("beyl_valuation: r must be 1 mod p");
  }
  const i128 r_minus = static_cast<i128>(r) - 1;
  if (p == 2 && n % 2 == 0) {
    // nu_2(r^2 - 1) = nu_2(r - 1) + nu_2(r + 1)
    const i128 r_plus = static_cast<i128>(r) + 1;
    return padic_valuation(2, n) + padic_valuation(2, r_minus) +
           padic_valuation(2, r_plus) - 1;
  }
  return padic_valuation(p, n) + padic_valuation(p, r_minus);
}

bool is_primitive_root(i64 g, u64 q) {
  if (q < 3 || q % 2 == 0) {
    throw std::invalid_argument("is_primitive_root: q must be an odd prime power");
  }
  const Factorization f = factorize(q);
  if (!f.is_prime_power()) {
    throw std::invalid_argument("is_primitive_root: q must be an odd prime power");
  }
  return mult_order(g, q) == euler_phi(f);
}

double artin_constant(u64 prime_limit) {
  if (prime_limit < 2) throw std::invalid_argument("artin_constant: prime_limit must be >= 2");
  // Neumaier-compensated sum of log(1 - 1/(p(p-1))).
  long double sum = 0.0L;
  long double compensation = 0.0L;
  PrimeSieve::for_each_prime(2, prime_limit, [&](u64 p) {
    const long double pl = static_cast<long double>(p);
    const long double term = std::log1p(-1.0L / (pl * (pl - 1.0L)));
    const long double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  });
  return static_cast<double>(std::exp(sum + compensation));
}

void PrimeSieve::for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
  if (hi < 2 || lo > hi) return;
  lo = std::max<u64>(lo, 2);
  const auto root = static_cast<u64>(std::sqrt(static_cast<long double>(hi))) + 1;

  std::vector<u64> base;
  {
    std::vector<char> composite(root + 1, 0);
    for (u64 i = 2; i <= root; ++i) {
      if (composite[i]) continue;
      base.push_back(i);
      for (u64 j = i * i; j <= root; j += i) composite[j] = 1;
    }
  }

  std::vector<char> segment(kSegmentSize);
  for (u64 low = lo; low <= hi; low += kSegmentSize) {
    const u64 high = std::min(hi, low + kSegmentSize - 1);
    std::fill(segment.begin(), segment.end(), 1);
    for (u64 p : base) {
      if (p * p > high) break;
      u64 start = std::max(p * p, (low + p - 1) / p * p);
      for (u64 j = start; j <= high; j += p) segment[j - low] = 0;
    }
    for (u64 n = low; n <= high; ++n) {
      if (segment[n - low]) fn(n);
    }
    if (high == hi) break;
  }
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> primes;
  PrimeSieve::for_each_prime(2, limit, [&](u64 p) { primes.push_back(p); });
  return primes;
}

u64 prime_count(u64 limit) {
  u64 count = 0;
  PrimeSieve::for_each_prime(2, limit, [&](u64) { ++count; });
  return count;
}

}  // namespace discrim
