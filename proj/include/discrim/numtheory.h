#ifndef DISCRIM_NUMTHEORY_H_
#define DISCRIM_NUMTHEORY_H_

#include <cstdint>
#include <functional>
#include <vector>

namespace discrim {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct PrimePower {
  u64 prime = 0;
  int exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

// Prime factorization of a positive integer, primes strictly increasing.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;

  u64 recompose() const;
  bool is_prime_power() const { return factors.size() == 1; }
};

// (a * b) mod m with a 128-bit intermediate.
inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

// Reduces an arbitrary signed value into [0, m).
u64 reduce(i128 value, u64 m);

// base^exp mod modulus, modulus >= 2. Negative bases are reduced first.
u64 modpow(i128 base, u64 exp, u64 modulus);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

// Deterministic over all of uint64 (Miller-Rabin with a fixed witness set).
bool is_prime(u64 n);

// Trial division by primes below 10^6, then Pollard rho (Brent) on the
// remaining composite cofactor.
Factorization factorize(u64 n);

// Exponent of p in n. Throws std::invalid_argument for n == 0 or p < 2.
int padic_valuation(u64 p, i128 n);

u64 euler_phi(const Factorization& f);
u64 euler_phi(u64 m);

// Exponent of the unit group (Z/mZ)^*.
u64 carmichael_lambda(const Factorization& f);
u64 carmichael_lambda(u64 m);

// Smallest t >= 1 with a^t = 1 (mod m). Starts from lambda(m) and strips
// prime factors. Throws std::invalid_argument if gcd(a, m) != 1 or m < 2.
u64 mult_order(i64 a, u64 m);

// nu_p(r^n - 1) by the closed formula:
//   p == 2 and n even:  nu_2(n) + nu_2(r^2 - 1) - 1
//   otherwise:          nu_p(n) + nu_p(r - 1)
// Requires r = 1 (mod p), r != -1, r != 1 and n >= 1.
int beyl_valuation(u64 p, i64 r, u64 n);

// True iff g generates (Z/qZ)^* for an odd prime power q.
// Throws std::invalid_argument if q is not an odd prime power or gcd(g,q) > 1.
bool is_primitive_root(i64 g, u64 q);

// Partial Euler product prod_{p <= prime_limit} (1 - 1/(p(p-1))).
double artin_constant(u64 prime_limit);

inline constexpr double kArtinConstant = 0.3739558136;

// Sieve of Eratosthenes segmented at 2^20 entries.
class PrimeSieve {
 public:
  static constexpr u64 kSegmentSize = u64{1} << 20;

  // Calls fn(p) for every prime p in [lo, hi], in increasing order.
  static void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn);
};

std::vector<u64> primes_up_to(u64 limit);
u64 prime_count(u64 limit);

}  // namespace discrim

#endif  // DISCRIM_NUMTHEORY_H_
