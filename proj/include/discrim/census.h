#ifndef DISCRIM_CENSUS_H_
#define DISCRIM_CENSUS_H_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "discrim/numtheory.h"

namespace discrim {

// P1: p = 1 (mod 4), ord_3(p) = p - 1
// P2: p = 3 (mod 4), ord_3(p) = (p - 1) / 2
// P3: p = 3 (mod 4), ord_3(p) = p - 1
enum class PrimeClass { kP1, kP2, kP3, kNone };

std::string_view to_string(PrimeClass cls);

struct PrimeClassRecord {
  u64 p = 0;
  u64 residue_mod_4 = 0;
  u64 ord3 = 0;
  PrimeClass cls = PrimeClass::kNone;
};

// Throws std::invalid_argument unless p is a prime > 3.
PrimeClassRecord classify_prime(u64 p);

// Records for all primes 3 < p <= limit.
std::vector<PrimeClassRecord> classify_primes(u64 limit, unsigned workers = 1);

struct CensusConfig {
  // Relative tolerance on empirical versus predicted densities. The error
  // term O(x log log x / log^2 x) admits no tight universal bound.
  double relative_tolerance = 0.05;
  unsigned workers = 1;
};

struct DensityReport {
  u64 x = 0;
  u64 prime_count = 0;  // pi(x)
  // Indexed by PrimeClass: P1, P2, P3, none (primes > 3 outside P).
  std::array<u64, 4> counts{};
  // Primes 3 < p <= x with ord_9(p) = (p - 1) / 2, counted independently.
  u64 p_set_count = 0;
  std::array<double, 3> predicted{};
  std::array<double, 3> empirical{};
  // empirical / predicted - 1
  std::array<double, 3> deviation{};
  double relative_tolerance = 0.0;

  bool within_tolerance() const;
  bool counts_consistent() const { return counts[0] + counts[1] + counts[2] == p_set_count; }

  bool operator==(const DensityReport&) const = default;
};

DensityReport census_scan(u64 x, const CensusConfig& config = {});

// F = { b >= 1 : [4 * 5^(b-1), 5^b] contains no power of 2 }.

struct FsetRecord {
  u64 b = 0;
  bool member = false;
  // When not a member: 2^witness_exponent lies in [4 * 5^(b-1), 5^b].
  std::optional<u64> witness_exponent;

  bool operator==(const FsetRecord&) const = default;
};

// Exact decision. Tracks the mantissa 5^b / 2^k as a certified fixed-point
// interval; threshold straddles fall back to big-integer powers.
FsetRecord fset_member_interval(u64 b);

// Same decision through big-integer powers only (reference for small b and
// the fallback of the two fast methods).
FsetRecord fset_member_exact(u64 b);

// {b alpha} > alpha - 2 with alpha = log2(5), from a 192-bit fixed-point
// alpha; ambiguous cases go to fset_member_interval.
bool fset_member_weyl(u64 b);

// Incremental exact scan over b = 1, 2, ...
class FsetScanner {
 public:
  FsetScanner();
  FsetRecord next();
  // Number of big-integer resyncs taken so far.
  u64 fallbacks() const { return fallbacks_; }

 private:
  void resync();

  u64 b_ = 0;
  u64 exponent_ = 0;  // k with 5^b = mantissa * 2^k, mantissa in [1, 2)
  u128 lo_ = 0;       // mantissa bounds, scaled by 2^124
  u128 hi_ = 0;
  u64 fallbacks_ = 0;
};

std::vector<FsetRecord> fset_scan(u64 max_b);

struct FsetCount {
  u64 count = 0;
  double ratio = 0.0;
  double beta = 0.0;  // 3 - log 5 / log 2
};

FsetCount fset_count(u64 x);

// Lower bound of frac(log2 5) as a 192-bit fraction, most significant limb
// first: frac(log2 5) in [F, F + 1) * 2^-192.
inline constexpr std::array<u64, 3> kLog2FiveFraction = {
    0x5269e12f346e2bf9ULL, 0x24afdbfd36bf6d33ULL, 0x65b157f8deceb53aULL};

}  // namespace discrim

#endif  // DISCRIM_CENSUS_H_
