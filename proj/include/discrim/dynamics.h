#ifndef DISCRIM_DYNAMICS_H_
#define DISCRIM_DYNAMICS_H_

#include <optional>
#include <vector>

#include "discrim/numtheory.h"
#include "discrim/sequences.h"

namespace discrim {

// v_n = v_{n+period} (mod modulus) for all n >= pre_period, both minimal.
// Pure periodicity is pre_period == 1 (indices start at 1).
struct PeriodInfo {
  u64 modulus = 0;
  u64 pre_period = 1;
  u64 period = 1;

  bool operator==(const PeriodInfo&) const = default;
};

inline constexpr u64 kDefaultPeriodCap = u64{1} << 26;

// Cycle detection on consecutive pairs (v_n, v_{n+1}) mod d with a
// first-occurrence map. Throws CapExceeded after `cap` states.
PeriodInfo period_brute(const SequenceSpec& spec, u64 d, u64 cap = kDefaultPeriodCap);

// d = 3^alpha * delta with 3 not dividing delta:
// period 2 * ord_9(4 delta), pre-period max(1, alpha).
PeriodInfo salajan_period_formula(u64 d);

// Largest k with v_1, ..., v_k pairwise incongruent mod m. The default cap
// (m + 1 steps) always suffices because iota(m) <= m.
u64 incongruence_index(const SequenceSpec& spec, u64 m, std::optional<u64> cap = std::nullopt);

// First repeat as (i, j), i < j, v_i = v_j (mod m); j = iota(m) + 1.
struct Collision {
  u64 first = 0;
  u64 second = 0;
};
Collision first_collision(const SequenceSpec& spec, u64 m, std::optional<u64> cap = std::nullopt);

// Primes p <= prime_limit with p != 3 and iota(p) = rho(p) for the Salajan
// sequence.
std::vector<u64> iota_equals_rho_scan(u64 prime_limit, unsigned workers = 1);

}  // namespace discrim

#endif  // DISCRIM_DYNAMICS_H_
