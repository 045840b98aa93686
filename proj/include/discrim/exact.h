#ifndef DISCRIM_EXACT_H_
#define DISCRIM_EXACT_H_

// Arbitrary-precision paths. Used by oracles, the admissibility check on the
// discriminator failure path, and the exact F-set fallback.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "discrim/sequences.h"

namespace discrim {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr u64 kDefaultExactCap = 200'000;

// (3^j - 5(-1)^j) / 4 exactly. Throws std::length_error if j > cap.
BigInt salajan_term_exact(u64 j, u64 cap = kDefaultExactCap);

// v_1, ..., v_count exactly.
std::vector<BigInt> exact_terms(const SequenceSpec& spec, u64 count);

// nu_p(n) for a nonzero big integer.
int big_padic_valuation(u64 p, BigInt n);

}  // namespace discrim

#endif  // DISCRIM_EXACT_H_
