#include "discrim/exact.h"

#include <stdexcept>
#include <string>

namespace discrim {

BigInt salajan_term_exact(u64 j, u64 cap) {
  if (j == 0) throw std::invalid_argument("salajan_term_exact: index starts at 1");
  if (j > cap) {
    throw std::length_error("salajan_term_exact: index " + std::to_string(j) +
                            " exceeds cap " + std::to_string(cap));
  }
  BigInt power = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(j));
  if (j % 2 == 0) {
    power -= 5;
  } else {
    power += 5;
  }
  return power / 4;
}

std::vector<BigInt> exact_terms(const SequenceSpec& spec, u64 count) {
  std::vector<BigInt> terms;
  terms.reserve(count);
  if (spec.is_recurrence()) {
    const LinearRecurrence& rec = spec.recurrence();
    BigInt current = rec.v1;
    BigInt following = rec.v2;
    for (u64 i = 0; i < count; ++i) {
      terms.push_back(current);
      BigInt after = rec.c1 * following + rec.c2 * current;
      current = std::move(following);
      following = std::move(after);
    }
  } else {
    const auto& coefficients = spec.coefficients();
    for (u64 j = 1; j <= count; ++j) {
      BigInt value = 0;
      for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        value = value * j + *it;
      }
      terms.push_back(std::move(value));
    }
  }
  return terms;
}

int big_padic_valuation(u64 p, BigInt n) {
  if (p < 2) throw std::invalid_argument("big_padic_valuation: p must be >= 2");
  if (n == 0) throw std::invalid_argument("big_padic_valuation: n must be nonzero");
  int a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  return a;
}

}  // namespace discrim
