#include "discrim/discriminator.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "discrim/census.h"
#include "discrim/charsum.h"
#include "discrim/dynamics.h"
#include "discrim/errors.h"
#include "discrim/exact.h"

namespace discrim {
namespace {

constexpr u64 kBigPrimeThreshold = 2060;

// Distinctness of n residues mod m, reusing one stamp table across
// candidates so no clearing is needed between moduli.
class DistinctnessChecker {
 public:
  bool distinct(const SequenceSpec& spec, u64 n, u64 m) {
    if (m < n) return false;
    ResidueStream stream(spec, m);
    if (m > kDenseLimit) {
      std::unordered_set<u64> seen;
      seen.reserve(n);
      for (u64 i = 0; i < n; ++i) {
        if (!seen.insert(stream.next()).second) return false;
      }
      return true;
    }
    if (stamps_.size() < m) stamps_.resize(m, 0);
    ++generation_;
    for (u64 i = 0; i < n; ++i) {
      const u64 r = stream.next();
      if (stamps_[r] == generation_) return false;
      stamps_[r] = generation_;
    }
    return true;
  }

 private:
  static constexpr u64 kDenseLimit = u64{1} << 26;
  std::vector<u64> stamps_;
  u64 generation_ = 0;
};

NonValueCertificate non_value(u64 d, ScreenReason reason, CertificateWitness witness) {
  return NonValueCertificate{d, Verdict::kNonValue, reason, witness, {}};
}

bool is_power_of(u64 base, u64 value, u64 exponent) {
  u128 acc = 1;
  for (u64 i = 0; i < exponent; ++i) {
    acc *= base;
    if (acc > value) return false;
  }
  return acc == value;
}

}  // namespace

std::string_view to_string(DiscriminatorMethod method) {
  switch (method) {
    case DiscriminatorMethod::kClosedForm:
      return "closed_form";
    case DiscriminatorMethod::kBruteForce:
      return "brute_force";
    case DiscriminatorMethod::kVerifiedBoth:
      return "verified_both";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::kNonValue ? "non_value" : "undecided";
}

std::string_view to_string(ScreenReason reason) {
  switch (reason) {
    case ScreenReason::kNone:
      return "none";
    case ScreenReason::kDivisibleBy3:
      return "divisible_by_3";
    case ScreenReason::kPeriodScreen:
      return "period_screen";
    case ScreenReason::kCompositeScreen:
      return "composite_screen";
    case ScreenReason::kOrderScreen:
      return "order_screen";
    case ScreenReason::kIotaScreen:
      return "iota_screen";
    case ScreenReason::kBigPrimeScreen:
      return "big_prime_screen";
  }
  return "unknown";
}

DiscriminatorRecord discriminator_brute(const SequenceSpec& spec, u64 n, u64 search_cap) {
  if (n == 0) throw std::invalid_argument("discriminator_brute: n must be >= 1");
  if (search_cap < n) throw std::invalid_argument("discriminator_brute: search_cap must be >= n");
  DistinctnessChecker checker;
  for (u64 m = n; m <= search_cap; ++m) {
    if (checker.distinct(spec, n, m)) return {n, m, DiscriminatorMethod::kBruteForce};
  }
  // Success would have proven the terms distinct; only now is it worth
  // comparing exact values.
  const std::vector<BigInt> terms = exact_terms(spec, n);
  std::vector<BigInt> sorted = terms;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw NotAdmissible("sequence not admissible: " + spec.to_string() +
                        " repeats a value among its first " + std::to_string(n) + " terms");
  }
  throw CapExceeded("discriminator_brute: no modulus <= " + std::to_string(search_cap) +
                    " separates the first " + std::to_string(n) + " terms");
}

DiscriminatorRecord salajan_discriminator_closed(u64 n) {
  if (n == 0) throw std::invalid_argument("salajan_discriminator_closed: n must be >= 1");
  if (n > (u64{1} << 62)) throw std::invalid_argument("salajan_discriminator_closed: n above 2^62");
  u128 power2 = 1;
  while (power2 < n) power2 *= 2;
  u128 power5 = 1;
  while (4 * power5 < 5 * static_cast<u128>(n)) power5 *= 5;
  return {n, static_cast<u64>(std::min(power2, power5)), DiscriminatorMethod::kClosedForm};
}

bool verify_discriminates(const SequenceSpec& spec, u64 n, u64 m) {
  if (n == 0 || m == 0) throw std::invalid_argument("verify_discriminates: n and m must be >= 1");
  DistinctnessChecker checker;
  return checker.distinct(spec, n, m);
}

std::vector<TableRow> table_ranges(u64 n_max) {
  if (n_max == 0) throw std::invalid_argument("table_ranges: n_max must be >= 1");
  std::vector<TableRow> rows;
  for (u64 n = 1; n <= n_max; ++n) {
    const u64 value = salajan_discriminator_closed(n).value;
    if (!rows.empty() && rows.back().value == value) {
      rows.back().last = n;
    } else {
      rows.push_back({n, n, value});
    }
  }
  return rows;
}

std::vector<u64> image_of_discriminator(u64 limit) {
  if (limit == 0) throw std::invalid_argument("image_of_discriminator: limit must be >= 1");
  std::vector<u64> image;
  for (u128 p = 1; p <= limit; p *= 2) image.push_back(static_cast<u64>(p));
  u128 p5 = 5;
  for (u64 b = 1; p5 <= limit; ++b, p5 *= 5) {
    if (fset_member_interval(b).member) image.push_back(static_cast<u64>(p5));
  }
  std::sort(image.begin(), image.end());
  return image;
}

std::optional<NonValueCertificate> screen_divisible_by_3(u64 d) {
  if (d % 3 != 0) return std::nullopt;
  CertificateWitness w;
  w.cofactor = d / 3;
  return non_value(d, ScreenReason::kDivisibleBy3, w);
}

std::optional<NonValueCertificate> screen_period(u64 d) {
  if (d < 2 || d % 9 == 0) return std::nullopt;
  const PeriodInfo info = salajan_period_formula(d);
  if (2 * info.period > d) return std::nullopt;
  CertificateWitness w;
  w.period = info.period;
  return non_value(d, ScreenReason::kPeriodScreen, w);
}

std::optional<NonValueCertificate> screen_composite(u64 d) {
  if (d < 2 || d % 3 == 0) return std::nullopt;
  const Factorization f = factorize(d);
  if (f.factors.size() < 2) return std::nullopt;
  u64 d1 = 1;
  for (int i = 0; i < f.factors[0].exponent; ++i) d1 *= f.factors[0].prime;
  const u64 d2 = d / d1;
  CertificateWitness w;
  w.factor1 = d1;
  w.factor2 = d2;
  w.period1 = salajan_period_formula(d1).period;
  w.period2 = salajan_period_formula(d2).period;
  w.period = lcm(w.period1, w.period2);
  if (2 * w.period > d) return std::nullopt;
  return non_value(d, ScreenReason::kCompositeScreen, w);
}

std::optional<NonValueCertificate> screen_order(u64 d) {
  if (d < 5) return std::nullopt;
  const Factorization f = factorize(d);
  if (!f.is_prime_power() || f.factors[0].prime <= 3) return std::nullopt;
  CertificateWitness w;
  w.prime = f.factors[0].prime;
  w.exponent = static_cast<u64>(f.factors[0].exponent);
  w.phi = euler_phi(f);
  w.order9 = mult_order(9, d);
  if (2 * w.order9 >= w.phi) return std::nullopt;
  w.period = 2 * w.order9;
  return non_value(d, ScreenReason::kOrderScreen, w);
}

std::optional<NonValueCertificate> screen_iota(u64 d, u64 budget) {
  if (d < 2) return std::nullopt;
  const Collision c = first_collision(SequenceSpec::salajan(), d, budget);
  if (2 * (c.second - 1) > d) return std::nullopt;
  CertificateWitness w;
  w.collision_first = c.first;
  w.collision_second = c.second;
  return non_value(d, ScreenReason::kIotaScreen, w);
}

NonValueCertificate nonvalue_screen(u64 d, std::optional<u64> iota_budget) {
  if (d < 2) throw std::invalid_argument("nonvalue_screen: d must be >= 2");

  CertificateWitness big_prime;
  if (d > kBigPrimeThreshold && is_prime(d)) {
    big_prime.n_min = d / 2 + 1;
    big_prime.lower_bound = prime_lemma_bound(big_prime.n_min);
    big_prime.big_prime_applies = big_prime.lower_bound >= static_cast<double>(d);
  }
  auto with_big_prime = [&](NonValueCertificate c) {
    c.witness.n_min = big_prime.n_min;
    c.witness.lower_bound = big_prime.lower_bound;
    c.witness.big_prime_applies = big_prime.big_prime_applies;
    return c;
  };

  if (auto c = screen_divisible_by_3(d)) return with_big_prime(*c);
  if (auto c = screen_period(d)) return with_big_prime(*c);
  if (auto c = screen_composite(d)) return with_big_prime(*c);
  if (auto c = screen_order(d)) return with_big_prime(*c);

  std::string note;
  try {
    if (auto c = screen_iota(d, iota_budget.value_or(d + 1))) return with_big_prime(*c);
  } catch (const CapExceeded& e) {
    note = std::string("iota budget exceeded: ") + e.what();
  }
  if (big_prime.big_prime_applies) {
    return with_big_prime(non_value(d, ScreenReason::kBigPrimeScreen, {}));
  }
  NonValueCertificate undecided = with_big_prime({d, Verdict::kUndecided, ScreenReason::kNone, {}, {}});
  undecided.note = note;
  return undecided;
}

bool recheck_certificate(const NonValueCertificate& c) {
  if (c.verdict != Verdict::kNonValue || c.d < 2) return false;
  const u64 d = c.d;
  const CertificateWitness& w = c.witness;
  // u_1 = u_{1+k} (mod d) with 2k <= d: any n with D(n) = d has n <= k, yet
  // D(n) <= 2n - 1 < 2k <= d.
  auto short_return = [&](u64 k) {
    return k >= 1 && 2 * k <= d && salajan_term_mod(1, d) == salajan_term_mod(1 + k, d);
  };
  switch (c.reason) {
    case ScreenReason::kDivisibleBy3:
      return w.cofactor >= 1 && 3 * w.cofactor == d;
    case ScreenReason::kPeriodScreen:
      return short_return(w.period);
    case ScreenReason::kCompositeScreen:
      return w.factor1 > 1 && w.factor2 > 1 && static_cast<u128>(w.factor1) * w.factor2 == d &&
             gcd(w.factor1, w.factor2) == 1 && w.period == lcm(w.period1, w.period2) &&
             short_return(w.period);
    case ScreenReason::kOrderScreen:
      return w.prime > 3 && is_prime(w.prime) && is_power_of(w.prime, d, w.exponent) &&
             w.order9 >= 1 && modpow(9, w.order9, d) == 1 && 2 * w.order9 < w.phi &&
             w.period == 2 * w.order9 && short_return(w.period);
    case ScreenReason::kIotaScreen:
      return w.collision_first >= 1 && w.collision_first < w.collision_second &&
             2 * (w.collision_second - 1) <= d &&
             salajan_term_mod(w.collision_first, d) == salajan_term_mod(w.collision_second, d);
    case ScreenReason::kBigPrimeScreen:
      return w.big_prime_applies && is_prime(d) && d > 5 && w.n_min == d / 2 + 1 &&
             prime_lemma_bound(w.n_min) >= static_cast<double>(d);
    case ScreenReason::kNone:
      return false;
  }
  return false;
}

}  // namespace discrim
