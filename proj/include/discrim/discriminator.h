#ifndef DISCRIM_DISCRIMINATOR_H_
#define DISCRIM_DISCRIMINATOR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discrim/numtheory.h"
#include "discrim/sequences.h"

namespace discrim {

enum class DiscriminatorMethod { kClosedForm, kBruteForce, kVerifiedBoth };

std::string_view to_string(DiscriminatorMethod method);

struct DiscriminatorRecord {
  u64 n = 0;
  u64 value = 0;
  DiscriminatorMethod method = DiscriminatorMethod::kBruteForce;

  bool operator==(const DiscriminatorRecord&) const = default;
};

// Least m >= 1 with v_1, ..., v_n pairwise distinct mod m. Candidates start
// at m = n (pigeonhole). Throws CapExceeded if no m <= search_cap works and
// NotAdmissible if the first n terms are not distinct.
DiscriminatorRecord discriminator_brute(const SequenceSpec& spec, u64 n, u64 search_cap);

// min(2^e, 5^f) with 2^e >= n and 5^f >= 5n/4, found by integer comparison.
DiscriminatorRecord salajan_discriminator_closed(u64 n);

// True iff v_1, ..., v_n are pairwise distinct mod m.
bool verify_discriminates(const SequenceSpec& spec, u64 n, u64 m);

struct TableRow {
  u64 first = 0;
  u64 last = 0;
  u64 value = 0;

  bool operator==(const TableRow&) const = default;
};

// Closed-form values over 1..n_max, merged into maximal constant ranges.
std::vector<TableRow> table_ranges(u64 n_max);

// {2^a <= limit} united with {5^b <= limit : b in F}, sorted.
std::vector<u64> image_of_discriminator(u64 limit);

// Non-value certificates for the Salajan discriminator.

enum class Verdict { kNonValue, kUndecided };

enum class ScreenReason {
  kNone,
  kDivisibleBy3,
  kPeriodScreen,
  kCompositeScreen,
  kOrderScreen,
  kIotaScreen,
  kBigPrimeScreen,
};

std::string_view to_string(Verdict verdict);
std::string_view to_string(ScreenReason reason);

// Numbers backing a verdict. Unused fields stay zero.
struct CertificateWitness {
  // divisible_by_3: d = 3 * cofactor.
  u64 cofactor = 0;
  // period/composite/order screens: u_1 = u_{1+period} (mod d), 2 * period <= d.
  u64 period = 0;
  // composite_screen: d = factor1 * factor2, coprime, both > 1, with their periods.
  u64 factor1 = 0;
  u64 factor2 = 0;
  u64 period1 = 0;
  u64 period2 = 0;
  // order_screen: d = prime^exponent, 9^order9 = 1 (mod d), order9 < phi/2.
  u64 prime = 0;
  u64 exponent = 0;
  u64 order9 = 0;
  u64 phi = 0;
  // iota_screen: u_i = u_j (mod d) with i < j and j - 1 <= d/2.
  u64 collision_first = 0;
  u64 collision_second = 0;
  // big_prime_screen: for prime d, any n with n <= d < 2n has n >= n_min and
  // floor(n/4)^(4/3) >= floor(n_min/4)^(4/3) = lower_bound.
  u64 n_min = 0;
  double lower_bound = 0.0;
  bool big_prime_applies = false;

  bool operator==(const CertificateWitness&) const = default;
};

struct NonValueCertificate {
  u64 d = 0;
  Verdict verdict = Verdict::kUndecided;
  ScreenReason reason = ScreenReason::kNone;
  CertificateWitness witness;
  std::string note;
};

// Individual screens; each returns a non_value certificate or nothing.
std::optional<NonValueCertificate> screen_divisible_by_3(u64 d);
std::optional<NonValueCertificate> screen_period(u64 d);
std::optional<NonValueCertificate> screen_composite(u64 d);
std::optional<NonValueCertificate> screen_order(u64 d);
std::optional<NonValueCertificate> screen_iota(u64 d, u64 budget);

// Screens in order: divisible_by_3, period, composite, order, iota. The iota
// budget defaults to d + 1 stream steps. For primes above 2060 the
// certificate also records the big-prime bound, which decides the verdict
// only when the iota screen ran out of budget. undecided makes no claim.
NonValueCertificate nonvalue_screen(u64 d, std::optional<u64> iota_budget = std::nullopt);

// True iff the certificate is non_value and its witness fields alone verify,
// through salajan_term_mod and direct modular arithmetic.
bool recheck_certificate(const NonValueCertificate& certificate);

}  // namespace discrim

#endif  // DISCRIM_DISCRIMINATOR_H_
