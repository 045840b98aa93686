#ifndef DISCRIM_CHARSUM_H_
#define DISCRIM_CHARSUM_H_

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "discrim/numtheory.h"

namespace discrim {

// Element (x, y) of Z_N x Z_N.
using GroupElement = std::pair<std::uint32_t, std::uint32_t>;

enum class CharSumMethod { kAuto, kDirect, kDft };

struct CharSumLimits {
  u64 direct_max_order = 500;
  u64 dft_max_order = 4096;
};

u64 smallest_primitive_root(u64 p);

// {(x, y) : 3 g^x - g^y = 30 (mod p)}, sorted. g defaults to the smallest
// primitive root. Rejects p <= 5, composite p and non-primitive g.
std::vector<GroupElement> build_A(u64 p, std::optional<u64> g = std::nullopt);

// sum_{(x,y) in set} exp(2 pi i (s x + t y) / order), by direct summation.
std::complex<double> character_sum(std::span<const GroupElement> set, u64 order, u64 s, u64 t);

struct CharSumValue {
  double value = 0.0;
  // Bound on the floating-point error of `value`.
  double error_margin = 0.0;
  CharSumMethod method = CharSumMethod::kDirect;
};

// max over (s, t) != (0, 0) of |character_sum(set, order, s, t)|.
// kAuto picks direct enumeration up to limits.direct_max_order and the
// row-wise DFT up to limits.dft_max_order; larger orders are refused.
CharSumValue max_nontrivial_char_sum(std::span<const GroupElement> set, u64 order,
                                     CharSumMethod method = CharSumMethod::kAuto,
                                     const CharSumLimits& limits = {});

struct PairCountCheck {
  u64 direct_count = 0;   // #{(b, b') in B x B : b + b' in A}
  double main_term = 0.0;  // |B|^2 |A| / |G|
  double remainder = 0.0;  // contribution of the nontrivial characters
  double charsum_count = 0.0;
  double residual = 0.0;
};

PairCountCheck pair_count_identity_check(std::span<const GroupElement> a,
                                         std::span<const GroupElement> b, u64 order,
                                         const CharSumLimits& limits = {});

// Thrown when b + b' lands in A; carries the offending triple.
class DisjointnessViolation : public std::invalid_argument {
 public:
  DisjointnessViolation(GroupElement b1, GroupElement b2, GroupElement a);
  GroupElement b1;
  GroupElement b2;
  GroupElement a;
};

// |B| <= |A^| |G| / (|A| + |A^|) for the set A of build_A(p). Requires
// (B + B) to miss A and throws DisjointnessViolation otherwise.
bool bplusb_bound_check(u64 p, std::span<const GroupElement> b, const CharSumLimits& limits = {});

// floor(n/4)^(4/3).
double prime_lemma_bound(u64 n);

struct CharSumReport {
  u64 p = 0;
  u64 g = 0;
  u64 setA_size = 0;
  double max_nontrivial_sum = 0.0;
  double error_margin = 0.0;
  double sqrt_p = 0.0;
  // |direct - character-sum| pair count with B = A.
  double identity_residual = 0.0;

  // Strict |A^| < sqrt(p), certified: the value plus its error margin
  // stays below sqrt(p).
  bool upper_bound_holds() const { return max_nontrivial_sum + error_margin < sqrt_p; }
  // |A^| = sqrt(p) up to the error margin.
  bool upper_bound_attained() const;
  bool lower_bound_holds(double tolerance = 1e-6) const;
};

CharSumReport charsum_report(u64 p, std::optional<u64> g = std::nullopt,
                             const CharSumLimits& limits = {});

}  // namespace discrim

#endif  // DISCRIM_CHARSUM_H_
