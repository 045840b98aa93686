#include <cmath>
#include <stdexcept>

#include "discrim/census.h"
#include "discrim/exact.h"

namespace discrim {
namespace {

// Mantissas are fixed point with 124 fractional bits; [1, 2) maps to
// [2^124, 2^125) so that 5 * mantissa still fits in 128 bits.
constexpr int kScaleBits = 124;
constexpr u128 kOne = static_cast<u128>(1) << kScaleBits;
constexpr u128 kEight = kOne * 8;
constexpr u128 kFiveQuarters = kOne + kOne / 4;

// 192-bit unsigned, most significant limb first.
using U192 = std::array<u64, 3>;

int compare(const U192& a, const U192& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// a + small; returns false on overflow past 2^192.
bool add_small(const U192& a, u64 small, U192& out) {
  out = a;
  u64 carry = small;
  for (std::size_t i = 3; i-- > 0 && carry != 0;) {
    const u64 before = out[i];
    out[i] += carry;
    carry = out[i] < before ? 1 : 0;
  }
  return carry == 0;
}

// Low 192 bits of b * F.
U192 multiply_fraction(const U192& f, u64 b) {
  const u128 p0 = static_cast<u128>(f[2]) * b;
  const u128 p1 = static_cast<u128>(f[1]) * b + (p0 >> 64);
  const u128 p2 = static_cast<u128>(f[0]) * b + (p1 >> 64);
  return {static_cast<u64>(p2), static_cast<u64>(p1), static_cast<u64>(p0)};
}

}  // namespace

FsetRecord fset_member_exact(u64 b) {
  if (b == 0) throw std::invalid_argument("fset membership: b must be >= 1");
  const BigInt power = boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(b));
  const u64 k = boost::multiprecision::msb(power);
  // 2^k <= 5^b < 2^(k+1); 2^k is in the interval iff 4 * 5^b <= 5 * 2^k.
  const BigInt two_k = BigInt(1) << k;
  if (4 * power <= 5 * two_k) return {b, false, k};
  return {b, true, std::nullopt};
}

FsetScanner::FsetScanner() : lo_(kOne), hi_(kOne) {}

void FsetScanner::resync() {
  ++fallbacks_;
  const BigInt power = boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(b_));
  const u64 k = boost::multiprecision::msb(power);
  exponent_ = k;
  if (k >= kScaleBits) {
    const BigInt top = power >> (k - kScaleBits);
    lo_ = static_cast<u128>(top);
    hi_ = (top << (k - kScaleBits)) == power ? lo_ : lo_ + 1;
  } else {
    lo_ = hi_ = static_cast<u128>(power) << (kScaleBits - k);
  }
}

FsetRecord FsetScanner::next() {
  ++b_;
  const u128 lo5 = lo_ * 5;
  const u128 hi5 = hi_ * 5;
  int shift = 0;
  if (lo5 >= kEight) {
    shift = 3;
  } else if (hi5 < kEight) {
    shift = 2;
  }
  if (shift == 0) {
    resync();
  } else {
    const u128 round_up = (static_cast<u128>(1) << shift) - 1;
    lo_ = lo5 >> shift;
    hi_ = (hi5 + round_up) >> shift;
    exponent_ += shift;
  }

  // 5^b = M 2^k with M in [1, 2): 2^k lies in [4 * 5^(b-1), 5^b] iff M <= 5/4.
  if (hi_ > kFiveQuarters && lo_ <= kFiveQuarters) {
    resync();
    if (hi_ > kFiveQuarters && lo_ <= kFiveQuarters) return fset_member_exact(b_);
  }
  if (hi_ <= kFiveQuarters) return {b_, false, exponent_};
  return {b_, true, std::nullopt};
}

FsetRecord fset_member_interval(u64 b) {
  if (b == 0) throw std::invalid_argument("fset membership: b must be >= 1");
  FsetScanner scanner;
  FsetRecord record;
  for (u64 i = 0; i < b; ++i) record = scanner.next();
  return record;
}

bool fset_member_weyl(u64 b) {
  if (b == 0) throw std::invalid_argument("fset membership: b must be >= 1");
  // alpha = 2 + F 2^-192 + eps with 0 <= eps < 2^-192, so
  // frac(b alpha) 2^192 lies in [G, G + b) where G = low 192 bits of b F,
  // and the threshold alpha - 2 lies in [F, F + 1) 2^-192.
  const U192& f = kLog2FiveFraction;
  const U192 g = multiply_fraction(f, b);
  U192 g_upper;
  if (add_small(g, b, g_upper)) {
    if (compare(g_upper, f) <= 0) return false;  // {b alpha} < alpha - 2
    U192 f_upper;
    if (add_small(f, 1, f_upper) && compare(g, f_upper) >= 0) return true;
  }
  return fset_member_interval(b).member;
}

std::vector<FsetRecord> fset_scan(u64 max_b) {
  std::vector<FsetRecord> records;
  records.reserve(max_b);
  FsetScanner scanner;
  for (u64 b = 1; b <= max_b; ++b) records.push_back(scanner.next());
  return records;
}

FsetCount fset_count(u64 x) {
  if (x == 0) throw std::invalid_argument("fset_count: x must be >= 1");
  FsetScanner scanner;
  FsetCount result;
  for (u64 b = 1; b <= x; ++b) {
    if (scanner.next().member) ++result.count;
  }
  result.ratio = static_cast<double>(result.count) / static_cast<double>(x);
  result.beta = 3.0 - std::log(5.0) / std::log(2.0);
  return result;
}

}  // namespace discrim
