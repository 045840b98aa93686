#include "discrim/dynamics.h"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "discrim/errors.h"
#include "discrim/parallel.h"

namespace discrim {
namespace {

struct PairHash {
  std::size_t operator()(u128 key) const {
    const u64 lo = static_cast<u64>(key);
    const u64 hi = static_cast<u64>(key >> 64);
    return std::hash<u64>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

// Membership over [0, m): a byte map for moderate m, a hash set beyond.
class ResidueSet {
 public:
  explicit ResidueSet(u64 m) {
    if (m <= kDenseLimit) dense_.assign(m, 0);
  }

  // Returns false if already present.
  bool insert(u64 r) {
    if (!dense_.empty()) {
      if (dense_[r]) return false;
      dense_[r] = 1;
      return true;
    }
    return sparse_.insert(r).second;
  }

 private:
  static constexpr u64 kDenseLimit = u64{1} << 24;
  std::vector<char> dense_;
  std::unordered_set<u64> sparse_;
};

}  // namespace

PeriodInfo period_brute(const SequenceSpec& spec, u64 d, u64 cap) {
  if (!spec.is_recurrence()) {
    throw std::invalid_argument("period_brute: only linear recurrences are periodic");
  }
  if (d < 2) throw std::invalid_argument("period_brute: modulus must be >= 2");
  ResidueStream stream(spec, d);
  std::unordered_map<u128, u64, PairHash> first_seen;
  u64 current = stream.next();
  u64 following = stream.next();
  for (u64 n = 1; n <= cap; ++n) {
    const u128 key = (static_cast<u128>(current) << 64) | following;
    const auto [it, inserted] = first_seen.emplace(key, n);
    if (!inserted) return PeriodInfo{d, it->second, n - it->second};
    current = following;
    following = stream.next();
  }
  throw CapExceeded("period_brute: no cycle within " + std::to_string(cap) + " states mod " +
                    std::to_string(d));
}

PeriodInfo salajan_period_formula(u64 d) {
  if (d < 2) throw std::invalid_argument("salajan_period_formula: modulus must be >= 2");
  if (d > (u64{1} << 61)) throw std::invalid_argument("salajan_period_formula: modulus above 2^61");
  u64 alpha = 0;
  u64 delta = d;
  while (delta % 3 == 0) {
    delta /= 3;
    ++alpha;
  }
  return PeriodInfo{d, std::max<u64>(1, alpha), 2 * mult_order(9, 4 * delta)};
}

Collision first_collision(const SequenceSpec& spec, u64 m, std::optional<u64> cap) {
  if (m == 0) throw std::invalid_argument("incongruence_index: modulus must be >= 1");
  const u64 steps = cap.value_or(m + 1);
  ResidueStream stream(spec, m);
  // The earlier index is recovered by re-streaming once a repeat shows up.
  ResidueSet seen(m);
  for (u64 k = 1; k <= steps; ++k) {
    const u64 r = stream.next();
    if (!seen.insert(r)) {
      ResidueStream again(spec, m);
      for (u64 i = 1; i < k; ++i) {
        if (again.next() == r) return Collision{i, k};
      }
      throw std::logic_error("first_collision: repeat without an earlier match");
    }
  }
  throw CapExceeded("incongruence_index: no repeat within " + std::to_string(steps) +
                    " terms mod " + std::to_string(m));
}

u64 incongruence_index(const SequenceSpec& spec, u64 m, std::optional<u64> cap) {
  return first_collision(spec, m, cap).second - 1;
}

std::vector<u64> iota_equals_rho_scan(u64 prime_limit, unsigned workers) {
  if (prime_limit < 5) throw std::invalid_argument("iota_equals_rho_scan: limit must be >= 5");
  std::vector<u64> candidates;
  for (u64 p : primes_up_to(prime_limit)) {
    if (p != 3) candidates.push_back(p);
  }
  const SequenceSpec salajan = SequenceSpec::salajan();
  const auto hits = parallel_map(candidates.size(), workers, [&](std::size_t i) -> int {
    const u64 p = candidates[i];
    return incongruence_index(salajan, p) == salajan_period_formula(p).period ? 1 : 0;
  });
  std::vector<u64> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (hits[i]) out.push_back(candidates[i]);
  }
  return out;
}

}  // namespace discrim
