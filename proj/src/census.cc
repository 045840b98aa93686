#include "discrim/census.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "discrim/parallel.h"

namespace discrim {
namespace {

constexpr std::size_t kChunk = 4096;

}  // namespace

std::string_view to_string(PrimeClass cls) {
  switch (cls) {
    case PrimeClass::kP1:
      return "P1";
    case PrimeClass::kP2:
      return "P2";
    case PrimeClass::kP3:
      return "P3";
    case PrimeClass::kNone:
      return "none";
  }
  return "unknown";
}

PrimeClassRecord classify_prime(u64 p) {
  if (p <= 3 || !is_prime(p)) {
    throw std::invalid_argument("classify_prime: expected a prime > 3, got " + std::to_string(p));
  }
  PrimeClassRecord record;
  record.p = p;
  record.residue_mod_4 = p % 4;
  record.ord3 = mult_order(3, p);
  if (record.ord3 == p - 1) {
    record.cls = record.residue_mod_4 == 1 ? PrimeClass::kP1 : PrimeClass::kP3;
  } else if (record.residue_mod_4 == 3 && 2 * record.ord3 == p - 1) {
    record.cls = PrimeClass::kP2;
  }
  return record;
}

std::vector<PrimeClassRecord> classify_primes(u64 limit, unsigned workers) {
  std::vector<u64> primes;
  PrimeSieve::for_each_prime(5, limit, [&](u64 p) { primes.push_back(p); });
  const std::size_t chunks = (primes.size() + kChunk - 1) / kChunk;
  const auto parts = parallel_map(chunks, workers, [&](std::size_t c) {
    std::vector<PrimeClassRecord> out;
    const std::size_t end = std::min(primes.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) out.push_back(classify_prime(primes[i]));
    return out;
  });
  std::vector<PrimeClassRecord> records;
  records.reserve(primes.size());
  for (const auto& part : parts) records.insert(records.end(), part.begin(), part.end());
  return records;
}

bool DensityReport::within_tolerance() const {
  for (double d : deviation) {
    if (!(std::fabs(d) <= relative_tolerance)) return false;
  }
  return true;
}

DensityReport census_scan(u64 x, const CensusConfig& config) {
  if (x < 5) throw std::invalid_argument("census_scan: x must be >= 5");
  std::vector<u64> primes;
  u64 pi = 0;
  PrimeSieve::for_each_prime(2, x, [&](u64 p) {
    ++pi;
    if (p > 3) primes.push_back(p);
  });

  struct Tally {
    std::array<u64, 4> counts{};
    u64 p_set = 0;
  };
  const std::size_t chunks = (primes.size() + kChunk - 1) / kChunk;
  const auto tallies = parallel_map(chunks, config.workers, [&](std::size_t c) {
    Tally t;
    const std::size_t end = std::min(primes.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      const u64 p = primes[i];
      ++t.counts[static_cast<std::size_t>(classify_prime(p).cls)];
      if (2 * mult_order(9, p) == p - 1) ++t.p_set;
    }
    return t;
  });

  DensityReport report;
  report.x = x;
  report.prime_count = pi;
  for (const Tally& t : tallies) {
    for (std::size_t i = 0; i < 4; ++i) report.counts[i] += t.counts[i];
    report.p_set_count += t.p_set;
  }
  report.predicted = {3 * kArtinConstant / 5, 3 * kArtinConstant / 5, 2 * kArtinConstant / 5};
  for (std::size_t i = 0; i < 3; ++i) {
    report.empirical[i] = static_cast<double>(report.counts[i]) / static_cast<double>(pi);
    report.deviation[i] = report.empirical[i] / report.predicted[i] - 1.0;
  }
  report.relative_tolerance = config.relative_tolerance;
  return report;
}

}  // namespace discrim
