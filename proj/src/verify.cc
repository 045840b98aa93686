#include "discrim/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "discrim/census.h"
#include "discrim/charsum.h"
#include "discrim/discriminator.h"
#include "discrim/dynamics.h"
#include "discrim/exact.h"
#include "discrim/parallel.h"
#include "discrim/sequences.h"

namespace discrim {
namespace {

constexpr u64 kTableMax = 32768;
constexpr u64 kPeriodMax = 5000;
constexpr u64 kIotaScanLimit = 2000;
constexpr u64 kIotaBoundLimit = 100000;
constexpr u64 kBeylMaxN = 200;
constexpr u64 kSoundnessMax = 32768;
constexpr u64 kCompletenessMax = 4096;
constexpr u64 kListingLimit = 300;
constexpr u64 kCensusX = 1000000;
constexpr double kCensusTolerance = 0.05;
constexpr double kCensusTargets[3] = {0.224373488, 0.224373488, 0.149582325};
constexpr u64 kArtinLimit = 1000000;
constexpr double kArtinTolerance = 1e-6;
constexpr u64 kFsetMax = 100000;
constexpr double kBeta = 0.6781;
constexpr double kFsetRatioTolerance = 0.01;
constexpr u64 kCharsumMax = 300;
constexpr double kCharsumTolerance = 1e-6;
constexpr u64 kIdentityPrimes[] = {7, 11, 13, 23, 47};
constexpr int kIdentityInstances = 50;
constexpr std::uint64_t kIdentitySeed = 20240611;

const std::vector<TableRow> kTable1 = {
    {1, 1, 1},           {2, 2, 2},           {3, 4, 4},           {5, 8, 8},
    {9, 16, 16},         {17, 20, 25},        {21, 32, 32},        {33, 64, 64},
    {65, 100, 125},      {101, 128, 128},     {129, 256, 256},     {257, 512, 512},
    {513, 1024, 1024},   {1025, 2048, 2048},  {2049, 2500, 3125},  {2501, 4096, 4096},
    {4097, 8192, 8192},  {8193, 12500, 15625}, {12501, 16384, 16384}, {16385, 32768, 32768},
};

const std::vector<u64> kListP1 = {5,   17,  29,  53,  89,  101, 113, 137,
                                  149, 173, 197, 233, 257, 269, 281, 293};
const std::vector<u64> kListP2 = {11,  23,  47,  59,  71,  83,  107, 131,
                                  167, 179, 191, 227, 239, 251, 263};
const std::vector<u64> kListP3 = {7, 19, 31, 43, 79, 127, 139, 163, 199, 211, 223, 283};

const std::vector<u64> kIotaRhoList = {193, 307, 1093, 1181, 1871};

std::string join(const std::vector<u64>& values) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << '}';
  return out.str();
}

bool is_power_of(u64 base, u64 d) {
  while (d % base == 0) d /= base;
  return d == 1;
}

template <class Fn>
std::vector<u64> parallel_filter(u64 lo, u64 hi, unsigned workers, Fn keep) {
  constexpr u64 kChunk = 1024;
  if (hi < lo) return {};
  const u64 chunks = (hi - lo) / kChunk + 1;
  const auto parts = parallel_map(chunks, workers, [&](std::size_t c) {
    std::vector<u64> out;
    const u64 begin = lo + c * kChunk;
    const u64 end = std::min(hi, begin + kChunk - 1);
    for (u64 d = begin; d <= end; ++d) {
      if (keep(d)) out.push_back(d);
    }
    return out;
  });
  std::vector<u64> merged;
  for (const auto& part : parts) merged.insert(merged.end(), part.begin(), part.end());
  return merged;
}

CriterionResult table_reproduction(const VerifyOptions&) {
  CriterionResult r{1, "Table 1 reproduction", false, ""};
  const auto rows = table_ranges(kTableMax);
  r.passed = rows == kTable1;
  std::ostringstream detail;
  detail << rows.size() << " rows over n <= " << kTableMax;
  if (!r.passed) {
    for (std::size_t i = 0; i < std::max(rows.size(), kTable1.size()); ++i) {
      if (i >= rows.size() || i >= kTable1.size() || !(rows[i] == kTable1[i])) {
        detail << ", first mismatch at row " << i + 1;
        break;
      }
    }
  }
  r.detail = detail.str();
  return r;
}

CriterionResult closed_form_oracle(const VerifyOptions& options) {
  CriterionResult r{2, "brute force equals closed form", false, ""};
  const SequenceSpec salajan = SequenceSpec::salajan();
  auto disagrees = [&](u64 n) {
    try {
      const u64 closed = salajan_discriminator_closed(n).value;
      return discriminator_brute(salajan, n, 2 * closed).value != closed;
    } catch (const std::exception&) {
      return true;
    }
  };
  const auto mismatches = parallel_filter(1, options.nmax, options.workers, disagrees);

  std::vector<u64> boundaries;
  for (const TableRow& row : kTable1) {
    boundaries.push_back(row.first);
    if (row.last != row.first) boundaries.push_back(row.last);
  }
  std::vector<u64> bad_boundaries;
  for (u64 n : boundaries) {
    // The claimed value separates the terms and every smaller m >= n fails.
    const u64 value = salajan_discriminator_closed(n).value;
    bool ok = verify_discriminates(salajan, n, value);
    for (u64 m = n; ok && m < value; ++m) ok = !verify_discriminates(salajan, n, m);
    if (!ok) bad_boundaries.push_back(n);
  }
  r.passed = mismatches.empty() && bad_boundaries.empty();
  std::ostringstream detail;
  detail << "n <= " << options.nmax << ": " << mismatches.size() << " mismatches; "
         << boundaries.size() << " range boundaries: " << bad_boundaries.size() << " failures";
  if (!mismatches.empty()) detail << "; first mismatch n=" << mismatches.front();
  if (!bad_boundaries.empty()) detail << "; bad boundaries " << join(bad_boundaries);
  r.detail = detail.str();
  return r;
}

CriterionResult period_formula(const VerifyOptions& options) {
  CriterionResult r{3, "period formula", false, ""};
  const SequenceSpec salajan = SequenceSpec::salajan();
  auto differs = [&](u64 d) {
    return !(period_brute(salajan, d) == salajan_period_formula(d));
  };
  const auto mismatches = parallel_filter(2, kPeriodMax, options.workers, differs);

  std::vector<std::string> special_failures;
  auto expect = [&](u64 d, u64 pre, u64 period, const std::string& label) {
    const PeriodInfo want{d, pre, period};
    if (!(period_brute(salajan, d) == want) || !(salajan_period_formula(d) == want)) {
      special_failures.push_back(label);
    }
  };
  for (u64 e = 1; e <= 20; ++e) expect(u64{1} << e, 1, u64{1} << e, "2^" + std::to_string(e));
  u64 three = 1;
  for (u64 e = 1; e <= 10; ++e) {
    three *= 3;
    expect(three, e, 2, "3^" + std::to_string(e));
  }
  expect(5, 1, 4, "5");
  expect(9, 2, 2, "9");

  r.passed = mismatches.empty() && special_failures.empty();
  std::ostringstream detail;
  detail << "2 <= d <= " << kPeriodMax << ": " << mismatches.size()
         << " mismatches; powers of 2, 3 and d=5,9: " << special_failures.size() << " failures";
  if (!mismatches.empty()) detail << "; first mismatch d=" << mismatches.front();
  for (const auto& label : special_failures) detail << "; wrong at " << label;
  r.detail = detail.str();
  return r;
}

CriterionResult iota_anchors(const VerifyOptions& options) {
  CriterionResult r{4, "incongruence index anchors", false, ""};
  const SequenceSpec salajan = SequenceSpec::salajan();
  const u64 iota29 = incongruence_index(salajan, 29);
  const auto scan = iota_equals_rho_scan(kIotaScanLimit, options.workers);
  // The scan also contains 2 and 5, where the claim is not made.
  std::vector<u64> missing;
  for (u64 p : kIotaRhoList) {
    if (!std::binary_search(scan.begin(), scan.end(), p)) missing.push_back(p);
  }
  std::vector<u64> extras;
  for (u64 p : scan) {
    if (std::find(kIotaRhoList.begin(), kIotaRhoList.end(), p) == kIotaRhoList.end()) {
      extras.push_back(p);
    }
  }
  r.passed = iota29 == 14 && missing.empty();
  std::ostringstream detail;
  detail << "iota(29)=" << iota29 << "; primes <= " << kIotaScanLimit
         << " with iota=rho: " << join(scan);
  for (u64 p : missing) {
    detail << "; " << p << " missing (iota=" << incongruence_index(salajan, p)
           << ", rho=" << salajan_period_formula(p).period << ")";
  }
  detail << "; extras " << join(extras);
  r.detail = detail.str();
  return r;
}

CriterionResult iota_bounds(const VerifyOptions& options) {
  CriterionResult r{5, "incongruence index bounds", false, ""};
  const SequenceSpec salajan = SequenceSpec::salajan();
  auto violates = [&](u64 p) {
    if (p <= 5 || !is_prime(p)) return false;
    const u128 iota = incongruence_index(salajan, p);
    // iota <= 4 p^(3/4)  <=>  iota^4 <= 256 p^3
    const u128 pp = p;
    return 2 * iota > pp - 1 || iota * iota * iota * iota > 256 * pp * pp * pp;
  };
  const auto violations = parallel_filter(7, kIotaBoundLimit, options.workers, violates);
  r.passed = violations.empty();
  std::ostringstream detail;
  detail << prime_count(kIotaBoundLimit) - 3 << " primes 5 < p <= " << kIotaBoundLimit << ": "
         << violations.size() << " violations";
  if (!violations.empty()) detail << "; first p=" << violations.front();
  r.detail = detail.str();
  return r;
}

CriterionResult beyl_formula(const VerifyOptions&) {
  CriterionResult r{6, "Beyl valuation formula", false, ""};
  u64 checked = 0;
  std::vector<std::string> failures;
  for (u64 p : {2, 3, 5, 7}) {
    std::set<i64> rs = {static_cast<i64>(p + 1), static_cast<i64>(2 * p + 1), 9};
    for (i64 rv : rs) {
      if (rv % static_cast<i64>(p) != 1 % static_cast<i64>(p)) continue;
      BigInt power = 1;
      for (u64 n = 1; n <= kBeylMaxN; ++n) {
        power *= rv;
        const int exact = big_padic_valuation(p, power - 1);
        const int formula = beyl_valuation(p, rv, n);
        ++checked;
        if (exact != formula && failures.size() < 5) {
          failures.push_back("p=" + std::to_string(p) + " r=" + std::to_string(rv) +
                             " n=" + std::to_string(n));
        }
      }
    }
  }
  r.passed = failures.empty();
  std::ostringstream detail;
  detail << checked << " (p, r, n) triples, " << failures.size() << " disagreements";
  for (const auto& f : failures) detail << "; " << f;
  r.detail = detail.str();
  return r;
}

CriterionResult screen_soundness(const VerifyOptions& options) {
  CriterionResult r{7, "non-value screen soundness", false, ""};
  std::set<u64> image;
  for (u64 n = 1; n <= kSoundnessMax; ++n) {
    const u64 value = salajan_discriminator_closed(n).value;
    if (value <= kSoundnessMax) image.insert(value);
  }
  // d is bad if an image value is certified, a certificate fails its
  // recheck, or (d <= 4096) a non-image d outside the powers of 2 and 5
  // stays undecided.
  auto bad = [&](u64 d) {
    const NonValueCertificate c = nonvalue_screen(d);
    const bool non_value = c.verdict == Verdict::kNonValue;
    const bool in_image = image.count(d) != 0;
    if (non_value && (in_image || !recheck_certificate(c))) return true;
    return d <= kCompletenessMax && !in_image && !non_value && !is_power_of(2, d) &&
           !is_power_of(5, d);
  };
  const auto failures = parallel_filter(2, kSoundnessMax, options.workers, bad);
  r.passed = failures.empty();
  std::ostringstream detail;
  detail << image.size() << " image values <= " << kSoundnessMax
         << "; sound over d <= " << kSoundnessMax << ", complete over d <= " << kCompletenessMax
         << ": " << failures.size() << " failures";
  if (!failures.empty()) detail << "; first d=" << failures.front();
  r.detail = detail.str();
  return r;
}

CriterionResult census(const VerifyOptions& options) {
  CriterionResult r{8, "P-set listings and census", false, ""};
  std::vector<u64> lists[3];
  for (const PrimeClassRecord& record : classify_primes(kListingLimit, options.workers)) {
    if (record.cls != PrimeClass::kNone) {
      lists[static_cast<std::size_t>(record.cls)].push_back(record.p);
    }
  }
  const bool listings = lists[0] == kListP1 && lists[1] == kListP2 && lists[2] == kListP3;

  CensusConfig config;
  config.relative_tolerance = kCensusTolerance;
  config.workers = options.workers;
  const DensityReport report = census_scan(kCensusX, config);
  bool densities = report.counts_consistent();
  std::ostringstream detail;
  detail << "listings <= " << kListingLimit << (listings ? " match" : " differ") << "; x="
         << kCensusX << " pi=" << report.prime_count;
  for (std::size_t i = 0; i < 3; ++i) {
    const double deviation = report.empirical[i] / kCensusTargets[i] - 1.0;
    densities = densities && std::fabs(deviation) <= kCensusTolerance;
    detail << "; " << to_string(static_cast<PrimeClass>(i)) << " " << report.counts[i] << " ("
           << std::showpos << std::fixed << std::setprecision(2) << 100 * deviation << "%)"
           << std::noshowpos << std::defaultfloat;
  }
  if (!report.counts_consistent()) detail << "; class counts disagree with ord_9 count";
  r.passed = listings && densities;
  r.detail = detail.str();
  return r;
}

CriterionResult artin(const VerifyOptions&) {
  CriterionResult r{9, "Artin constant", false, ""};
  const double value = artin_constant(kArtinLimit);
  const double error = std::fabs(value - kArtinConstant);
  r.passed = error <= kArtinTolerance;
  std::ostringstream detail;
  detail << std::setprecision(12) << "A(" << kArtinLimit << ")=" << value << ", |error|="
         << std::setprecision(3) << error << " (tolerance " << kArtinTolerance << ")";
  r.detail = detail.str();
  return r;
}

CriterionResult fset(const VerifyOptions& options) {
  CriterionResult r{10, "F-set", false, ""};
  const auto records = fset_scan(kFsetMax);
  const auto disagreements = parallel_filter(1, kFsetMax, options.workers, [&](u64 b) {
    return fset_member_weyl(b) != records[b - 1].member;
  });
  const bool expected[6] = {false, true, true, false, true, true};
  bool pattern = true;
  for (u64 b = 1; b <= 6; ++b) {
    pattern = pattern && records[b - 1].member == expected[b - 1] &&
              fset_member_exact(b).member == expected[b - 1];
  }
  u64 count = 0;
  for (const FsetRecord& record : records) count += record.member ? 1 : 0;
  const double ratio = static_cast<double>(count) / static_cast<double>(kFsetMax);
  const bool ratio_ok = std::fabs(ratio - kBeta) <= kFsetRatioTolerance;
  r.passed = disagreements.empty() && pattern && ratio_ok;
  std::ostringstream detail;
  detail << "b <= " << kFsetMax << ": " << disagreements.size()
         << " interval/Weyl disagreements; b=1..6 " << (pattern ? "matches" : "differs")
         << "; ratio " << std::setprecision(6) << ratio << " vs " << kBeta;
  if (!disagreements.empty()) detail << "; first b=" << disagreements.front();
  r.detail = detail.str();
  return r;
}

CriterionResult charsum(const VerifyOptions& options) {
  CriterionResult r{11, "character sums", false, ""};
  const auto primes = primes_up_to(kCharsumMax);
  std::vector<u64> targets;
  for (u64 p : primes) {
    if (p > 5) targets.push_back(p);
  }
  const auto reports = parallel_map(targets.size(), options.workers,
                                    [&](std::size_t i) { return charsum_report(targets[i]); });
  std::vector<u64> bad;
  u64 size_failures = 0, lower_failures = 0, upper_failures = 0, attained = 0;
  for (const CharSumReport& report : reports) {
    const bool size_ok = report.setA_size == report.p - 2;
    const bool lower_ok = report.lower_bound_holds(kCharsumTolerance);
    const bool upper_ok = report.upper_bound_holds();
    size_failures += size_ok ? 0 : 1;
    lower_failures += lower_ok ? 0 : 1;
    upper_failures += upper_ok ? 0 : 1;
    attained += report.upper_bound_attained() ? 1 : 0;
    if (!(size_ok && lower_ok && upper_ok)) bad.push_back(report.p);
  }

  std::mt19937_64 rng(kIdentitySeed);
  std::bernoulli_distribution coin(0.3);
  double worst_residual = 0.0;
  int failed_instances = 0;
  for (int i = 0; i < kIdentityInstances; ++i) {
    const u64 p = kIdentityPrimes[i % std::size(kIdentityPrimes)];
    const u64 order = p - 1;
    const auto a = build_A(p);
    std::vector<GroupElement> b;
    for (std::uint32_t x = 0; x < order; ++x) {
      for (std::uint32_t y = 0; y < order; ++y) {
        if (coin(rng)) b.emplace_back(x, y);
      }
    }
    const PairCountCheck check = pair_count_identity_check(a, b, order);
    const double scaled = check.residual / static_cast<double>(order * order);
    worst_residual = std::max(worst_residual, scaled);
    if (!(check.residual < kCharsumTolerance * static_cast<double>(order * order))) {
      ++failed_instances;
    }
  }
  r.passed = bad.empty() && failed_instances == 0;
  std::ostringstream detail;
  detail << targets.size() << " primes 5 < p <= " << kCharsumMax << ": |A|=p-2 fails "
         << size_failures << ", lower bound fails " << lower_failures
         << ", strict upper bound fails " << upper_failures << " (|A^|=sqrt(p) within error margin for "
         << attained << "); " << kIdentityInstances << " identity instances: " << failed_instances
         << " failures, max residual/|G|=" << std::setprecision(3) << worst_residual;
  r.detail = detail.str();
  return r;
}

CriterionResult limits_note(const VerifyOptions&) {
  CriterionResult r{12, "asymptotic statements", true, ""};
  std::ostringstream detail;
  detail << "not reproducible as limits; criteria 8 and 10 use finite scans with tolerances "
         << kCensusTolerance << " (relative) and " << kFsetRatioTolerance << " (absolute)";
  r.detail = detail.str();
  return r;
}

struct Suite {
  std::string name;
  std::function<CriterionResult(const VerifyOptions&)> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"table", table_reproduction}, {"oracle", closed_form_oracle},
      {"period", period_formula},    {"iota", iota_anchors},
      {"iota-bounds", iota_bounds},  {"beyl", beyl_formula},
      {"screen", screen_soundness},  {"census", census},
      {"artin", artin},              {"fset", fset},
      {"charsum", charsum},          {"note", limits_note},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Suite& suite : suites()) out.push_back(suite.name);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<CriterionResult> run_suite(const std::string& name, const VerifyOptions& options) {
  if (options.nmax == 0) throw std::invalid_argument("verify: nmax must be positive");
  std::vector<CriterionResult> results;
  for (const Suite& suite : suites()) {
    if (name != "all" && name != suite.name) continue;
    try {
      results.push_back(suite.run(options));
    } catch (const std::exception& e) {
      // A throwing criterion counts as failed.
      const int id = static_cast<int>(&suite - suites().data()) + 1;
      results.push_back({id, suite.name, false, std::string("exception: ") + e.what()});
    }
  }
  if (results.empty()) throw std::invalid_argument("verify: unknown suite '" + name + "'");
  return results;
}

void print_results(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << std::setw(2) << r.id << ' ' << r.name << ": "
        << r.detail << '\n';
  }
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

}  // namespace discrim
