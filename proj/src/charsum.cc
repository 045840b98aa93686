#include "discrim/charsum.h"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>

#include "discrim/errors.h"

namespace discrim {
namespace {

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex mutex;
  return mutex;
}

std::vector<std::complex<double>> roots_of_unity(u64 order) {
  std::vector<std::complex<double>> roots(order);
  for (u64 k = 0; k < order; ++k) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                              static_cast<long double>(order);
    roots[k] = {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
  }
  return roots;
}

void check_elements(std::span<const GroupElement> set, u64 order) {
  for (const auto& [x, y] : set) {
    if (x >= order || y >= order) {
      throw std::invalid_argument("group element (" + std::to_string(x) + "," + std::to_string(y) +
                                  ") outside Z_" + std::to_string(order) + " x Z_" +
                                  std::to_string(order));
    }
  }
}

// Row-wise transform: for each t, the length-N DFT over x of
// w_t[x] = sum_{(x,y) in set} e(t y / N) yields the character sums at (s, t)
// for every s.
class RowTransform {
 public:
  explicit RowTransform(u64 order)
      : order_(order),
        roots_(roots_of_unity(order)),
        in_(fftw_alloc_complex(order)),
        out_(fftw_alloc_complex(order)) {
    // FFTW_BACKWARD uses exp(+2 pi i k / N), matching the characters here.
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(order), in_, out_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~RowTransform() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }
  RowTransform(const RowTransform&) = delete;
  RowTransform& operator=(const RowTransform&) = delete;

  // Character sums at (s, t) for s = 0..N-1, written to `row`.
  void compute(std::span<const GroupElement> set, u64 t, std::vector<std::complex<double>>& row) {
    for (u64 i = 0; i < order_; ++i) in_[i][0] = in_[i][1] = 0.0;
    for (const auto& [x, y] : set) {
      const auto& w = roots_[(t * y) % order_];
      in_[x][0] += w.real();
      in_[x][1] += w.imag();
    }
    fftw_execute(plan_);
    row.resize(order_);
    for (u64 s = 0; s < order_; ++s) row[s] = {out_[s][0], out_[s][1]};
  }

 private:
  u64 order_;
  std::vector<std::complex<double>> roots_;
  fftw_complex* in_;
  fftw_complex* out_;
  fftw_plan plan_;
};

CharSumMethod resolve(CharSumMethod method, u64 order, const CharSumLimits& limits) {
  if (order > limits.dft_max_order ||
      (method == CharSumMethod::kDirect && order > limits.direct_max_order)) {
    throw SizeLimitExceeded("character sums over Z_" + std::to_string(order) +
                            " exceed the configured size limit");
  }
  if (method != CharSumMethod::kAuto) return method;
  return order <= limits.direct_max_order ? CharSumMethod::kDirect : CharSumMethod::kDft;
}

}  // namespace

DisjointnessViolation::DisjointnessViolation(GroupElement b1_, GroupElement b2_, GroupElement a_)
    : std::invalid_argument("B + B meets A: (" + std::to_string(b1_.first) + "," +
                            std::to_string(b1_.second) + ") + (" + std::to_string(b2_.first) +
                            "," + std::to_string(b2_.second) + ") = (" +
                            std::to_string(a_.first) + "," + std::to_string(a_.second) + ")"),
      b1(b1_),
      b2(b2_),
      a(a_) {}

u64 smallest_primitive_root(u64 p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("smallest_primitive_root: p must be an odd prime");
  for (u64 g = 2; g < p; ++g) {
    if (is_primitive_root(static_cast<i64>(g), p)) return g;
  }
  throw std::logic_error("no primitive root found");
}

std::vector<GroupElement> build_A(u64 p, std::optional<u64> g) {
  if (p <= 5 || !is_prime(p)) throw std::invalid_argument("build_A: p must be a prime > 5");
  if (p - 1 > std::numeric_limits<std::uint32_t>::max()) {
    throw SizeLimitExceeded("build_A: p too large");
  }
  const u64 root = g.value_or(smallest_primitive_root(p));
  if (root % p == 0 || !is_primitive_root(static_cast<i64>(root), p)) {
    throw std::invalid_argument("build_A: " + std::to_string(root) +
                                " is not a primitive root mod " + std::to_string(p));
  }
  const u64 order = p - 1;
  std::vector<u64> power(order);
  std::vector<std::uint32_t> log(p, 0);
  u64 value = 1;
  for (u64 x = 0; x < order; ++x) {
    power[x] = value;
    log[value] = static_cast<std::uint32_t>(x);
    value = mulmod(value, root % p, p);
  }
  std::vector<GroupElement> a;
  a.reserve(order);
  for (u64 x = 0; x < order; ++x) {
    // g^y = 3 g^x - 30
    const u64 target = reduce(3 * static_cast<i128>(power[x]) - 30, p);
    if (target == 0) continue;
    a.emplace_back(static_cast<std::uint32_t>(x), log[target]);
  }
  std::sort(a.begin(), a.end());
  return a;
}

std::complex<double> character_sum(std::span<const GroupElement> set, u64 order, u64 s, u64 t) {
  if (order == 0) throw std::invalid_argument("character_sum: order must be >= 1");
  check_elements(set, order);
  std::complex<double> sum = 0.0;
  for (const auto& [x, y] : set) {
    const u64 k = static_cast<u64>((static_cast<u128>(s % order) * x + static_cast<u128>(t % order) * y) % order);
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                              static_cast<long double>(order);
    sum += std::complex<double>(static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle)));
  }
  return sum;
}

CharSumValue max_nontrivial_char_sum(std::span<const GroupElement> set, u64 order,
                                     CharSumMethod method, const CharSumLimits& limits) {
  if (set.empty()) throw std::invalid_argument("max_nontrivial_char_sum: set must be nonempty");
  if (order < 2) throw std::invalid_argument("max_nontrivial_char_sum: group must be nontrivial");
  check_elements(set, order);
  const CharSumMethod chosen = resolve(method, order, limits);
  const double size = static_cast<double>(set.size());

  CharSumValue result;
  result.method = chosen;
  double best = 0.0;
  if (chosen == CharSumMethod::kDirect) {
    const auto roots = roots_of_unity(order);
    for (u64 s = 0; s < order; ++s) {
      for (u64 t = 0; t < order; ++t) {
        if (s == 0 && t == 0) continue;
        std::complex<double> sum = 0.0;
        for (const auto& [x, y] : set) sum += roots[(s * x + t * y) % order];
        best = std::max(best, std::abs(sum));
      }
    }
    result.error_margin = 4.0 * size * kEpsilon * size;
  } else {
    RowTransform transform(order);
    std::vector<std::complex<double>> row;
    for (u64 t = 0; t < order; ++t) {
      transform.compute(set, t, row);
      for (u64 s = (t == 0 ? 1 : 0); s < order; ++s) best = std::max(best, std::abs(row[s]));
    }
    result.error_margin = 8.0 * size * kEpsilon * (1.0 + std::log2(static_cast<double>(order)));
  }
  result.value = best;
  return result;
}

PairCountCheck pair_count_identity_check(std::span<const GroupElement> a,
                                         std::span<const GroupElement> b, u64 order,
                                         const CharSumLimits& limits) {
  if (a.empty() || b.empty()) throw std::invalid_argument("pair_count_identity_check: sets must be nonempty");
  if (order == 0) throw std::invalid_argument("pair_count_identity_check: order must be >= 1");
  if (order > limits.dft_max_order) {
    throw SizeLimitExceeded("pair count identity over Z_" + std::to_string(order) +
                            " exceeds the configured size limit");
  }
  check_elements(a, order);
  check_elements(b, order);

  PairCountCheck check;
  std::vector<char> in_a(order * order, 0);
  for (const auto& [x, y] : a) in_a[x * order + y] = 1;
  for (const auto& [x1, y1] : b) {
    for (const auto& [x2, y2] : b) {
      if (in_a[((x1 + x2) % order) * order + (y1 + y2) % order]) ++check.direct_count;
    }
  }

  // N = (1/|G|) sum_psi conj(S_A(psi)) S_B(psi)^2
  const double group_size = static_cast<double>(order) * static_cast<double>(order);
  RowTransform transform(order);
  std::vector<std::complex<double>> row_a;
  std::vector<std::complex<double>> row_b;
  std::complex<double> nontrivial = 0.0;
  for (u64 t = 0; t < order; ++t) {
    transform.compute(a, t, row_a);
    transform.compute(b, t, row_b);
    for (u64 s = (t == 0 ? 1 : 0); s < order; ++s) {
      nontrivial += std::conj(row_a[s]) * row_b[s] * row_b[s];
    }
  }
  const double size_a = static_cast<double>(a.size());
  const double size_b = static_cast<double>(b.size());
  check.main_term = size_b * size_b * size_a / group_size;
  check.remainder = nontrivial.real() / group_size;
  check.charsum_count = check.main_term + check.remainder;
  check.residual = std::fabs(static_cast<double>(check.direct_count) - check.charsum_count);
  return check;
}

bool bplusb_bound_check(u64 p, std::span<const GroupElement> b, const CharSumLimits& limits) {
  if (p - 1 > limits.dft_max_order) {
    throw SizeLimitExceeded("bplusb_bound_check: p exceeds the configured size limit");
  }
  const std::vector<GroupElement> a = build_A(p);
  const u64 order = p - 1;
  check_elements(b, order);
  std::vector<char> in_a(order * order, 0);
  for (const auto& [x, y] : a) in_a[x * order + y] = 1;
  for (const auto& e1 : b) {
    for (const auto& e2 : b) {
      const GroupElement sum{static_cast<std::uint32_t>((e1.first + e2.first) % order),
                             static_cast<std::uint32_t>((e1.second + e2.second) % order)};
      if (in_a[sum.first * order + sum.second]) throw DisjointnessViolation(e1, e2, sum);
    }
  }
  const double hat = max_nontrivial_char_sum(a, order, CharSumMethod::kAuto, limits).value;
  const double group_size = static_cast<double>(order) * static_cast<double>(order);
  const double bound = hat * group_size / (static_cast<double>(a.size()) + hat);
  return static_cast<double>(b.size()) <= bound;
}

double prime_lemma_bound(u64 n) {
  if (n < 4) throw std::invalid_argument("prime_lemma_bound: n must be >= 4");
  const double q = static_cast<double>(n / 4);
  return q * std::cbrt(q);
}

bool CharSumReport::upper_bound_attained() const {
  // sqrt itself is correctly rounded, hence the extra ulp.
  return std::fabs(max_nontrivial_sum - sqrt_p) <= error_margin + kEpsilon * sqrt_p;
}

bool CharSumReport::lower_bound_holds(double tolerance) const {
  return max_nontrivial_sum >= std::sqrt(static_cast<double>(setA_size)) - tolerance;
}

CharSumReport charsum_report(u64 p, std::optional<u64> g, const CharSumLimits& limits) {
  CharSumReport report;
  report.p = p;
  report.g = g.value_or(p > 5 && is_prime(p) ? smallest_primitive_root(p) : 0);
  const std::vector<GroupElement> a = build_A(p, report.g);
  report.setA_size = a.size();
  const CharSumValue hat = max_nontrivial_char_sum(a, p - 1, CharSumMethod::kAuto, limits);
  report.max_nontrivial_sum = hat.value;
  report.error_margin = hat.error_margin;
  report.sqrt_p = std::sqrt(static_cast<double>(p));
  report.identity_residual = pair_count_identity_check(a, a, p - 1, limits).residual;
  return report;
}

}  // namespace discrim
