#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "discrim/census.h"
#include "discrim/charsum.h"
#include "discrim/discriminator.h"
#include "discrim/dynamics.h"
#include "discrim/errors.h"
#include "discrim/numtheory.h"
#include "discrim/parallel.h"
#include "discrim/sequences.h"
#include "discrim/serialize.h"
#include "discrim/verify.h"

namespace discrim::cli {
namespace {

constexpr const char* kGrammar = R"(usage: discrim <subcommand> [options] [--format csv|json|human] [--output PATH] [--threads N]
  discriminate --seq <spec> --n <int> [--method closed|brute|both] [--cap <int>]
  table --max <int>
  period --seq <spec> --d <int> [--method formula|brute|both] [--cap <int>]
  iota (--m <int> | --range <lo>:<hi>) [--seq <spec>] [--with-period]
  screen (--d <int> | --range <lo>:<hi>) [--budget <int>]
  census --x <int> [--classes] [--tolerance <real>]
  fset --max <int> [--method interval|weyl|both] [--summary]
  charsum --p <int> [--g <int>]
  artin --prime-limit <int>
  verify --suite <name>|all [--nmax <int>]
sequence specs: salajan | linrec:c1,c2,v1,v2 | poly:a0,a1,...
)";

// Thrown for argument combinations CLI11 cannot express.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string format = "human";
  std::string output;
  unsigned threads = 0;
};

// Everything a subcommand produces. Human output is the aligned table
// unless `human` is set; `notes` follow the table in human mode only.
struct Result {
  CsvTable table;
  std::vector<Json> json;
  std::optional<std::string> human;
  std::vector<std::string> notes;
  std::vector<std::string> diagnostics;
  int code = kExitOk;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"human", "csv", "json"}));
  sub->add_option("--output", common.output, "Write output to this file");
  sub->add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
}

std::pair<u64, u64> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  auto number = [&](std::string_view part) {
    u64 value = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || end != part.data() + part.size() || part.empty()) {
      throw UsageError("--range: expected <lo>:<hi>, got '" + text + "'");
    }
    return value;
  };
  if (colon == std::string::npos) throw UsageError("--range: expected <lo>:<hi>, got '" + text + "'");
  const std::string_view view(text);
  const u64 lo = number(view.substr(0, colon));
  const u64 hi = number(view.substr(colon + 1));
  if (lo == 0 || hi < lo) throw UsageError("--range: need 1 <= lo <= hi, got '" + text + "'");
  return {lo, hi};
}

u64 saturating_multiply(u64 a, u64 b) {
  const u128 product = static_cast<u128>(a) * b;
  return product > ~u64{0} ? ~u64{0} : static_cast<u64>(product);
}

std::string render_human(const CsvTable& table) {
  std::vector<std::size_t> widths(table.columns.size(), 0);
  auto widen = [&](const CsvRow& row) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  };
  widen(table.columns);
  for (const auto& row : table.rows) widen(row);
  std::ostringstream out;
  auto line = [&](const CsvRow& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i + 1 == row.size()) {
        out << row[i];
      } else {
        out << std::left << std::setw(static_cast<int>(widths[i] + 2)) << row[i];
      }
    }
    out << '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  return out.str();
}

// Flat JSON objects as CSV, columns in key order of the first object.
CsvTable table_from_json(const std::vector<Json>& objects) {
  CsvTable table;
  if (objects.empty()) return table;
  for (const auto& item : objects.front().items()) table.columns.push_back(item.key());
  for (const Json& object : objects) {
    CsvRow row;
    for (const auto& column : table.columns) {
      const Json& value = object.at(column);
      if (value.is_string()) {
        row.push_back(value.get<std::string>());
      } else if (value.is_number_float()) {
        row.push_back(format_double(value.get<double>()));
      } else {
        row.push_back(value.dump());
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

template <class Record>
void append(Result& result, const Record& record) {
  result.table.rows.push_back(csv_row(record));
  result.json.push_back(to_json(record));
}

Result run_discriminate(const SequenceSpec& spec, u64 n, std::string method,
                        std::optional<u64> cap) {
  if (method.empty()) method = spec.is_salajan() ? "closed" : "brute";
  if (method != "brute" && !spec.is_salajan()) {
    throw UsageError("discriminate: the closed form exists only for the salajan sequence");
  }
  Result result;
  result.table.columns = discriminator_columns();
  if (method == "closed") {
    append(result, salajan_discriminator_closed(n));
    return result;
  }
  const u64 search_cap = cap.value_or(saturating_multiply(n, 64));
  const DiscriminatorRecord brute = discriminator_brute(spec, n, search_cap);
  if (method == "brute") {
    append(result, brute);
    return result;
  }
  const DiscriminatorRecord closed = salajan_discriminator_closed(n);
  if (closed.value == brute.value) {
    append(result, DiscriminatorRecord{n, closed.value, DiscriminatorMethod::kVerifiedBoth});
    result.notes.push_back("closed form and brute force agree");
  } else {
    append(result, closed);
    append(result, brute);
    result.diagnostics.push_back("disagreement at n=" + std::to_string(n) + ": closed form " +
                                 std::to_string(closed.value) + ", brute force " +
                                 std::to_string(brute.value));
    result.code = kExitFailure;
  }
  return result;
}

Result run_table(u64 max) {
  Result result;
  result.table.columns = table_columns();
  for (const TableRow& row : table_ranges(max)) append(result, row);
  return result;
}

Result run_period(const SequenceSpec& spec, u64 d, std::string method, std::optional<u64> cap) {
  if (method.empty()) method = spec.is_salajan() ? "formula" : "brute";
  if (method != "brute" && !spec.is_salajan()) {
    throw UsageError("period: the formula exists only for the salajan sequence");
  }
  if (d < 2) throw UsageError("period: --d must be >= 2");
  Result result;
  result.table.columns = period_columns();
  if (method == "formula") {
    append(result, salajan_period_formula(d));
    return result;
  }
  const PeriodInfo brute = period_brute(spec, d, cap.value_or(kDefaultPeriodCap));
  if (method == "brute") {
    append(result, brute);
    return result;
  }
  const PeriodInfo formula = salajan_period_formula(d);
  append(result, brute);
  if (!(formula == brute)) {
    append(result, formula);
    result.diagnostics.push_back(
        "disagreement at d=" + std::to_string(d) + ": formula (pre_period " +
        std::to_string(formula.pre_period) + ", period " + std::to_string(formula.period) +
        "), brute force (pre_period " + std::to_string(brute.pre_period) + ", period " +
        std::to_string(brute.period) + ")");
    result.code = kExitFailure;
  } else {
    result.notes.push_back("formula and brute force agree");
  }
  return result;
}

Result run_iota(const SequenceSpec& spec, u64 lo, u64 hi, bool with_period, unsigned threads) {
  struct Row {
    u64 m;
    Collision collision;
    u64 period;
  };
  const auto rows = parallel_map(hi - lo + 1, threads, [&](std::size_t i) {
    const u64 m = lo + i;
    Row row{m, first_collision(spec, m), 0};
    if (with_period && m >= 2) {
      row.period = spec.is_salajan() ? salajan_period_formula(m).period
                                     : period_brute(spec, m).period;
    }
    return row;
  });
  Result result;
  result.table.columns = {"m", "iota", "collision_first", "collision_second"};
  if (with_period) result.table.columns.push_back("period");
  for (const Row& row : rows) {
    Json j;
    j["m"] = row.m;
    j["iota"] = row.collision.second - 1;
    j["collision_first"] = row.collision.first;
    j["collision_second"] = row.collision.second;
    if (with_period) j["period"] = row.m >= 2 ? Json(row.period) : Json(nullptr);
    CsvRow csv;
    for (const auto& column : result.table.columns) {
      csv.push_back(j[column].is_null() ? "" : j[column].dump());
    }
    result.table.rows.push_back(std::move(csv));
    result.json.push_back(std::move(j));
  }
  return result;
}

Result run_screen(u64 lo, u64 hi, std::optional<u64> budget, unsigned threads) {
  const auto certificates = parallel_map(
      hi - lo + 1, threads, [&](std::size_t i) { return nonvalue_screen(lo + i, budget); });
  Result result;
  result.table.columns = certificate_columns();
  std::ostringstream human;
  for (const NonValueCertificate& c : certificates) {
    append(result, c);
    human << "d=" << c.d << ' ' << to_string(c.verdict);
    if (c.reason != ScreenReason::kNone) human << " (" << to_string(c.reason) << ')';
    if (!c.note.empty()) human << ": " << c.note;
    human << '\n';
    if (c.verdict == Verdict::kNonValue && !recheck_certificate(c)) {
      result.diagnostics.push_back("certificate for d=" + std::to_string(c.d) +
                                   " failed its recheck");
      result.code = kExitFailure;
    }
  }
  result.human = human.str();
  return result;
}

Result run_census(u64 x, bool classes, double tolerance, unsigned threads) {
  Result result;
  if (classes) {
    result.table.columns = prime_class_columns();
    for (const PrimeClassRecord& r : classify_primes(x, threads)) append(result, r);
    return result;
  }
  CensusConfig config;
  config.relative_tolerance = tolerance;
  config.workers = threads;
  const DensityReport report = census_scan(x, config);
  result.table.columns = density_columns();
  result.table.rows = csv_rows(report);
  result.json.push_back(to_json(report));
  std::ostringstream note;
  note << "pi(" << x << ")=" << report.prime_count << ", outside P: " << report.counts[3]
       << ", densities " << (report.within_tolerance() ? "within" : "outside")
       << " relative tolerance " << tolerance;
  result.notes.push_back(note.str());
  if (!report.counts_consistent()) {
    result.diagnostics.push_back("class counts do not add up to the ord_9 count " +
                                 std::to_string(report.p_set_count));
    result.code = kExitFailure;
  }
  return result;
}

Result run_fset(u64 max, const std::string& method, bool summary, unsigned threads) {
  std::vector<FsetRecord> records;
  if (method != "weyl") records = fset_scan(max);
  std::vector<char> weyl;
  if (method != "interval") {
    weyl = parallel_map(max, threads, [](std::size_t i) {
      return static_cast<char>(fset_member_weyl(i + 1));
    });
  }
  Result result;
  if (method == "weyl") {
    for (u64 b = 1; b <= max; ++b) records.push_back({b, weyl[b - 1] != 0, std::nullopt});
  } else if (method == "both") {
    for (const FsetRecord& r : records) {
      if ((weyl[r.b - 1] != 0) != r.member) {
        result.diagnostics.push_back("interval and Weyl methods disagree at b=" +
                                     std::to_string(r.b));
        result.code = kExitFailure;
      }
    }
  }
  u64 count = 0;
  for (const FsetRecord& r : records) count += r.member ? 1 : 0;
  const FsetCount totals{count, static_cast<double>(count) / static_cast<double>(max),
                         3.0 - std::log2(5.0)};
  if (summary) {
    Json j;
    j["x"] = max;
    j["count"] = totals.count;
    j["ratio"] = totals.ratio;
    j["beta"] = totals.beta;
    result.json.push_back(j);
    result.table = table_from_json(result.json);
    return result;
  }
  result.table.columns = fset_columns();
  for (const FsetRecord& r : records) append(result, r);
  std::ostringstream note;
  note << "count=" << totals.count << " ratio=" << format_double(totals.ratio)
       << " beta=" << format_double(totals.beta);
  result.notes.push_back(note.str());
  return result;
}

Result run_charsum(u64 p, std::optional<u64> g) {
  const CharSumReport report = charsum_report(p, g);
  Result result;
  result.json.push_back(to_json(report));
  result.table = table_from_json(result.json);
  const bool size_ok = report.setA_size == p - 2;
  std::ostringstream human;
  human << std::setprecision(12) << "p=" << p << " g=" << report.g << " |A|=" << report.setA_size
        << " max|A^|=" << report.max_nontrivial_sum << " sqrt(p)=" << report.sqrt_p << ": |A| "
        << (size_ok ? "= p-2" : "!= p-2") << ", lower bound "
        << (report.lower_bound_holds() ? "holds" : "FAILS") << ", strict upper bound "
        << (report.upper_bound_holds() ? "holds" : "FAILS");
  if (report.upper_bound_attained()) human << " (max|A^| = sqrt(p) within the error margin)";
  human << '\n';
  result.human = human.str();
  if (!size_ok || !report.upper_bound_holds() || !report.lower_bound_holds()) {
    result.code = kExitFailure;
  }
  return result;
}

Result run_artin(u64 prime_limit) {
  const double value = artin_constant(prime_limit);
  Json j;
  j["prime_limit"] = prime_limit;
  j["value"] = value;
  j["reference"] = kArtinConstant;
  j["difference"] = value - kArtinConstant;
  Result result;
  result.json.push_back(j);
  result.table = table_from_json(result.json);
  return result;
}

Result run_verify(const std::string& suite, u64 nmax, unsigned threads) {
  VerifyOptions options;
  options.nmax = nmax;
  options.workers = threads;
  const auto results = run_suite(suite, options);
  Result result;
  for (const CriterionResult& r : results) {
    Json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    result.json.push_back(j);
  }
  result.table = table_from_json(result.json);
  std::ostringstream human;
  print_results(human, results);
  result.human = human.str();
  if (!all_passed(results)) result.code = kExitFailure;
  return result;
}

void emit(const Result& result, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    write_csv(out, result.table);
  } else if (format == "json") {
    write_json_lines(out, result.json);
  } else {
    out << (result.human ? *result.human : render_human(result.table));
    for (const auto& note : result.notes) out << note << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discriminators of integer sequences", "discrim"};
  app.require_subcommand(1);
  Common common;

  std::string seq = "salajan";
  std::string method;
  std::string range;
  std::string suite;
  u64 n = 0, d = 0, m = 0, x = 0, max = 0, p = 0, g = 0, cap = 0, budget = 0, nmax = 4096;
  u64 prime_limit = 0;
  double tolerance = 0.05;
  bool with_period = false, classes = false, summary = false;

  auto* discriminate = app.add_subcommand("discriminate", "Discriminator D(n) of a sequence");
  discriminate->add_option("--seq", seq, "Sequence spec");
  discriminate->add_option("--n", n, "Number of terms")->required()->check(CLI::PositiveNumber);
  discriminate->add_option("--method", method)->check(CLI::IsMember({"closed", "brute", "both"}));
  auto* discriminate_cap =
      discriminate->add_option("--cap", cap, "Largest modulus tried")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Constant ranges of the Salajan discriminator");
  table->add_option("--max", max, "Largest n")->required()->check(CLI::PositiveNumber);

  auto* period = app.add_subcommand("period", "Period and pre-period modulo d");
  period->add_option("--seq", seq, "Sequence spec");
  period->add_option("--d", d, "Modulus")->required()->check(CLI::PositiveNumber);
  period->add_option("--method", method)->check(CLI::IsMember({"formula", "brute", "both"}));
  auto* period_cap =
      period->add_option("--cap", cap, "Step bound for brute force")->check(CLI::PositiveNumber);

  auto* iota = app.add_subcommand("iota", "Incongruence index");
  iota->add_option("--seq", seq, "Sequence spec");
  auto* iota_m = iota->add_option("--m", m, "Modulus")->check(CLI::PositiveNumber);
  auto* iota_range = iota->add_option("--range", range, "Moduli lo:hi");
  iota_m->excludes(iota_range);
  iota->add_flag("--with-period", with_period, "Add the period column");

  auto* screen = app.add_subcommand("screen", "Non-value certificates");
  auto* screen_d = screen->add_option("--d", d, "Candidate value")->check(CLI::PositiveNumber);
  auto* screen_range = screen->add_option("--range", range, "Candidates lo:hi");
  screen_d->excludes(screen_range);
  auto* screen_budget =
      screen->add_option("--budget", budget, "Step budget of the iota screen")
          ->check(CLI::PositiveNumber);

  auto* census = app.add_subcommand("census", "Prime classes P1, P2, P3 up to x");
  census->add_option("--x", x, "Upper limit")->required()->check(CLI::PositiveNumber);
  census->add_flag("--classes", classes, "List the class of every prime");
  census->add_option("--tolerance", tolerance, "Relative density tolerance")
      ->check(CLI::PositiveNumber);

  auto* fset = app.add_subcommand("fset", "Membership in F");
  fset->add_option("--max", max, "Largest b")->required()->check(CLI::PositiveNumber);
  fset->add_option("--method", method)->check(CLI::IsMember({"interval", "weyl", "both"}));
  fset->add_flag("--summary", summary, "Only the count and ratio");

  auto* charsum = app.add_subcommand("charsum", "Character sums of the set A");
  charsum->add_option("--p", p, "Prime")->required()->check(CLI::PositiveNumber);
  auto* charsum_g = charsum->add_option("--g", g, "Primitive root")->check(CLI::PositiveNumber);

  auto* artin = app.add_subcommand("artin", "Partial Artin product");
  artin->add_option("--prime-limit", prime_limit, "Largest prime")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Acceptance suite");
  verify->add_option("--suite", suite, "Suite name or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--nmax", nmax, "Upper n of the oracle comparison")
      ->check(CLI::PositiveNumber);

  for (CLI::App* sub : app.get_subcommands({})) add_common(sub, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << kGrammar;
    return kExitUsage;
  }

  const unsigned threads = common.threads > 0 ? common.threads : default_parallelism();
  Result result;
  try {
    if (discriminate->parsed()) {
      result = run_discriminate(SequenceSpec::parse(seq), n, method,
                                *discriminate_cap ? std::optional<u64>(cap) : std::nullopt);
    } else if (table->parsed()) {
      result = run_table(max);
    } else if (period->parsed()) {
      result = run_period(SequenceSpec::parse(seq), d, method,
                          *period_cap ? std::optional<u64>(cap) : std::nullopt);
    } else if (iota->parsed()) {
      if (!*iota_m && !*iota_range) throw UsageError("iota: give --m or --range");
      const auto [lo, hi] = *iota_m ? std::pair{m, m} : parse_range(range);
      result = run_iota(SequenceSpec::parse(seq), lo, hi, with_period, threads);
    } else if (screen->parsed()) {
      if (!*screen_d && !*screen_range) throw UsageError("screen: give --d or --range");
      const auto [lo, hi] = *screen_d ? std::pair{d, d} : parse_range(range);
      result = run_screen(lo, hi, *screen_budget ? std::optional<u64>(budget) : std::nullopt,
                          threads);
    } else if (census->parsed()) {
      result = run_census(x, classes, tolerance, threads);
    } else if (fset->parsed()) {
      result = run_fset(max, method.empty() ? "interval" : method, summary, threads);
    } else if (charsum->parsed()) {
      result = run_charsum(p, *charsum_g ? std::optional<u64>(g) : std::nullopt);
    } else if (artin->parsed()) {
      result = run_artin(prime_limit);
    } else if (verify->parsed()) {
      result = run_verify(suite, nmax, threads);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n' << kGrammar;
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  std::ofstream file;
  if (!common.output.empty()) {
    file.open(common.output);
    if (!file) {
      err << "error: cannot open " << common.output << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = common.output.empty() ? out : file;
  emit(result, common.format, sink);
  for (const auto& line : result.diagnostics) err << line << '\n';
  sink.flush();
  if (!sink) {
    err << "error: write failed\n";
    return kExitFailure;
  }
  return result.code;
}

}  // namespace discrim::cli
