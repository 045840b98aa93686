#include "discrim/serialize.h"

#include <charconv>
#include <cmath>

namespace discrim {
namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json json_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, end);
}

void write_csv(std::ostream& out, const CsvTable& table) {
  auto line = [&](const CsvRow& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << csv_escape(row[i]);
    }
    out << '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
}

void write_json_lines(std::ostream& out, const std::vector<Json>& objects) {
  for (const auto& object : objects) out << object.dump() << '\n';
}

CsvRow discriminator_columns() { return {"n", "value", "method"}; }

CsvRow csv_row(const DiscriminatorRecord& r) {
  return {std::to_string(r.n), std::to_string(r.value), std::string(to_string(r.method))};
}

Json to_json(const DiscriminatorRecord& r) {
  Json j;
  j["n"] = r.n;
  j["value"] = r.value;
  j["method"] = to_string(r.method);
  return j;
}

CsvRow table_columns() { return {"range_start", "range_end", "value"}; }

CsvRow csv_row(const TableRow& row) {
  return {std::to_string(row.first), std::to_string(row.last), std::to_string(row.value)};
}

Json to_json(const TableRow& row) {
  Json j;
  j["range_start"] = row.first;
  j["range_end"] = row.last;
  j["value"] = row.value;
  return j;
}

CsvRow period_columns() { return {"modulus", "pre_period", "period"}; }

CsvRow csv_row(const PeriodInfo& info) {
  return {std::to_string(info.modulus), std::to_string(info.pre_period), std::to_string(info.period)};
}

Json to_json(const PeriodInfo& info) {
  Json j;
  j["modulus"] = info.modulus;
  j["pre_period"] = info.pre_period;
  j["period"] = info.period;
  return j;
}

CsvRow certificate_columns() {
  return {"d",       "verdict",  "reason",          "cofactor",         "period",
          "factor1", "factor2",  "period1",         "period2",          "prime",
          "exponent", "order9",  "phi",             "collision_first",  "collision_second",
          "n_min",   "lower_bound", "big_prime_applies", "note"};
}

CsvRow csv_row(const NonValueCertificate& c) {
  const CertificateWitness& w = c.witness;
  return {std::to_string(c.d),
          std::string(to_string(c.verdict)),
          std::string(to_string(c.reason)),
          std::to_string(w.cofactor),
          std::to_string(w.period),
          std::to_string(w.factor1),
          std::to_string(w.factor2),
          std::to_string(w.period1),
          std::to_string(w.period2),
          std::to_string(w.prime),
          std::to_string(w.exponent),
          std::to_string(w.order9),
          std::to_string(w.phi),
          std::to_string(w.collision_first),
          std::to_string(w.collision_second),
          std::to_string(w.n_min),
          format_double(w.lower_bound),
          w.big_prime_applies ? "true" : "false",
          c.note};
}

Json to_json(const NonValueCertificate& c) {
  const CertificateWitness& w = c.witness;
  Json witness;
  witness["cofactor"] = w.cofactor;
  witness["period"] = w.period;
  witness["factor1"] = w.factor1;
  witness["factor2"] = w.factor2;
  witness["period1"] = w.period1;
  witness["period2"] = w.period2;
  witness["prime"] = w.prime;
  witness["exponent"] = w.exponent;
  witness["order9"] = w.order9;
  witness["phi"] = w.phi;
  witness["collision_first"] = w.collision_first;
  witness["collision_second"] = w.collision_second;
  witness["n_min"] = w.n_min;
  witness["lower_bound"] = json_number(w.lower_bound);
  witness["big_prime_applies"] = w.big_prime_applies;
  Json j;
  j["d"] = c.d;
  j["verdict"] = to_string(c.verdict);
  j["reason"] = to_string(c.reason);
  j["witness"] = witness;
  j["note"] = c.note;
  return j;
}

CsvRow prime_class_columns() { return {"p", "residue_mod_4", "ord3", "class"}; }

CsvRow csv_row(const PrimeClassRecord& r) {
  return {std::to_string(r.p), std::to_string(r.residue_mod_4), std::to_string(r.ord3),
          std::string(to_string(r.cls))};
}

Json to_json(const PrimeClassRecord& r) {
  Json j;
  j["p"] = r.p;
  j["residue_mod_4"] = r.residue_mod_4;
  j["ord3"] = r.ord3;
  j["class"] = to_string(r.cls);
  return j;
}

CsvRow density_columns() { return {"class", "count", "empirical", "predicted", "deviation"}; }

std::vector<CsvRow> csv_rows(const DensityReport& report) {
  std::vector<CsvRow> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    rows.push_back({std::string(to_string(static_cast<PrimeClass>(i))),
                    std::to_string(report.counts[i]), format_double(report.empirical[i]),
                    format_double(report.predicted[i]), format_double(report.deviation[i])});
  }
  return rows;
}

Json to_json(const DensityReport& report) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    Json c;
    c["class"] = to_string(static_cast<PrimeClass>(i));
    c["count"] = report.counts[i];
    c["empirical"] = json_number(report.empirical[i]);
    c["predicted"] = json_number(report.predicted[i]);
    c["deviation"] = json_number(report.deviation[i]);
    classes.push_back(c);
  }
  Json j;
  j["x"] = report.x;
  j["prime_count"] = report.prime_count;
  j["classes"] = classes;
  j["none_count"] = report.counts[3];
  j["p_set_count"] = report.p_set_count;
  j["relative_tolerance"] = report.relative_tolerance;
  j["within_tolerance"] = report.within_tolerance();
  j["counts_consistent"] = report.counts_consistent();
  return j;
}

CsvRow fset_columns() { return {"b", "member", "witness"}; }

CsvRow csv_row(const FsetRecord& r) {
  return {std::to_string(r.b), r.member ? "true" : "false",
          r.witness_exponent ? std::to_string(*r.witness_exponent) : ""};
}

Json to_json(const FsetRecord& r) {
  Json j;
  j["b"] = r.b;
  j["member"] = r.member;
  if (r.witness_exponent) {
    j["witness_exponent"] = *r.witness_exponent;
  } else {
    j["witness_exponent"] = nullptr;
  }
  return j;
}

Json to_json(const CharSumReport& r) {
  Json j;
  j["p"] = r.p;
  j["g"] = r.g;
  j["setA_size"] = r.setA_size;
  j["max_nontrivial_sum"] = json_number(r.max_nontrivial_sum);
  j["error_margin"] = json_number(r.error_margin);
  j["sqrt_p"] = json_number(r.sqrt_p);
  j["identity_residual"] = json_number(r.identity_residual);
  j["upper_bound_holds"] = r.upper_bound_holds();
  j["upper_bound_attained"] = r.upper_bound_attained();
  j["lower_bound_holds"] = r.lower_bound_holds();
  return j;
}

}  // namespace discrim
