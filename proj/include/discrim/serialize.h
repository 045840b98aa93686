#ifndef DISCRIM_SERIALIZE_H_
#define DISCRIM_SERIALIZE_H_

// CSV rows and JSON-lines objects for the result records. Column orders are
// stable; JSON objects keep the same field order as the CSV columns.

#include <ostream>
#include <string>
#include <vector>

#include "discrim/census.h"
#include "discrim/charsum.h"
#include "discrim/discriminator.h"
#include "discrim/dynamics.h"
#include "json.hpp"

namespace discrim {

using Json = nlohmann::ordered_json;
using CsvRow = std::vector<std::string>;

struct CsvTable {
  CsvRow columns;
  std::vector<CsvRow> rows;
};

void write_csv(std::ostream& out, const CsvTable& table);

// Each element on its own line, compact.
void write_json_lines(std::ostream& out, const std::vector<Json>& objects);

// n,value,method
CsvRow discriminator_columns();
CsvRow csv_row(const DiscriminatorRecord& record);
Json to_json(const DiscriminatorRecord& record);

// range_start,range_end,value
CsvRow table_columns();
CsvRow csv_row(const TableRow& row);
Json to_json(const TableRow& row);

// modulus,pre_period,period
CsvRow period_columns();
CsvRow csv_row(const PeriodInfo& info);
Json to_json(const PeriodInfo& info);

// d,verdict,reason, then every witness field, then note
CsvRow certificate_columns();
CsvRow csv_row(const NonValueCertificate& certificate);
Json to_json(const NonValueCertificate& certificate);

// p,residue_mod_4,ord3,class
CsvRow prime_class_columns();
CsvRow csv_row(const PrimeClassRecord& record);
Json to_json(const PrimeClassRecord& record);

// class,count,empirical,predicted,deviation (one row per class P1, P2, P3)
CsvRow density_columns();
std::vector<CsvRow> csv_rows(const DensityReport& report);
Json to_json(const DensityReport& report);

// b,member,witness (witness is 2^k written as k, empty for members)
CsvRow fset_columns();
CsvRow csv_row(const FsetRecord& record);
Json to_json(const FsetRecord& record);

Json to_json(const CharSumReport& report);

// Shortest round-trip decimal form.
std::string format_double(double value);

}  // namespace discrim

#endif  // DISCRIM_SERIALIZE_H_
