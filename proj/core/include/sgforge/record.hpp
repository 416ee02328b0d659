#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "sgforge/census.hpp"
#include "sgforge/semigroup.hpp"

namespace sgforge {

using Cell = std::variant<std::int64_t, double>;

/// Column-named numeric table. CSV: header line, LF endings, no quoting.
/// JSON: array of row objects keyed by the column names.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);

/// One-line JSON record with fields generators, multiplicity, frobenius,
/// genus, gaps, efficacy, weight, ewt, kunz (empty for the full monoid).
std::string semigroup_record(const NumericalSemigroup& s);

/// The record above followed by partition, strong/weak generator tags and
/// the Wilf triple, pretty-printed.
std::string inspect_record(const NumericalSemigroup& s);

/// Compact JSON object built from integer fields, in the given order.
std::string json_object(const std::vector<std::pair<std::string, std::int64_t>>& fields);

/// `genus,count`
Table genus_table(const CensusTable& census);
/// `m,g,count`, nonzero cells sorted by (m, g).
Table multiplicity_table(const CensusTable& census);
/// `g,h,count`, nonzero cells sorted by (g, h).
Table efficacy_table(const CensusTable& census);
/// `F,count` for 1 <= F <= max_frobenius.
Table frobenius_table(const std::vector<std::uint64_t>& ns);

}  // namespace sgforge
