#include "sgforge/record.hpp"

#include <charconv>
#include <ostream>

#include <json.hpp>

#include "sgforge/kunz.hpp"
#include "sgforge/lab.hpp"

namespace sgforge {

namespace {

using Json = nlohmann::ordered_json;

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(cell));
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

Json base_record(const NumericalSemigroup& s) {
  const auto wd = weight_data(s);
  Json j;
  j["generators"] = s.min_generators();
  j["multiplicity"] = s.multiplicity();
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  j["gaps"] = s.gaps();
  j["efficacy"] = efficacy(s);
  j["weight"] = wd.weight;
  j["ewt"] = wd.effective_weight;
  j["kunz"] = s.multiplicity() >= 2 ? kunz_vector(s).k : std::vector<int>{};
  return j;
}

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_cell(row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
    }
    rows.push_back(std::move(obj));
  }
  out << rows.dump() << '\n';
}

std::string semigroup_record(const NumericalSemigroup& s) { return base_record(s).dump(); }

std::string inspect_record(const NumericalSemigroup& s) {
  Json j = base_record(s);
  j["partition"] = weight_data(s).partition.parts;
  Json tags = Json::array();
  for (const auto& tag : effective_generators(s)) {
    const char* strength = tag.strength == Strength::Strong ? "strong"
                           : tag.strength == Strength::Weak ? "weak"
                                                            : "not-effective";
    tags.push_back(Json{{"value", tag.value}, {"strength", strength}});
  }
  j["generator_tags"] = std::move(tags);
  const auto wilf = check_wilf(s);
  j["wilf"] = Json{{"holds", wilf.holds}, {"F_plus_1", wilf.f_plus_1}, {"n", wilf.n}, {"e", wilf.e}};
  return j.dump(2);
}

std::string json_object(const std::vector<std::pair<std::string, std::int64_t>>& fields) {
  Json j = Json::object();
  for (const auto& [k, v] : fields) j[k] = v;
  return j.dump();
}

Table genus_table(const CensusTable& census) {
  Table t{{"genus", "count"}, {}};
  for (int g = 0; g <= census.complete_genus(); ++g) t.add({g, as_int(census.n_of_g(g))});
  return t;
}

Table multiplicity_table(const CensusTable& census) {
  Table t{{"m", "g", "count"}, {}};
  for (int m = 1; m <= census.complete_genus() + 1; ++m) {
    for (int g = 0; g <= census.complete_genus(); ++g) {
      if (const auto n = census.n_of_mg(m, g)) t.add({m, g, as_int(n)});
    }
  }
  return t;
}

Table efficacy_table(const CensusTable& census) {
  Table t{{"g", "h", "count"}, {}};
  for (int g = 0; g <= census.complete_genus(); ++g) {
    for (int h = 0; h <= g + 1; ++h) {
      if (const auto n = census.t_of_gh(g, h)) t.add({g, h, as_int(n)});
    }
  }
  return t;
}

Table frobenius_table(const std::vector<std::uint64_t>& ns) {
  Table t{{"F", "count"}, {}};
  for (std::size_t f = 1; f < ns.size(); ++f) t.add({static_cast<std::int64_t>(f), as_int(ns[f])});
  return t;
}

}  // namespace sgforge
