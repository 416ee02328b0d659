#include "sgforge/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "sgforge/census.hpp"
#include "sgforge/error.hpp"
#include "sgforge/lab.hpp"
#include "sgforge/record.hpp"
#include "sgforge/semigroup.hpp"

namespace sgforge::cli {

namespace {

struct RunConfig {
  int max_genus = 15;
  int max_multiplicity = 9;
  double epsilon = 0.25;
  std::optional<int> split_depth;
  int workers = 0;
  std::string by = "genus";
  std::string format = "csv";
  std::string output;
  std::string check;
  std::vector<long long> generators;
};

// SGFORGE_THREADS wins over --workers; 0 means "pick for me".
int resolve_workers(int requested) {
  if (const char* env = std::getenv("SGFORGE_THREADS")) {
    int n = 0;
    const auto* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, n);
    if (ec != std::errc{} || ptr != end || n < 1) {
      throw Error(Errc::OutOfRange, "SGFORGE_THREADS must be a positive integer");
    }
    return n;
  }
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

ParallelOptions parallel_options(const RunConfig& c, int depth_limit) {
  ParallelOptions p;
  p.workers = resolve_workers(c.workers);
  if (c.split_depth) {
    if (*c.split_depth > depth_limit) {
      throw Error(Errc::OutOfRange, "--split-depth must not exceed " + std::to_string(depth_limit));
    }
    p.split_depth = *c.split_depth;
  } else {
    p.split_depth = p.workers > 1 ? std::min(depth_limit, 8) : 0;
  }
  return p;
}

void emit_table(const RunConfig& c, const Table& t, std::ostream& out) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.output.empty()) {
    file.open(c.output, std::ios::binary);
    if (!file) throw Error(Errc::OutOfRange, "cannot open " + c.output);
    sink = &file;
  }
  if (c.format == "json") {
    write_json(*sink, t);
  } else {
    write_csv(*sink, t);
  }
}

int cmd_count(const RunConfig& c, std::ostream& out) {
  const auto parallel = parallel_options(c, c.max_genus);
  if (c.by == "frobenius") {
    if (c.max_genus < 1) throw Error(Errc::OutOfRange, "--by frobenius needs --max-genus >= 1");
    emit_table(c, frobenius_table(ns_by_frobenius(c.max_genus, parallel)), out);
    return 0;
  }
  const auto table = census(c.max_genus, CensusTable::kNone, parallel);
  if (c.by == "genus") {
    emit_table(c, genus_table(table), out);
  } else if (c.by == "multiplicity") {
    emit_table(c, multiplicity_table(table), out);
  } else {
    emit_table(c, efficacy_table(table), out);
  }
  return 0;
}

int cmd_inspect(const RunConfig& c, std::ostream& out) {
  std::vector<int> gens;
  for (long long v : c.generators) {
    if (v < 0 || v > 1'000'000) throw Error(Errc::OutOfRange, "generator out of range");
    gens.push_back(static_cast<int>(v));
  }
  out << inspect_record(NumericalSemigroup::from_generators(gens)) << '\n';
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto& names = verification_names();
  if (std::find(names.begin(), names.end(), c.check) == names.end()) {
    err << "unknown check '" << c.check << "'; expected one of:";
    for (const auto& n : names) err << ' ' << n;
    err << '\n';
    return 1;
  }
  SweepConfig sweep;
  sweep.max_genus = c.max_genus;
  sweep.max_multiplicity = c.max_multiplicity;
  sweep.epsilon = c.epsilon;
  sweep.parallel = parallel_options(c, c.max_genus);
  const auto report = run_verification(c.check, sweep);
  for (const auto& line : report.witnesses) out << line << '\n';
  out << report.summary_json() << '\n';
  if (!c.output.empty()) {
    RunConfig csv = c;
    csv.format = "csv";
    emit_table(csv, report.table, out);
  }
  return report.passed() ? 0 : 2;
}

void add_parallel_flags(CLI::App* app, RunConfig& c) {
  app->add_option("--split-depth", c.split_depth, "Genus at which subtrees become work units")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--workers", c.workers, "Worker threads (SGFORGE_THREADS overrides)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroup census and conjecture checks", "sgforge"};
  app.require_subcommand(1);
  RunConfig c;

  auto* count = app.add_subcommand("count", "Census tables from the semigroup tree");
  count->add_option("--max-genus", c.max_genus, "Largest genus (Frobenius bound for --by frobenius)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  count->add_option("--by", c.by, "Table to emit")
      ->check(CLI::IsMember({"genus", "multiplicity", "efficacy", "frobenius"}));
  count->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  count->add_option("-o,--output", c.output, "Write the table to a file");
  add_parallel_flags(count, c);

  auto* inspect = app.add_subcommand("inspect", "Invariants of the semigroup generated by the arguments");
  inspect->add_option("generators", c.generators, "Generators")->required();

  auto* verify = app.add_subcommand("verify", "Run a named finite-range check");
  verify->add_option("name", c.check, "Check name")->required();
  verify->add_option("--max-genus", c.max_genus, "Genus (or Frobenius) range")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--max-multiplicity", c.max_multiplicity, "Multiplicity range")
      ->check(CLI::Range(2, 64));
  verify->add_option("--epsilon", c.epsilon, "Window half-width for concentration")
      ->check(CLI::Range(0.0, 1.0));
  verify->add_option("-o,--output", c.output, "Write the report table as CSV");
  add_parallel_flags(verify, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }

  try {
    if (*count) return cmd_count(c, out);
    if (*inspect) return cmd_inspect(c, out);
    return cmd_verify(c, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace sgforge::cli
