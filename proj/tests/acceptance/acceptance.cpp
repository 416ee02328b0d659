// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sgforge/census.hpp"
#include "sgforge/cli.hpp"
#include "sgforge/closed_forms.hpp"
#include "sgforge/kunz.hpp"
#include "sgforge/lab.hpp"

using namespace sgforge;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct CliRun {
  int code;
  std::string out;
  double seconds;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const auto t0 = Clock::now();
  const int code = cli::run(args, out, err);
  const std::chrono::duration<double> dt = Clock::now() - t0;
  return {code, out.str() + err.str(), dt.count()};
}

std::map<int, std::uint64_t> parse_pairs(const std::string& csv) {
  std::map<int, std::uint64_t> out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    int k = 0;
    unsigned long long v = 0;
    if (std::sscanf(line.c_str(), "%d,%llu", &k, &v) == 2) out[k] = v;
  }
  return out;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

// Figure 1.
const std::vector<std::uint64_t> kFigure1{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857};

// Figure 4, rows g = 0..10, columns m = 1..11. Zero marks an empty cell.
const std::uint64_t kFigure4[11][11] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 2, 3, 1, 0, 0, 0, 0, 0, 0},
    {0, 1, 2, 4, 4, 1, 0, 0, 0, 0, 0},
    {0, 1, 3, 6, 7, 5, 1, 0, 0, 0, 0},
    {0, 1, 3, 7, 10, 11, 6, 1, 0, 0, 0},
    {0, 1, 3, 9, 13, 17, 16, 7, 1, 0, 0},
    {0, 1, 4, 11, 16, 27, 28, 22, 8, 1, 0},
    {0, 1, 4, 13, 22, 37, 44, 44, 29, 9, 1},
};

Outcome figure1() {
  Outcome o;
  const auto r = cli({"count", "--max-genus", "15", "--workers", "1"});
  const auto got = parse_pairs(r.out);
  o.require(r.code == 0, "exit code");
  o.require(got.size() == kFigure1.size(), "row count");
  for (int g = 0; g <= 15; ++g) {
    o.require(got.count(g) && got.at(g) == kFigure1[static_cast<std::size_t>(g)], "N(" + std::to_string(g) + ")");
  }
  o.require(r.seconds < 1.0, "runtime " + fmt(r.seconds));
  if (o.ok) o.detail = "16 values exact, " + fmt(r.seconds);
  return o;
}

Outcome figure4() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto t = census(10, CensusTable::kNone, {0, 1});
  const std::chrono::duration<double> dt = Clock::now() - t0;
  int nonzero = 0;
  for (int g = 0; g <= 10; ++g) {
    std::uint64_t row = 0;
    for (int m = 1; m <= 11; ++m) {
      const auto want = kFigure4[g][m - 1];
      nonzero += want != 0;
      row += want;
      o.require(t.n_of_mg(m, g) == want, "N(" + std::to_string(m) + "," + std::to_string(g) + ")");
    }
    o.require(row == t.n_of_g(g), "row sum " + std::to_string(g));
  }
  o.require(dt.count() < 1.0, "runtime");
  if (o.ok) o.detail = std::to_string(nonzero) + " nonzero cells (incl. m=1 at g=0) and all blanks exact, " + fmt(dt.count());
  return o;
}

Outcome performance() {
  Outcome o;
  const auto base = cli({"count", "--max-genus", "30", "--workers", "1", "--split-depth", "0"});
  o.require(base.code == 0, "exit code");
  o.require(base.seconds < 60.0, "runtime " + fmt(base.seconds));
  for (const char* depth : {"0", "3", "6"}) {
    for (const char* workers : {"1", "4"}) {
      const auto r = cli({"count", "--max-genus", "30", "--workers", workers, "--split-depth", depth});
      o.require(r.out == base.out, std::string("output differs at split ") + depth + "/workers " + workers);
    }
  }
  const auto got = parse_pairs(base.out);
  for (int g = 0; g <= 12; ++g) {
    o.require(got.count(g) && got.at(g) == oracle::count(g), "oracle mismatch at g=" + std::to_string(g));
  }
  if (o.ok) {
    o.detail = "N(30)=" + std::to_string(got.at(30)) + " in " + fmt(base.seconds) +
               ", oracle equal for g<=12, identical over 6 configurations";
  }
  return o;
}

Outcome ns_values() {
  Outcome o;
  const auto small = cli({"count", "--by", "frobenius", "--max-genus", "6", "--workers", "1"});
  const auto a = parse_pairs(small.out);
  o.require(a.count(5) && a.at(5) == 5 && a.count(6) && a.at(6) == 4, "ns(5), ns(6)");
  o.require(small.seconds < 1.0, "small runtime");
  const auto big = cli({"count", "--by", "frobenius", "--max-genus", "32", "--workers", "1"});
  const auto b = parse_pairs(big.out);
  o.require(b.count(31) && b.at(31) == 70854, "ns(31)");
  o.require(b.count(32) && b.at(32) == 68681, "ns(32)");
  o.require(big.seconds < 600.0, "runtime");
  if (o.ok) o.detail = "ns(5)=5 ns(6)=4 ns(31)=70854 ns(32)=68681, " + fmt(small.seconds) + " / " + fmt(big.seconds);
  return o;
}

Outcome fibonacci_count(const CensusTable& t) {
  Outcome o;
  for (int g = 1; g <= 20; ++g) {
    o.require(BigInt(t.t_f2m(g)) == fibonacci(g + 1), "g=" + std::to_string(g));
  }
  if (o.ok) o.detail = "F<2m count = F_{g+1} for 1<=g<=20";
  return o;
}

Outcome zhao(const CensusTable& t) {
  Outcome o;
  int clamped = 0;
  for (int g = 1; g <= 25; ++g) {
    const auto z = zhao_lower_bound_detail(g);
    clamped += z.clamped_terms;
    o.require(z.value <= BigInt(t.t_f3m(g)), "lower bound at g=" + std::to_string(g));
    o.require(t.t_f3m(g) <= t.n_of_g(g), "t(g) <= N(g) at g=" + std::to_string(g));
  }
  if (o.ok) o.detail = "1<=g<=25, clamped index terms: " + std::to_string(clamped);
  return o;
}

Outcome recurrence(const CensusTable& t) {
  Outcome o;
  int cells = 0;
  int bijections = 0;
  for (int g = 1; g <= 18; ++g) {
    for (int m = 2; m <= g + 2; ++m) {
      if (2 * g >= 3 * m) continue;
      ++cells;
      const auto lhs = t.n_of_mg(m - 1, g - 1) + (g >= 2 ? t.n_of_mg(m - 1, g - 2) : 0);
      o.require(lhs == t.n_of_mg(m, g), "cell m=" + std::to_string(m) + " g=" + std::to_string(g));
      if (g <= 15 && m >= 3) {
        const auto r = recurrence_bijection_check(m, g);
        o.require(r.bijective() && r.domain_size == t.n_of_mg(m, g),
                  "bijection m=" + std::to_string(m) + " g=" + std::to_string(g));
        ++bijections;
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(cells) + " cells with 2g<3m, g<=18; " + std::to_string(bijections) +
               " truncation maps bijective for g<=15";
  }
  return o;
}

Outcome kunz_oracle(const CensusTable& t) {
  Outcome o;
  for (int m = 2; m <= 9; ++m) {
    for (int g = 1; g <= 15; ++g) {
      o.require(count_by_polytope(m, g) == t.n_of_mg(m, g), "m=" + std::to_string(m) + " g=" + std::to_string(g));
    }
  }
  // N(3,1) = 0: multiplicity 3 needs genus >= 2, where the closed form starts.
  o.require(t.n_of_mg(3, 1) == 0, "N(3,1)");
  for (int g = 2; g <= 30; ++g) {
    o.require(t.n_of_mg(3, g) == static_cast<std::uint64_t>((g + 3) / 3), "N(3," + std::to_string(g) + ")");
  }
  if (o.ok) o.detail = "120 (m,g) cells match; N(3,g)=ceil((g+1)/3) for 2<=g<=30, N(3,1)=0";
  return o;
}

Outcome ye(const CensusTable& t) {
  Outcome o;
  for (int g = 0; g <= 20; ++g) {
    const auto y = ye_identity(g, t);
    o.require(y.holds, "identity at g=" + std::to_string(g));
    o.require(y.corollary_holds, "corollary at g=" + std::to_string(g));
  }
  if (o.ok) o.detail = "0<=g<=20 exact";
  return o;
}

Outcome sweeps() {
  Outcome o;
  const std::vector<std::vector<std::string>> runs = {
      {"verify", "wilf", "--max-genus", "30"},
      {"verify", "bras-amoros", "--max-genus", "30"},
      {"verify", "ordinarization", "--max-genus", "18"},
      {"verify", "pflueger", "--max-genus", "25"},
      {"verify", "kaplan", "--max-genus", "21", "--max-multiplicity", "9"},
      {"verify", "zhai-lemma", "--max-genus", "20"},
  };
  std::string timings;
  for (const auto& args : runs) {
    const auto r = cli(args);
    o.require(r.code == 0, args[1] + " exited " + std::to_string(r.code));
    timings += (timings.empty() ? "" : " ") + args[1] + "=" + fmt(r.seconds);
  }
  if (o.ok) o.detail = timings;
  return o;
}

Outcome global(const CensusTable& t) {
  Outcome o;
  for (int g = 3; g <= 30; ++g) {
    const auto b = global_bounds(g);
    const BigInt n = t.n_of_g(g);
    o.require(b.lower <= n && n <= b.upper, "g=" + std::to_string(g));
  }
  const auto b3 = global_bounds(3);
  o.require(b3.lower == 4 && b3.upper == 4 && t.n_of_g(3) == 4, "equality at g=3");
  if (o.ok) o.detail = "3<=g<=30; both bounds equal N(3)=4";
  return o;
}

Outcome ratios(const CensusTable& t) {
  Outcome o;
  std::string values;
  for (const auto& row : ratio_report(t)) {
    if (row.genus < 25) continue;
    o.require(row.phi_ratio >= 1.55 && row.phi_ratio <= 1.70, "g=" + std::to_string(row.genus));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.6f", values.empty() ? "" : " ", row.phi_ratio);
    values += buf;
  }
  if (o.ok) o.detail = "N(g)/N(g-1), g=25..30: " + values;
  return o;
}

Outcome round_trips() {
  Outcome o;
  std::uint64_t vectors = 0;
  for (int m = 2; m <= 6; ++m) {
    for (int g = m - 1; g <= 12; ++g) {
      for (const auto& v : kunz_vectors(m, g)) {
        ++vectors;
        o.require(kunz_vector(semigroup_from_kunz(m, v.k)) == v, "kunz round trip");
      }
    }
  }
  std::uint64_t semigroups = 0;
  for (int g = 0; g <= 12; ++g) {
    oracle::for_each_gapset(g, [&](const oracle::Gapset& gs) {
      ++semigroups;
      const auto wd = weight_data(NumericalSemigroup::from_gaps(gs.gaps));
      o.require(wd.partition.size() == wd.weight + g, "partition size");
    });
  }
  if (o.ok) {
    o.detail = std::to_string(vectors) + " Kunz vectors, " + std::to_string(semigroups) + " partitions";
  }
  return o;
}

}  // namespace

int main() {
  ::unsetenv("SGFORGE_THREADS");
  const auto t30 = census(30, CensusTable::kNone, {0, 1});

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Figure 1 genus counts", figure1},
      {"Figure 4 multiplicity table", figure4},
      {"genus 30 performance and determinism", performance},
      {"ns(F) values", ns_values},
      {"F<2m Fibonacci count", [&] { return fibonacci_count(t30); }},
      {"Zhao lower bound", [&] { return zhao(t30); }},
      {"fixed-multiplicity recurrence", [&] { return recurrence(t30); }},
      {"Kunz polytope oracle", [&] { return kunz_oracle(t30); }},
      {"Ye identity", [&] { return ye(t30); }},
      {"conjecture sweeps", sweeps},
      {"global bounds", [&] { return global(t30); }},
      {"ratio trajectory", [&] { return ratios(t30); }},
      {"structural round trips", round_trips},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    const auto o = criteria[i].second();
    const std::chrono::duration<double> dt = Clock::now() - t0;
    failed += !o.ok;
    std::printf("%s %2zu %s: %s [%s]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), fmt(dt.count()).c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
