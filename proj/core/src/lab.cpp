#include "sgforge/lab.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <string>

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

#include "sgforge/error.hpp"
#include "sgforge/kunz.hpp"

namespace sgforge {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Per-semigroup checks

WilfResult check_wilf(const NumericalSemigroup& s) {
  WilfResult r;
  r.f_plus_1 = s.frobenius() + 1;
  r.n = r.f_plus_1 - s.genus();
  r.e = s.embedding_dimension();
  r.holds = r.f_plus_1 <= r.n * r.e;
  return r;
}

WilfResult check_wilf(const Node& node) {
  WilfResult r;
  r.f_plus_1 = node.frobenius() + 1;
  r.n = r.f_plus_1 - node.genus();
  r.e = node.embedding_dimension();
  r.holds = r.f_plus_1 <= r.n * r.e;
  return r;
}

NumericalSemigroup ordinarize(const NumericalSemigroup& s) {
  if (s.is_ordinary()) throw Error(Errc::AlreadyOrdinary, s.to_string() + " is ordinary");
  std::vector<int> gaps = s.gaps();
  gaps.back() = s.multiplicity();  // F is the largest gap; swap it for m.
  return NumericalSemigroup::from_gaps(gaps);
}

int ordinarization_number(const NumericalSemigroup& s) {
  int steps = 0;
  for (auto current = s; !current.is_ordinary(); current = ordinarize(current)) ++steps;
  return steps;
}

int gap_sumset_size(const NumericalSemigroup& s) {
  if (s.genus() == 0) return 0;
  const auto width = static_cast<std::size_t>(2 * s.frobenius() + 1);
  boost::dynamic_bitset<> gaps(width);
  for (int l : s.gaps()) gaps.set(static_cast<std::size_t>(l));
  boost::dynamic_bitset<> sums(width);
  for (int l : s.gaps()) sums |= gaps << static_cast<std::size_t>(l);
  return static_cast<int>(sums.count());
}

int gap_sumset_size_naive(const NumericalSemigroup& s) {
  std::set<int> sums;
  for (int a : s.gaps()) {
    for (int b : s.gaps()) sums.insert(a + b);
  }
  return static_cast<int>(sums.size());
}

bool buchweitz_check(const NumericalSemigroup& s) {
  if (s.genus() < 2) throw Error(Errc::PreconditionViolated, "criterion needs genus >= 2");
  return gap_sumset_size(s) <= 3 * (s.genus() - 1);
}

std::int64_t effective_weight(const Node& node) {
  std::int64_t ewt = 0;
  std::int64_t generators_below = 0;
  for (int x = 1; x < node.conductor(); ++x) {
    const auto d = node.decompositions(x);
    if (d == 0) {
      ewt += generators_below;
    } else if (d == 1) {
      ++generators_below;
    }
  }
  return ewt;
}

std::int64_t pflueger_bound(int genus) noexcept {
  const std::int64_t g = genus;
  return (g + 1) * (g + 1) / 8;
}

// ---------------------------------------------------------------------------
// Witness bookkeeping

void WitnessList::add(NumericalSemigroup s) {
  ++total_;
  if (items_.size() == capacity_ && !(s < items_.back())) return;
  items_.insert(std::upper_bound(items_.begin(), items_.end(), s), std::move(s));
  if (items_.size() > capacity_) items_.pop_back();
}

void WitnessList::merge(const WitnessList& other) {
  const auto total = total_ + other.total_;
  for (const auto& s : other.items_) add(s);
  total_ = total;
}

// ---------------------------------------------------------------------------
// Collectors

namespace {

void add_counts(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] += src[i];
}

}  // namespace

void WilfCollector::visit(const TreeFrame& frame) {
  if (check_wilf(frame.node()).holds) return;
  ++violations_[static_cast<std::size_t>(frame.genus())];
  witnesses_.add(frame.semigroup());
}

void WilfCollector::merge(const WilfCollector& other) {
  add_counts(violations_, other.violations_);
  witnesses_.merge(other.witnesses_);
}

void PfluegerCollector::visit(const TreeFrame& frame) {
  const auto ewt = effective_weight(frame.node());
  auto& best = max_ewt_[static_cast<std::size_t>(frame.genus())];
  best = std::max(best, ewt);
  if (ewt > pflueger_bound(frame.genus())) witnesses_.add(frame.semigroup());
}

void PfluegerCollector::merge(const PfluegerCollector& other) {
  if (max_ewt_.size() < other.max_ewt_.size()) max_ewt_.resize(other.max_ewt_.size(), 0);
  for (std::size_t i = 0; i < other.max_ewt_.size(); ++i) {
    max_ewt_[i] = std::max(max_ewt_[i], other.max_ewt_[i]);
  }
  witnesses_.merge(other.witnesses_);
}

BuchweitzCollector::BuchweitzCollector(int max_genus, int cross_check_genus)
    : cross_check_genus_(cross_check_genus),
      failures_(static_cast<std::size_t>(max_genus) + 1, 0),
      total_(static_cast<std::size_t>(max_genus) + 1, 0) {}

void BuchweitzCollector::visit(const TreeFrame& frame) {
  const int g = frame.genus();
  if (g < 2) return;
  const Node& node = frame.node();
  // Gaps are below 2g, so sums stay below 4g <= 2 * kWindowCapacity.
  std::bitset<2 * kWindowCapacity> gaps;
  for (int x = 1; x < node.conductor(); ++x) {
    if (!node.contains(x)) gaps.set(static_cast<std::size_t>(x));
  }
  std::bitset<2 * kWindowCapacity> sums;
  for (int x = 1; x < node.conductor(); ++x) {
    if (gaps.test(static_cast<std::size_t>(x))) sums |= gaps << static_cast<std::size_t>(x);
  }
  const auto size = static_cast<int>(sums.count());

  const auto gi = static_cast<std::size_t>(g);
  ++total_[gi];
  if (size > 3 * (g - 1)) {
    ++failures_[gi];
    examples_.add(frame.semigroup());
  }
  if (g <= cross_check_genus_) {
    const auto s = frame.semigroup();
    if (gap_sumset_size_naive(s) != size || gap_sumset_size(s) != size) mismatches_.add(s);
  }
}

void BuchweitzCollector::merge(const BuchweitzCollector& other) {
  add_counts(failures_, other.failures_);
  add_counts(total_, other.total_);
  examples_.merge(other.examples_);
  mismatches_.merge(other.mismatches_);
}

OrdinarizationCollector::OrdinarizationCollector(int max_genus)
    : counts_(static_cast<std::size_t>(max_genus) + 1) {}

void OrdinarizationCollector::visit(const TreeFrame& frame) {
  const auto r = static_cast<std::size_t>(ordinarization_number(frame.semigroup()));
  auto& row = counts_[static_cast<std::size_t>(frame.genus())];
  if (row.size() <= r) row.resize(r + 1, 0);
  ++row[r];
}

void OrdinarizationCollector::merge(const OrdinarizationCollector& other) {
  if (counts_.size() < other.counts_.size()) counts_.resize(other.counts_.size());
  for (std::size_t g = 0; g < other.counts_.size(); ++g) add_counts(counts_[g], other.counts_[g]);
}

std::uint64_t OrdinarizationCollector::count(int g, int r) const noexcept {
  if (g < 0 || r < 0 || static_cast<std::size_t>(g) >= counts_.size()) return 0;
  const auto& row = counts_[static_cast<std::size_t>(g)];
  return static_cast<std::size_t>(r) < row.size() ? row[static_cast<std::size_t>(r)] : 0;
}

void ZhaiCollector::visit(const TreeFrame& frame) {
  if (!frame.strongly_descended()) return;
  ++buckets_[{frame.multiplicity(), frame.frobenius(), frame.genus() - frame.efficacy()}];
}

void ZhaiCollector::merge(const ZhaiCollector& other) {
  for (const auto& [key, n] : other.buckets_) buckets_[key] += n;
}

DecompositionCollector::DecompositionCollector(int max_genus)
    : max_genus_(max_genus),
      n2_(static_cast<std::size_t>(max_genus) + 1, 0),
      n3_(static_cast<std::size_t>(max_genus) + 1, 0) {}

void DecompositionCollector::visit(const TreeFrame& frame) {
  const int g = frame.genus();
  const Anchor& a = frame.anchor();
  const auto gi = static_cast<std::size_t>(g);
  if (3 * (a.genus - a.efficacy) < g) {
    ++n2_[gi];
    if (frame.frobenius() >= 3 * frame.multiplicity()) descendant_violations_.add(frame.semigroup());
  } else {
    ++n3_[gi];
  }
  if (frame.strongly_descended()) {
    // Member of S_2 for some target genus within range.
    const int reach = std::min(max_genus_, g + frame.efficacy());
    if (3 * (g - frame.efficacy()) < reach && frame.frobenius() >= 2 * frame.multiplicity()) {
      anchor_violations_.add(frame.semigroup());
    }
  }
}

void DecompositionCollector::merge(const DecompositionCollector& other) {
  add_counts(n2_, other.n2_);
  add_counts(n3_, other.n3_);
  anchor_violations_.merge(other.anchor_violations_);
  descendant_violations_.merge(other.descendant_violations_);
}

// ---------------------------------------------------------------------------
// Census-level checks

YeIdentity ye_identity(int g, const CensusTable& census) {
  if (g < 0 || g + 2 > census.complete_genus()) {
    throw Error(Errc::IncompleteCensus, "Ye identity at g=" + std::to_string(g) +
                                            " needs genus " + std::to_string(g + 2));
  }
  auto n = [&](int k) { return static_cast<std::int64_t>(census.n_of_g(k)); };
  YeIdentity y;
  y.genus = g;
  y.lhs = n(g + 2);
  y.rhs = n(g + 1) - n(g) + static_cast<std::int64_t>(census.strongly_descended(g + 1)) + 1 +
          static_cast<std::int64_t>(census.ye_correction(g));
  y.holds = y.lhs == y.rhs;
  y.corollary_holds = y.lhs >= n(g + 1) - n(g);
  return y;
}

ZhaiResult zhai_lemma_check(int m, int frobenius, const ZhaiCollector& collector) {
  if (m < 2 || frobenius <= m || frobenius % m == 0) {
    throw Error(Errc::PreconditionViolated, "needs m >= 2, F > m, m not dividing F");
  }
  constexpr double phi = std::numbers::phi;
  ZhaiResult r;
  r.multiplicity = m;
  r.frobenius = frobenius;
  const auto& buckets = collector.buckets();
  for (auto it = buckets.lower_bound({m, frobenius, -1}); it != buckets.end(); ++it) {
    const auto& [key, count] = *it;
    if (std::get<0>(key) != m || std::get<1>(key) != frobenius) break;
    r.class_size += count;
    r.lhs += static_cast<double>(count) * std::pow(phi, -std::get<2>(key));
  }
  r.rhs = 5.0 * (frobenius - m + 2) * std::pow(1.618 / phi, frobenius - m - 1);
  r.holds = r.lhs <= r.rhs + 1e-9;
  return r;
}

std::vector<ConcentrationRow> concentration_stats(const CensusTable& census, double epsilon) {
  if (!(census.options() & CensusTable::kFrobeniusMultiplicity)) {
    throw Error(Errc::PreconditionViolated, "census lacks the (g, m, F) histogram");
  }
  const double gamma = (5.0 + std::sqrt(5.0)) / 10.0;
  std::vector<ConcentrationRow> rows;
  for (int g = 1; g <= census.complete_genus(); ++g) {
    const auto total = static_cast<double>(census.n_of_g(g));
    std::uint64_t a = 0;
    std::uint64_t phi = 0;
    std::uint64_t ratio = 0;
    for (int m = 2; m <= g + 1; ++m) {
      const auto n_m = census.n_of_mg(m, g);
      if (n_m == 0) continue;
      if ((gamma - epsilon) * g < m && m < (gamma + epsilon) * g) phi += n_m;
      if (2 * g < 3 * m) ratio += n_m;
      for (int f = 1; f <= 2 * g - 1; ++f) {
        const auto n = census.n_of_gmf(g, m, f);
        if (n != 0 && (2.0 - epsilon) * m < f && f < (2.0 + epsilon) * m) a += n;
      }
    }
    rows.push_back({g, static_cast<double>(a) / total, static_cast<double>(phi) / total,
                    static_cast<double>(ratio) / total});
  }
  return rows;
}

std::vector<RatioRow> ratio_report(const CensusTable& census) {
  std::vector<RatioRow> rows;
  auto n = [&](int g) { return static_cast<double>(census.n_of_g(g)); };
  for (int g = 2; g <= census.complete_genus(); ++g) {
    rows.push_back({g, (n(g - 1) + n(g - 2)) / n(g), n(g) / n(g - 1)});
  }
  return rows;
}

std::vector<std::vector<std::uint64_t>> ordinarization_census(int max_genus,
                                                              const ParallelOptions& parallel) {
  const auto c = enumerate({max_genus, std::nullopt}, OrdinarizationCollector(max_genus), parallel);
  std::vector<std::vector<std::uint64_t>> out(static_cast<std::size_t>(max_genus) + 1);
  for (int g = 0; g <= max_genus; ++g) {
    for (int r = 0; c.count(g, r) != 0 || r < g; ++r) {
      out[static_cast<std::size_t>(g)].push_back(c.count(g, r));
    }
    auto& row = out[static_cast<std::size_t>(g)];
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  return out;
}

PfluegerSweep pflueger_sweep(int max_genus, const ParallelOptions& parallel) {
  if (max_genus < 1) throw Error(Errc::OutOfRange, "max genus must be >= 1");
  const auto c = enumerate({max_genus, std::nullopt}, PfluegerCollector(max_genus), parallel);
  PfluegerSweep sweep;
  for (int g = 0; g <= max_genus; ++g) {
    sweep.max_ewt.push_back(c.max_ewt(g));
    sweep.bound.push_back(pflueger_bound(g));
  }
  sweep.violations = c.witnesses();
  return sweep;
}

// ---------------------------------------------------------------------------
// Named sweeps

std::string VerificationReport::summary_json() const {
  Json j;
  j["check"] = name;
  j["range"] = range;
  j["violations"] = violation_count;
  Json s = Json::object();
  for (const auto& [k, v] : stats) s[k] = v;
  j["stats"] = std::move(s);
  j["passed"] = passed();
  return j.dump();
}

namespace {

Cell I(std::int64_t v) { return Cell{v}; }
Cell U(std::uint64_t v) { return Cell{static_cast<std::int64_t>(v)}; }
Cell D(double v) { return Cell{v}; }
std::int64_t big(const BigInt& v) { return v.convert_to<std::int64_t>(); }

std::string genus_range(int g) { return "g<=" + std::to_string(g); }

void add_witnesses(VerificationReport& report, const WitnessList& list) {
  for (const auto& s : list.items()) report.witnesses.push_back(semigroup_record(s));
}

void add_cell_violation(VerificationReport& report,
                        std::vector<std::pair<std::string, std::int64_t>> fields) {
  ++report.violation_count;
  if (report.witnesses.size() < 32) report.witnesses.push_back(json_object(fields));
}

void require_genus(const SweepConfig& c, int at_least) {
  if (c.max_genus < at_least) {
    throw Error(Errc::OutOfRange, "this sweep needs --max-genus >= " + std::to_string(at_least));
  }
}

VerificationReport verify_wilf(const SweepConfig& c) {
  VerificationReport r{"wilf", genus_range(c.max_genus), 0, {}, {}, {{"g", "violations"}, {}}};
  const auto w = enumerate({c.max_genus, std::nullopt}, WilfCollector(c.max_genus), c.parallel);
  for (int g = 0; g <= c.max_genus; ++g) r.table.add({I(g), U(w.violations(g))});
  r.violation_count = w.witnesses().total();
  add_witnesses(r, w.witnesses());
  return r;
}

VerificationReport verify_ye(const SweepConfig& c) {
  require_genus(c, 2);
  VerificationReport r{"ye", "0<=g<=" + std::to_string(c.max_genus - 2), 0, {}, {},
                       {{"g", "lhs", "rhs", "holds", "corollary"}, {}}};
  const auto census = sgforge::census(c.max_genus, CensusTable::kNone, c.parallel);
  for (int g = 0; g + 2 <= c.max_genus; ++g) {
    const auto y = ye_identity(g, census);
    r.table.add({I(g), I(y.lhs), I(y.rhs), I(y.holds), I(y.corollary_holds)});
    if (!y.holds || !y.corollary_holds) {
      add_cell_violation(r, {{"g", g}, {"lhs", y.lhs}, {"rhs", y.rhs}});
    }
  }
  const auto strong = strongly_descended_census(census);
  for (int n = 1; 2 * n + 1 <= c.max_genus; ++n) {
    r.stats.emplace_back("r(" + std::to_string(n) + ")", static_cast<double>(strong.r(n)));
  }
  return r;
}

VerificationReport verify_bras_amoros(const SweepConfig& c) {
  VerificationReport r{"bras-amoros", genus_range(c.max_genus), 0, {}, {},
                       {{"g", "fib_ratio", "phi_ratio"}, {}}};
  const auto census = sgforge::census(c.max_genus, CensusTable::kNone, c.parallel);
  for (const auto& row : ratio_report(census)) {
    r.table.add({I(row.genus), D(row.fib_ratio), D(row.phi_ratio)});
  }
  for (int g = 1; g <= c.max_genus; ++g) {
    const auto n = census.n_of_g(g);
    const auto prev = census.n_of_g(g - 1);
    if (g >= 2 && n < prev + census.n_of_g(g - 2)) {
      add_cell_violation(r, {{"g", g}, {"conjecture", 1}});
    }
    if (n < prev) add_cell_violation(r, {{"g", g}, {"conjecture", 2}});
  }
  if (c.max_genus >= 1) {
    r.stats.emplace_back("last_phi_ratio", static_cast<double>(census.n_of_g(c.max_genus)) /
                                               static_cast<double>(census.n_of_g(c.max_genus - 1)));
  }
  return r;
}

VerificationReport verify_kaplan(const SweepConfig& c) {
  VerificationReport r{"kaplan",
                       "m<=" + std::to_string(c.max_multiplicity) + ",g<" +
                           std::to_string(c.max_genus),
                       0, {}, {}, {{"m", "g", "count", "next", "holds"}, {}}};
  const auto census = sgforge::census(c.max_genus, CensusTable::kNone, c.parallel);
  for (int m = 2; m <= c.max_multiplicity; ++m) {
    for (int g = 0; g < c.max_genus; ++g) {
      const auto a = census.n_of_mg(m, g);
      const auto b = census.n_of_mg(m, g + 1);
      r.table.add({I(m), I(g), U(a), U(b), I(a <= b)});
      if (a > b) add_cell_violation(r, {{"m", m}, {"g", g}});
    }
  }
  return r;
}

VerificationReport verify_ordinarization(const SweepConfig& c) {
  VerificationReport r{"ordinarization", genus_range(c.max_genus), 0, {}, {}, {{"g", "r", "count"}, {}}};
  const auto census = sgforge::census(c.max_genus, CensusTable::kNone, c.parallel);
  const auto n = ordinarization_census(c.max_genus, c.parallel);
  for (int g = 0; g <= c.max_genus; ++g) {
    const auto& row = n[static_cast<std::size_t>(g)];
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      r.table.add({I(g), I(static_cast<std::int64_t>(k)), U(row[k])});
      total += row[k];
    }
    if (total != census.n_of_g(g) || row.empty() || row[0] != 1) {
      add_cell_violation(r, {{"g", g}, {"total", static_cast<std::int64_t>(total)}});
    }
    if (g == c.max_genus) continue;
    const auto& next = n[static_cast<std::size_t>(g) + 1];
    for (std::size_t k = 0; k < row.size(); ++k) {
      const auto upper = k < next.size() ? next[k] : 0;
      if (row[k] > upper) {
        add_cell_violation(r, {{"g", g}, {"r", static_cast<std::int64_t>(k)}});
      }
    }
  }
  return r;
}

VerificationReport verify_pflueger(const SweepConfig& c) {
  require_genus(c, 1);
  VerificationReport r{"pflueger", genus_range(c.max_genus), 0, {}, {}, {{"g", "max_ewt", "bound"}, {}}};
  const auto sweep = pflueger_sweep(c.max_genus, c.parallel);
  for (int g = 0; g <= c.max_genus; ++g) {
    r.table.add({I(g), I(sweep.max_ewt[static_cast<std::size_t>(g)]),
                 I(sweep.bound[static_cast<std::size_t>(g)])});
  }
  r.violation_count = sweep.violations.total();
  add_witnesses(r, sweep.violations);
  return r;
}

VerificationReport verify_zhai_lemma(const SweepConfig& c) {
  require_genus(c, 3);
  const int fmax = c.max_genus;
  VerificationReport r{"zhai-lemma", "F<=" + std::to_string(fmax), 0, {}, {},
                       {{"m", "F", "class_size", "lhs", "rhs", "holds"}, {}}};
  const auto zc = enumerate({fmax, fmax}, ZhaiCollector{}, c.parallel);
  double worst = 0.0;
  for (int m = 2; m < fmax; ++m) {
    for (int f = m + 1; f <= fmax; ++f) {
      if (f % m == 0) continue;
      const auto z = zhai_lemma_check(m, f, zc);
      r.table.add({I(m), I(f), U(z.class_size), D(z.lhs), D(z.rhs), I(z.holds)});
      worst = std::max(worst, z.lhs / z.rhs);
      if (!z.holds) add_cell_violation(r, {{"m", m}, {"F", f}});
    }
  }
  r.stats.emplace_back("max_lhs_over_rhs", worst);
  return r;
}

VerificationReport verify_decomposition(const SweepConfig& c) {
  VerificationReport r{"decomposition", genus_range(c.max_genus), 0, {}, {},
                       {{"g", "N", "N2", "N3", "t_g"}, {}}};
  const auto both = enumerate({c.max_genus, std::nullopt},
                              CollectorPack<CensusTable, DecompositionCollector>(
                                  CensusTable(c.max_genus), DecompositionCollector(c.max_genus)),
                              c.parallel);
  const auto& census = both.get<0>();
  const auto& d = both.get<1>();
  for (int g = 0; g <= c.max_genus; ++g) {
    r.table.add({I(g), U(census.n_of_g(g)), U(d.n2(g)), U(d.n3(g)), U(census.t_f3m(g))});
    if (d.n2(g) + d.n3(g) != census.n_of_g(g) || d.n2(g) > census.t_f3m(g)) {
      add_cell_violation(r, {{"g", g}});
    }
  }
  r.violation_count += d.anchor_violations().total() + d.descendant_violations().total();
  add_witnesses(r, d.anchor_violations());
  add_witnesses(r, d.descendant_violations());
  return r;
}

VerificationReport verify_kunz_oracle(const SweepConfig& c) {
  VerificationReport r{"kunz-oracle",
                       "2<=m<=" + std::to_string(c.max_multiplicity) + ",1<=g<=" +
                           std::to_string(c.max_genus),
                       0, {}, {}, {{"m", "g", "count_polytope", "count_tree", "match"}, {}}};
  const auto census = sgforge::census(c.max_genus, CensusTable::kNone, c.parallel);
  for (int m = 2; m <= c.max_multiplicity; ++m) {
    for (int g = 1; g <= c.max_genus; ++g) {
      const auto poly = count_by_polytope(m, g, c.parallel.workers);
      const auto tree = census.n_of_mg(m, g);
      r.table.add({I(m), I(g), U(poly), U(tree), I(poly == tree)});
      if (poly != tree) add_cell_violation(r, {{"m", m}, {"g", g}});
    }
  }
  // ceil((g+1)/3) only applies once multiplicity 3 is reachable, g >= 2.
  for (int g = 2; g <= c.max_genus; ++g) {
    const auto expected = static_cast<std::uint64_t>((g + 1 + 2) / 3);
    if (census.n_of_mg(3, g) != expected || count_by_polytope(3, g) != expected) {
      add_cell_violation(r, {{"m", 3}, {"g", g}});
    }
  }
  return r;
}

VerificationReport verify_recurrence(const SweepConfig& c) {
  VerificationReport r{"recurrence", genus_range(c.max_genus), 0, {}, {},
                       {{"m", "g", "lhs", "rhs", "bijective"}, {}}};
  const auto census = sgforge::census(c.max_genus, CensusTable::kNone, c.parallel);
  std::uint64_t cells = 0;
  for (int g = 1; g <= c.max_genus; ++g) {
    for (int m = 2; m <= g + 2; ++m) {
      if (2 * g >= 3 * m) continue;
      ++cells;
      const auto lhs = census.n_of_mg(m - 1, g - 1) + (g >= 2 ? census.n_of_mg(m - 1, g - 2) : 0);
      const auto rhs = census.n_of_mg(m, g);
      bool bijective = true;
      if (m >= 3) {
        const auto report = recurrence_bijection_check(m, g);
        bijective = report.bijective() && report.domain_size == rhs && report.codomain_size == lhs;
      }
      r.table.add({I(m), I(g), U(lhs), U(rhs), I(bijective)});
      if (lhs != rhs || !bijective) add_cell_violation(r, {{"m", m}, {"g", g}});
    }
  }
  r.stats.emplace_back("cells", static_cast<double>(cells));
  return r;
}

VerificationReport verify_buchweitz(const SweepConfig& c) {
  VerificationReport r{"buchweitz", genus_range(c.max_genus), 0, {}, {},
                       {{"g", "failures", "total"}, {}}};
  const int cross = std::min(c.max_genus, 12);
  const auto b = enumerate({c.max_genus, std::nullopt}, BuchweitzCollector(c.max_genus, cross),
                           c.parallel);
  int first = -1;
  for (int g = 2; g <= c.max_genus; ++g) {
    r.table.add({I(g), U(b.failures(g)), U(b.total(g))});
    if (first < 0 && b.failures(g) > 0) first = g;
  }
  r.violation_count = b.mismatches().total();
  add_witnesses(r, b.mismatches());
  r.stats.emplace_back("first_failure_genus", first);
  r.stats.emplace_back("cross_checked_through_genus", cross);
  return r;
}

VerificationReport verify_bounds(const SweepConfig& c) {
  VerificationReport r{"bounds", genus_range(c.max_genus), 0, {}, {},
                       {{"g", "fib_lower", "zhao_lower", "t_g", "N_g", "upper"}, {}}};
  const auto census = sgforge::census(c.max_genus, CensusTable::kNone, c.parallel);
  for (int g = 1; g <= c.max_genus; ++g) {
    const auto zhao = zhao_lower_bound(g);
    const BigInt t = census.t_f3m(g);
    const BigInt n = census.n_of_g(g);
    if (!(zhao <= t && t <= n)) add_cell_violation(r, {{"g", g}, {"bound", 0}});
    if (g < 3) continue;
    const auto bounds = global_bounds(g);
    r.table.add({I(g), I(big(bounds.lower)), I(big(zhao)), I(big(t)), I(big(n)), I(big(bounds.upper))});
    if (!(bounds.lower <= n && n <= bounds.upper)) add_cell_violation(r, {{"g", g}, {"bound", 1}});
  }
  return r;
}

VerificationReport verify_fibonacci(const SweepConfig& c) {
  VerificationReport r{"fibonacci", genus_range(c.max_genus), 0, {}, {},
                       {{"g", "enumerated", "binomial_sum", "fibonacci"}, {}}};
  const auto census = sgforge::census(c.max_genus, CensusTable::kNone, c.parallel);
  for (int g = 1; g <= c.max_genus; ++g) {
    const auto fib = fibonacci(g + 1);
    const auto sum = count_f_lt_2m(g);
    const BigInt counted = census.t_f2m(g);
    r.table.add({I(g), I(big(counted)), I(big(sum)), I(big(fib))});
    if (counted != fib || sum != fib) add_cell_violation(r, {{"g", g}});
  }
  return r;
}

VerificationReport verify_concentration(const SweepConfig& c) {
  VerificationReport r{"concentration", genus_range(c.max_genus), 0, {}, {},
                       {{"g", "frac_frobenius", "frac_multiplicity", "frac_2g_lt_3m"}, {}}};
  const auto census =
      sgforge::census(c.max_genus, CensusTable::kFrobeniusMultiplicity, c.parallel);
  for (const auto& row : concentration_stats(census, c.epsilon)) {
    r.table.add({I(row.genus), D(row.frobenius_fraction), D(row.multiplicity_fraction),
                 D(row.two_g_lt_three_m)});
  }
  r.stats.emplace_back("epsilon", c.epsilon);
  return r;
}

VerificationReport verify_ns_parity(const SweepConfig& c) {
  require_genus(c, 2);
  VerificationReport r{"ns-parity", "F<=" + std::to_string(c.max_genus), 0, {}, {},
                       {{"k", "ns_odd", "ns_even"}, {}}};
  const auto ns = ns_by_frobenius(c.max_genus, c.parallel);
  for (int k = 1; 2 * k <= c.max_genus; ++k) {
    r.table.add({I(k), U(ns[static_cast<std::size_t>(2 * k - 1)]),
                 U(ns[static_cast<std::size_t>(2 * k)])});
  }
  return r;
}

using Runner = VerificationReport (*)(const SweepConfig&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"wilf", verify_wilf},
      {"ye", verify_ye},
      {"bras-amoros", verify_bras_amoros},
      {"kaplan", verify_kaplan},
      {"ordinarization", verify_ordinarization},
      {"pflueger", verify_pflueger},
      {"zhai-lemma", verify_zhai_lemma},
      {"decomposition", verify_decomposition},
      {"kunz-oracle", verify_kunz_oracle},
      {"recurrence", verify_recurrence},
      {"buchweitz", verify_buchweitz},
      {"bounds", verify_bounds},
      {"fibonacci", verify_fibonacci},
      {"concentration", verify_concentration},
      {"ns-parity", verify_ns_parity},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verification_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport run_verification(const std::string& name, const SweepConfig& config) {
  for (const auto& [key, runner] : registry()) {
    if (key == name) return runner(config);
  }
  throw Error(Errc::OutOfRange, "unknown check '" + name + "'");
}

}  // namespace sgforge
