#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sgforge/census.hpp"
#include "sgforge/closed_forms.hpp"
#include "sgforge/node.hpp"
#include "sgforge/record.hpp"
#include "sgforge/semigroup.hpp"
#include "sgforge/tree.hpp"

namespace sgforge {

// ---------------------------------------------------------------------------
// Per-semigroup checks

struct WilfResult {
  bool holds = true;
  int f_plus_1 = 0;
  int n = 0;  ///< |S ∩ [0, F]|
  int e = 0;  ///< embedding dimension
};

/// F + 1 <= n e. Vacuous for the full monoid (F + 1 = 0).
WilfResult check_wilf(const NumericalSemigroup& s);
WilfResult check_wilf(const Node& node);

/// (S ∪ {F}) ∖ {m}. Throws Errc::AlreadyOrdinary for ordinary semigroups.
NumericalSemigroup ordinarize(const NumericalSemigroup& s);

/// Steps of ordinarize needed to reach the ordinary semigroup.
int ordinarization_number(const NumericalSemigroup& s);

/// |L + L| for the gap set L.
int gap_sumset_size(const NumericalSemigroup& s);
/// Same quantity through an ordered set of pairwise sums.
int gap_sumset_size_naive(const NumericalSemigroup& s);

/// Necessary condition for S to be a Weierstrass semigroup:
/// |L + L| <= 3(g - 1). Throws Errc::PreconditionViolated when g < 2.
bool buchweitz_check(const NumericalSemigroup& s);

/// Effective weight read directly from tree counters.
std::int64_t effective_weight(const Node& node);

/// floor((g+1)^2 / 8)
std::int64_t pflueger_bound(int genus) noexcept;

// ---------------------------------------------------------------------------
// Witness bookkeeping

/// Keeps the first `capacity` semigroups in canonical order plus a total
/// count, so results do not depend on how subtrees were scheduled.
class WitnessList {
 public:
  explicit WitnessList(std::size_t capacity = 8) : capacity_(capacity) {}

  void add(NumericalSemigroup s);
  void merge(const WitnessList& other);

  std::uint64_t total() const noexcept { return total_; }
  const std::vector<NumericalSemigroup>& items() const noexcept { return items_; }

 private:
  std::size_t capacity_;
  std::uint64_t total_ = 0;
  std::vector<NumericalSemigroup> items_;
};

// ---------------------------------------------------------------------------
// Collectors

class WilfCollector {
 public:
  explicit WilfCollector(int max_genus = 0)
      : violations_(static_cast<std::size_t>(max_genus) + 1, 0) {}

  void visit(const TreeFrame& frame);
  void merge(const WilfCollector& other);

  std::uint64_t violations(int g) const { return violations_.at(static_cast<std::size_t>(g)); }
  const WitnessList& witnesses() const noexcept { return witnesses_; }

 private:
  std::vector<std::uint64_t> violations_;
  WitnessList witnesses_;
};

class PfluegerCollector {
 public:
  explicit PfluegerCollector(int max_genus = 0)
      : max_ewt_(static_cast<std::size_t>(max_genus) + 1, 0) {}

  void visit(const TreeFrame& frame);
  void merge(const PfluegerCollector& other);

  std::int64_t max_ewt(int g) const { return max_ewt_.at(static_cast<std::size_t>(g)); }
  const WitnessList& witnesses() const noexcept { return witnesses_; }

 private:
  std::vector<std::int64_t> max_ewt_;
  WitnessList witnesses_;
};

class BuchweitzCollector {
 public:
  /// Semigroups of genus <= cross_check_genus also get the naive sumset.
  explicit BuchweitzCollector(int max_genus = 0, int cross_check_genus = -1);

  void visit(const TreeFrame& frame);
  void merge(const BuchweitzCollector& other);

  std::uint64_t failures(int g) const { return failures_.at(static_cast<std::size_t>(g)); }
  std::uint64_t total(int g) const { return total_.at(static_cast<std::size_t>(g)); }
  const WitnessList& examples() const noexcept { return examples_; }
  const WitnessList& mismatches() const noexcept { return mismatches_; }

 private:
  int cross_check_genus_;
  std::vector<std::uint64_t> failures_;
  std::vector<std::uint64_t> total_;
  WitnessList examples_;
  WitnessList mismatches_;
};

class OrdinarizationCollector {
 public:
  explicit OrdinarizationCollector(int max_genus = 0);

  void visit(const TreeFrame& frame);
  void merge(const OrdinarizationCollector& other);

  /// n_{g,r}; zero outside the table.
  std::uint64_t count(int g, int r) const noexcept;
  int max_genus() const noexcept { return static_cast<int>(counts_.size()) - 1; }

 private:
  std::vector<std::vector<std::uint64_t>> counts_;
};

/// Strongly descended semigroups bucketed by (m, F, g - h), which is all the
/// left-hand side of Zhai's inequality needs.
class ZhaiCollector {
 public:
  void visit(const TreeFrame& frame);
  void merge(const ZhaiCollector& other);

  using Key = std::tuple<int, int, int>;
  const std::map<Key, std::uint64_t>& buckets() const noexcept { return buckets_; }

 private:
  std::map<Key, std::uint64_t> buckets_;
};

/// Splits N(g) over strongly descended anchors into N_2(g) (anchor has
/// g(S) - h(S) < g/3) and N_3(g), and records violations of
/// F(S) < 2m(S) for anchors in S_2 and F(S') < 3m(S') for their weak
/// descendants.
class DecompositionCollector {
 public:
  explicit DecompositionCollector(int max_genus = 0);

  void visit(const TreeFrame& frame);
  void merge(const DecompositionCollector& other);

  std::uint64_t n2(int g) const { return n2_.at(static_cast<std::size_t>(g)); }
  std::uint64_t n3(int g) const { return n3_.at(static_cast<std::size_t>(g)); }
  const WitnessList& anchor_violations() const noexcept { return anchor_violations_; }
  const WitnessList& descendant_violations() const noexcept { return descendant_violations_; }

 private:
  int max_genus_;
  std::vector<std::uint64_t> n2_;
  std::vector<std::uint64_t> n3_;
  WitnessList anchor_violations_;
  WitnessList descendant_violations_;
};

// ---------------------------------------------------------------------------
// Census-level checks

struct YeIdentity {
  int genus = 0;
  std::int64_t lhs = 0;  ///< N(g+2)
  std::int64_t rhs = 0;  ///< N(g+1) - N(g) + S(g+1) + 1 + sum C(h-1, 2)
  bool holds = false;
  bool corollary_holds = false;  ///< N(g+2) >= N(g+1) - N(g)
};

/// Throws Errc::IncompleteCensus unless genus g+2 is complete.
YeIdentity ye_identity(int g, const CensusTable& census);

struct ZhaiResult {
  int multiplicity = 0;
  int frobenius = 0;
  std::uint64_t class_size = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};

/// Sum over S(m,F) of phi^-(g-h) against 5(F-m+2)(1.618/phi)^(F-m-1).
/// Throws Errc::PreconditionViolated unless m >= 2, F > m and m ∤ F.
ZhaiResult zhai_lemma_check(int m, int frobenius, const ZhaiCollector& collector);

struct ConcentrationRow {
  int genus = 0;
  double frobenius_fraction = 0.0;     ///< A_eps(g) / N(g)
  double multiplicity_fraction = 0.0;  ///< Phi_eps(g) / N(g)
  double two_g_lt_three_m = 0.0;       ///< share with 2g < 3m
};

/// Needs a census built with CensusTable::kFrobeniusMultiplicity.
std::vector<ConcentrationRow> concentration_stats(const CensusTable& census, double epsilon);

struct RatioRow {
  int genus = 0;
  double fib_ratio = 0.0;  ///< (N(g-1) + N(g-2)) / N(g)
  double phi_ratio = 0.0;  ///< N(g) / N(g-1)
};

std::vector<RatioRow> ratio_report(const CensusTable& census);

std::vector<std::vector<std::uint64_t>> ordinarization_census(int max_genus,
                                                              const ParallelOptions& parallel = {});

struct PfluegerSweep {
  std::vector<std::int64_t> max_ewt;
  std::vector<std::int64_t> bound;
  WitnessList violations;
};

PfluegerSweep pflueger_sweep(int max_genus, const ParallelOptions& parallel = {});

// ---------------------------------------------------------------------------
// Named sweeps

struct SweepConfig {
  int max_genus = 15;
  int max_multiplicity = 9;
  double epsilon = 0.25;
  ParallelOptions parallel;
};

struct VerificationReport {
  std::string name;
  std::string range;
  std::uint64_t violation_count = 0;
  /// One JSON object per line; semigroup witnesses carry "generators".
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, double>> stats;
  Table table;

  bool passed() const noexcept { return violation_count == 0; }
  /// Summary line: name, range, violations, stats.
  std::string summary_json() const;
};

/// Names accepted by run_verification, in display order.
const std::vector<std::string>& verification_names();

/// Runs the named sweep. Throws Errc::OutOfRange for unknown names.
VerificationReport run_verification(const std::string& name, const SweepConfig& config);

}  // namespace sgforge
