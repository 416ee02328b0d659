#pragma once

#include <cstdint>
#include <vector>

#include "sgforge/tree.hpp"

namespace sgforge {

/// Per-genus counters gathered over one traversal. Cells outside the
/// enumerated range read as zero.
///
/// Always collected: N(g), N(m,g), t(g,h), the F < 2m and F < 3m counts,
/// strongly descended counts S(g) and s(g,h), ns(F), and the correction
/// sum over genus-g semigroups of C(h-1, 2) used by Ye's identity. The
/// binomial is the polynomial (h-1)(h-2)/2, so a childless semigroup adds 1.
///
/// With kFrobeniusMultiplicity the table also keeps the full (g, m, F)
/// histogram behind the concentration statistics.
class CensusTable {
 public:
  enum Options : unsigned { kNone = 0, kFrobeniusMultiplicity = 1u << 0 };

  CensusTable() : CensusTable(0) {}
  explicit CensusTable(int max_genus, unsigned options = kNone);

  void visit(const TreeFrame& frame);
  void merge(const CensusTable& other);

  int max_genus() const noexcept { return max_genus_; }
  unsigned options() const noexcept { return options_; }

  /// Levels 0..complete_genus() are fully enumerated.
  int complete_genus() const noexcept { return complete_genus_; }
  /// ns(F) is exact for F <= complete_frobenius().
  int complete_frobenius() const noexcept { return complete_frobenius_; }
  void set_completeness(int genus, int frobenius) noexcept {
    complete_genus_ = genus;
    complete_frobenius_ = frobenius;
  }

  std::uint64_t n_of_g(int g) const noexcept;
  std::uint64_t n_of_mg(int m, int g) const noexcept;
  std::uint64_t t_of_gh(int g, int h) const noexcept;
  /// Genus-g semigroups with F < 3m, i.e. t(g).
  std::uint64_t t_f3m(int g) const noexcept;
  /// Genus-g semigroups with F < 2m.
  std::uint64_t t_f2m(int g) const noexcept;
  /// S(g), counting the full monoid at genus 0.
  std::uint64_t strongly_descended(int g) const noexcept;
  std::uint64_t s_of_gh(int g, int h) const noexcept;
  std::uint64_t ns_of_f(int frobenius) const noexcept;
  std::uint64_t ye_correction(int g) const noexcept;
  /// Requires kFrobeniusMultiplicity.
  std::uint64_t n_of_gmf(int g, int m, int frobenius) const noexcept;

  /// Largest Frobenius number a table of this genus range can hold.
  int max_frobenius() const noexcept { return 2 * max_genus_ - 1; }

  friend bool operator==(const CensusTable&, const CensusTable&) = default;

 private:
  std::size_t gm_index(int g, int m) const noexcept {
    return static_cast<std::size_t>(g) * stride_ + static_cast<std::size_t>(m);
  }
  std::size_t gmf_index(int g, int m, int frobenius) const noexcept {
    return (static_cast<std::size_t>(g) * stride_ + static_cast<std::size_t>(m)) * f_stride_ +
           static_cast<std::size_t>(frobenius + 1);
  }
  bool in_genus(int g) const noexcept { return g >= 0 && g <= max_genus_; }
  bool in_column(int c) const noexcept { return c >= 0 && static_cast<std::size_t>(c) < stride_; }

  int max_genus_ = 0;
  unsigned options_ = kNone;
  int complete_genus_ = 0;
  int complete_frobenius_ = 0;
  std::size_t stride_ = 0;
  std::size_t f_stride_ = 0;

  std::vector<std::uint64_t> n_of_g_;
  std::vector<std::uint64_t> n_of_mg_;
  std::vector<std::uint64_t> t_of_gh_;
  std::vector<std::uint64_t> t_f3m_;
  std::vector<std::uint64_t> t_f2m_;
  std::vector<std::uint64_t> strong_;
  std::vector<std::uint64_t> s_of_gh_;
  std::vector<std::uint64_t> ns_of_f_;
  std::vector<std::uint64_t> ye_correction_;
  std::vector<std::uint64_t> n_of_gmf_;
};

/// Runs the traversal with a CensusTable collector and records how much of
/// the table is complete.
CensusTable census(const EnumerationLimits& limits, unsigned options = CensusTable::kNone,
                   const ParallelOptions& parallel = {});
inline CensusTable census(int max_genus, unsigned options = CensusTable::kNone,
                          const ParallelOptions& parallel = {}) {
  return census(EnumerationLimits{max_genus, std::nullopt}, options, parallel);
}

struct StrongDescentSummary {
  std::vector<std::uint64_t> by_genus;  ///< S(g)
  CensusTable table;

  std::uint64_t s(int g, int h) const { return table.s_of_gh(g, h); }
  /// r(n) = s(2n+1, n+1), with r(-1) = r(0) = 1. Throws Errc::IncompleteTable
  /// when genus 2n+1 was not fully enumerated.
  std::uint64_t r(int n) const;
};

/// Throws Errc::IncompleteTable if the table's completeness is below its
/// declared max genus.
StrongDescentSummary strongly_descended_census(const CensusTable& table);

/// ns(F) for F = 1..max_frobenius (index 0 unused), from a traversal pruned
/// at Frobenius number max_frobenius.
std::vector<std::uint64_t> ns_by_frobenius(int max_frobenius, const ParallelOptions& parallel = {});

}  // namespace sgforge
