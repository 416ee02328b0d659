#include "sgforge/census.hpp"

#include <string>

namespace sgforge {

namespace {

void add_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
}

}  // namespace

CensusTable::CensusTable(int max_genus, unsigned options)
    : max_genus_(max_genus),
      options_(options),
      complete_genus_(max_genus),
      complete_frobenius_(max_genus),
      stride_(static_cast<std::size_t>(max_genus) + 2),
      f_stride_(2 * static_cast<std::size_t>(max_genus) + 1) {
  if (max_genus < 0) throw Error(Errc::OutOfRange, "max genus must be nonnegative");
  const auto levels = static_cast<std::size_t>(max_genus) + 1;
  n_of_g_.assign(levels, 0);
  n_of_mg_.assign(levels * stride_, 0);
  t_of_gh_.assign(levels * stride_, 0);
  t_f3m_.assign(levels, 0);
  t_f2m_.assign(levels, 0);
  strong_.assign(levels, 0);
  s_of_gh_.assign(levels * stride_, 0);
  ns_of_f_.assign(f_stride_, 0);
  ye_correction_.assign(levels, 0);
  if (options_ & kFrobeniusMultiplicity) n_of_gmf_.assign(levels * stride_ * f_stride_, 0);
}

void CensusTable::visit(const TreeFrame& frame) {
  const int g = frame.genus();
  const int m = frame.multiplicity();
  const int f = frame.frobenius();
  const int h = frame.efficacy();
  const auto gi = static_cast<std::size_t>(g);

  ++n_of_g_[gi];
  ++n_of_mg_[gm_index(g, m)];
  ++t_of_gh_[gm_index(g, h)];
  if (f < 3 * m) ++t_f3m_[gi];
  if (f < 2 * m) ++t_f2m_[gi];
  if (frame.strongly_descended()) {
    ++strong_[gi];
    ++s_of_gh_[gm_index(g, h)];
  }
  ++ns_of_f_[static_cast<std::size_t>(f + 1)];
  ye_correction_[gi] += static_cast<std::uint64_t>((h - 1) * (h - 2) / 2);
  if (options_ & kFrobeniusMultiplicity) ++n_of_gmf_[gmf_index(g, m, f)];
}

void CensusTable::merge(const CensusTable& other) {
  if (other.max_genus_ != max_genus_ || other.options_ != options_) {
    throw Error(Errc::PreconditionViolated, "cannot merge census tables of different shape");
  }
  add_into(n_of_g_, other.n_of_g_);
  add_into(n_of_mg_, other.n_of_mg_);
  add_into(t_of_gh_, other.t_of_gh_);
  add_into(t_f3m_, other.t_f3m_);
  add_into(t_f2m_, other.t_f2m_);
  add_into(strong_, other.strong_);
  add_into(s_of_gh_, other.s_of_gh_);
  add_into(ns_of_f_, other.ns_of_f_);
  add_into(ye_correction_, other.ye_correction_);
  add_into(n_of_gmf_, other.n_of_gmf_);
}

std::uint64_t CensusTable::n_of_g(int g) const noexcept {
  return in_genus(g) ? n_of_g_[static_cast<std::size_t>(g)] : 0;
}
std::uint64_t CensusTable::n_of_mg(int m, int g) const noexcept {
  return in_genus(g) && in_column(m) ? n_of_mg_[gm_index(g, m)] : 0;
}
std::uint64_t CensusTable::t_of_gh(int g, int h) const noexcept {
  return in_genus(g) && in_column(h) ? t_of_gh_[gm_index(g, h)] : 0;
}
std::uint64_t CensusTable::t_f3m(int g) const noexcept {
  return in_genus(g) ? t_f3m_[static_cast<std::size_t>(g)] : 0;
}
std::uint64_t CensusTable::t_f2m(int g) const noexcept {
  return in_genus(g) ? t_f2m_[static_cast<std::size_t>(g)] : 0;
}
std::uint64_t CensusTable::strongly_descended(int g) const noexcept {
  return in_genus(g) ? strong_[static_cast<std::size_t>(g)] : 0;
}
std::uint64_t CensusTable::s_of_gh(int g, int h) const noexcept {
  return in_genus(g) && in_column(h) ? s_of_gh_[gm_index(g, h)] : 0;
}
std::uint64_t CensusTable::ns_of_f(int frobenius) const noexcept {
  const int i = frobenius + 1;
  return i >= 0 && static_cast<std::size_t>(i) < ns_of_f_.size()
             ? ns_of_f_[static_cast<std::size_t>(i)]
             : 0;
}
std::uint64_t CensusTable::ye_correction(int g) const noexcept {
  return in_genus(g) ? ye_correction_[static_cast<std::size_t>(g)] : 0;
}
std::uint64_t CensusTable::n_of_gmf(int g, int m, int frobenius) const noexcept {
  if (n_of_gmf_.empty() || !in_genus(g) || !in_column(m)) return 0;
  if (frobenius < -1 || static_cast<std::size_t>(frobenius + 1) >= f_stride_) return 0;
  return n_of_gmf_[gmf_index(g, m, frobenius)];
}

CensusTable census(const EnumerationLimits& limits, unsigned options,
                   const ParallelOptions& parallel) {
  auto table = enumerate(limits, CensusTable(limits.max_genus, options), parallel);
  const int frob = limits.max_frobenius ? std::min(*limits.max_frobenius, limits.max_genus)
                                        : limits.max_genus;
  table.set_completeness(complete_genus(limits), frob);
  return table;
}

std::uint64_t StrongDescentSummary::r(int n) const {
  if (n == -1 || n == 0) return 1;
  if (n < -1) throw Error(Errc::OutOfRange, "r(n) is defined for n >= -1");
  if (2 * n + 1 > table.complete_genus()) {
    throw Error(Errc::IncompleteTable,
                "r(" + std::to_string(n) + ") needs genus " + std::to_string(2 * n + 1));
  }
  return table.s_of_gh(2 * n + 1, n + 1);
}

StrongDescentSummary strongly_descended_census(const CensusTable& table) {
  if (table.complete_genus() < table.max_genus()) {
    throw Error(Errc::IncompleteTable, "genus levels above " +
                                           std::to_string(table.complete_genus()) +
                                           " were not fully enumerated");
  }
  StrongDescentSummary summary{{}, table};
  for (int g = 0; g <= table.max_genus(); ++g) {
    summary.by_genus.push_back(table.strongly_descended(g));
  }
  return summary;
}

std::vector<std::uint64_t> ns_by_frobenius(int max_frobenius, const ParallelOptions& parallel) {
  if (max_frobenius < 1) throw Error(Errc::OutOfRange, "max Frobenius number must be >= 1");
  const auto table = census(EnumerationLimits{max_frobenius, max_frobenius}, CensusTable::kNone,
                            parallel);
  std::vector<std::uint64_t> ns(static_cast<std::size_t>(max_frobenius) + 1, 0);
  for (int f = 1; f <= max_frobenius; ++f) ns[static_cast<std::size_t>(f)] = table.ns_of_f(f);
  return ns;
}

}  // namespace sgforge
