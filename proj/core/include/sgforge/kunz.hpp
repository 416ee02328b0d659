#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sgforge/semigroup.hpp"

namespace sgforge {

/// Apéry-tuple coordinates (k_1, ..., k_{m-1}) of a multiplicity-m
/// semigroup: the least member congruent to i mod m is k_i * m + i.
struct KunzVector {
  int multiplicity = 2;
  std::vector<int> k;

  int genus() const noexcept;
  friend bool operator==(const KunzVector&, const KunzVector&) = default;
  friend auto operator<=>(const KunzVector&, const KunzVector&) = default;
};

/// Throws Errc::MultiplicityOne for the full monoid.
KunzVector kunz_vector(const NumericalSemigroup& s);

/// Checks k_i >= 1, k_i + k_j >= k_{i+j} (i+j < m) and
/// k_i + k_j + 1 >= k_{i+j-m} (i+j > m). Pairs with i+j = m are
/// unconstrained. Throws Errc::DimensionMismatch unless |k| = m - 1.
bool satisfies_kunz(int m, std::span<const int> k);

/// Throws Errc::InvalidKunz when the vector violates the inequalities.
NumericalSemigroup semigroup_from_kunz(int m, std::span<const int> k);

/// Calls `visit` for every lattice point of the genus-g slice of the
/// multiplicity-m Kunz cone, in lexicographic order.
void for_each_kunz_vector(int m, int g, const std::function<void(std::span<const int>)>& visit);
std::vector<KunzVector> kunz_vectors(int m, int g);

/// N(m, g) by counting lattice points, sharded by k_1 over `workers` threads.
std::uint64_t count_by_polytope(int m, int g, int workers = 1);

struct BijectionReport {
  int multiplicity = 0;
  int genus = 0;
  std::uint64_t domain_size = 0;    ///< N(m, g)
  std::uint64_t codomain_size = 0;  ///< N(m-1, g-1) + N(m-1, g-2)
  /// Domain vectors whose truncation is not a valid vector of genus g-1 or g-2.
  std::vector<KunzVector> invalid_images;
  /// Domain vectors sharing a truncation with an earlier vector.
  std::vector<KunzVector> collisions;
  /// Codomain vectors not reached.
  std::vector<KunzVector> missed;

  bool bijective() const noexcept {
    return invalid_images.empty() && collisions.empty() && missed.empty();
  }
};

/// Verifies that dropping the last coordinate maps the (m, g) slice
/// bijectively onto the union of the (m-1, g-1) and (m-1, g-2) slices.
/// Throws Errc::PreconditionViolated unless 2g < 3m and m >= 3.
BijectionReport recurrence_bijection_check(int m, int g);

}  // namespace sgforge
