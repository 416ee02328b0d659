#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sgforge {

enum class Strength { Strong, Weak, NotEffective };

/// One minimal generator together with its role in the semigroup tree.
/// `effective` iff value > F(S); strength is Strong/Weak exactly when effective.
struct GeneratorTag {
  int value = 0;
  bool effective = false;
  Strength strength = Strength::NotEffective;

  friend bool operator==(const GeneratorTag&, const GeneratorTag&) = default;
};

/// Weakly decreasing list of positive parts.
struct Partition {
  std::vector<int> parts;

  std::int64_t size() const noexcept;
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct WeightData {
  std::int64_t weight = 0;
  std::int64_t effective_weight = 0;
  Partition partition;
};

/// A numerical semigroup stored as a membership table over [0, bound()].
///
/// Every integer above bound() is a member. The table always reaches past
/// F + 2m, so membership queries needed for minimal generators, Apéry sets
/// and strong-generator tests never leave the stored window. Values are
/// immutable after construction.
///
/// The Frobenius number of the full monoid is -1, so its only minimal
/// generator 1 counts as effective.
class NumericalSemigroup {
 public:
  /// The full monoid of nonnegative integers.
  NumericalSemigroup();

  static NumericalSemigroup from_generators(std::span<const int> generators);
  static NumericalSemigroup from_generators(std::initializer_list<int> generators) {
    return from_generators(std::span<const int>(generators.begin(), generators.size()));
  }

  /// Builds the semigroup whose gap set is exactly `gaps`; throws
  /// Errc::NotASemigroup if the complement is not closed under addition.
  static NumericalSemigroup from_gaps(std::span<const int> gaps);

  bool contains(int x) const noexcept {
    if (x < 0) return false;
    if (x > bound_) return true;
    return member_[static_cast<std::size_t>(x)] != 0;
  }

  int multiplicity() const noexcept { return multiplicity_; }
  int frobenius() const noexcept { return frobenius_; }
  int conductor() const noexcept { return frobenius_ + 1; }
  int genus() const noexcept { return static_cast<int>(gaps_.size()); }
  int embedding_dimension() const noexcept { return static_cast<int>(generators_.size()); }
  bool is_ordinary() const noexcept { return multiplicity_ == genus() + 1; }

  const std::vector<int>& gaps() const noexcept { return gaps_; }
  const std::vector<int>& min_generators() const noexcept { return generators_; }

  /// Largest integer covered by the stored membership table.
  int bound() const noexcept { return bound_; }
  std::span<const std::uint8_t> membership() const noexcept { return member_; }

  /// Compact form such as "<3,5,7>".
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }
  /// Orders by genus, then lexicographically by gap list.
  friend std::strong_ordering operator<=>(const NumericalSemigroup& a,
                                          const NumericalSemigroup& b);

 private:
  NumericalSemigroup(std::vector<int> gaps, int min_bound);

  std::vector<std::uint8_t> member_;
  std::vector<int> gaps_;
  std::vector<int> generators_;
  int multiplicity_ = 1;
  int frobenius_ = -1;
  int bound_ = 0;
};

/// Ordinary semigroup {0, g+1, g+2, ...}.
NumericalSemigroup ordinary(int genus);

/// Least member of each residue class modulo n, indexed by residue.
/// Throws Errc::NotAMember unless n is a positive member of s.
std::vector<int> apery_set(const NumericalSemigroup& s, int n);
inline std::vector<int> apery_set(const NumericalSemigroup& s) {
  return apery_set(s, s.multiplicity());
}

/// Tags every minimal generator. Strength is decided from the definition:
/// m(S)+λ must be a minimal generator of S∖{λ}.
std::vector<GeneratorTag> effective_generators(const NumericalSemigroup& s);

/// Number of effective generators, h(S).
int efficacy(const NumericalSemigroup& s);

/// S∖{λ}. Throws Errc::NotEffective unless λ is a minimal generator above F(S).
NumericalSemigroup remove_generator(const NumericalSemigroup& s, int lambda);

WeightData weight_data(const NumericalSemigroup& s);

}  // namespace sgforge
