#pragma once

#include <array>
#include <cstdint>

#include "sgforge/semigroup.hpp"

namespace sgforge {

/// Number of integers [0, kWindowCapacity) tracked by a tree node.
inline constexpr int kWindowCapacity = 256;

/// Traversal state of one semigroup in the tree.
///
/// decs[x] counts the unordered pairs {a, b}, a <= b, a + b = x, with both a
/// and b members (0 included). So x is a member iff decs[x] > 0 and a
/// minimal generator iff decs[x] == 1. Removing a generator λ only
/// decrements entries at x >= λ, by one exactly when x - λ is a member.
///
/// Counters are exact on [0, limit) where `limit` is the window the
/// enumeration was started with; beyond it they are stale.
class Node {
 public:
  /// The full monoid: decs[x] = floor(x/2) + 1, F = -1.
  static Node root() noexcept;

  /// Rebuilds counters for an arbitrary semigroup; exact on [0, limit).
  static Node from_semigroup(const NumericalSemigroup& s, int limit);

  /// S∖{λ}, maintained incrementally. λ must be an effective generator.
  Node child(int lambda, int limit) const noexcept;

  bool contains(int x) const noexcept {
    return x >= conductor_ || (x >= 0 && decs_[static_cast<std::size_t>(x)] != 0);
  }
  bool is_min_generator(int x) const noexcept {
    return x > 0 && decs_[static_cast<std::size_t>(x)] == 1;
  }
  std::uint8_t decompositions(int x) const noexcept {
    return decs_[static_cast<std::size_t>(x)];
  }

  int genus() const noexcept { return genus_; }
  int conductor() const noexcept { return conductor_; }
  int frobenius() const noexcept { return conductor_ - 1; }
  int multiplicity() const noexcept { return multiplicity_; }

  /// Effective generators lie in [effective_begin, effective_begin + m).
  int effective_begin() const noexcept { return conductor_ > 0 ? conductor_ : 1; }
  int effective_end() const noexcept { return effective_begin() + multiplicity_; }

  /// Strong iff m + λ is a minimal generator of S∖{λ}, i.e. its only
  /// decompositions in S are 0 + (m+λ) and m + λ.
  bool is_strong(int lambda) const noexcept { return decompositions(multiplicity_ + lambda) == 2; }

  int efficacy() const noexcept;
  int embedding_dimension() const noexcept;

  NumericalSemigroup to_semigroup() const;

 private:
  alignas(32) std::array<std::uint8_t, kWindowCapacity> decs_{};
  int conductor_ = 0;
  int genus_ = 0;
  int multiplicity_ = 1;
};

}  // namespace sgforge
