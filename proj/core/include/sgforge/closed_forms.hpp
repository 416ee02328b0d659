#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgforge {

using BigInt = boost::multiprecision::cpp_int;

/// F_0 = 0, F_1 = 1. Throws Errc::NegativeIndex for n < 0.
BigInt fibonacci(int n);

/// C(n, k) for n >= 0; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

struct SylvesterValues {
  std::int64_t frobenius = 0;
  std::int64_t genus = 0;
};

/// Frobenius number ab - a - b and genus (a-1)(b-1)/2 of <a, b>.
/// Requires 2 <= a < b; throws Errc::NotCoprime when gcd(a, b) != 1.
SylvesterValues sylvester(int a, int b);

/// Number of genus-g semigroups with F < 2m as the binomial sum
/// sum_m C(m-1, g-(m-1)).
BigInt count_f_lt_2m(int g);

/// A ⊆ [0, k-1] with 0 ∈ A and k ∉ A + A.
struct AkMember {
  std::vector<int> elements;
  int sumset_in_range = 0;  ///< |(A + A) ∩ [0, k]|

  int size() const noexcept { return static_cast<int>(elements.size()); }
};

struct AkFamily {
  int k = 1;
  std::vector<AkMember> members;
};

/// Backtracks over 1..k-1, refusing any element whose complement to k is
/// already present. The visitor sees members in lexicographic order.
void for_each_ak(int k, const std::function<void(const AkMember&)>& visit);
AkFamily enumerate_ak(int k);

struct ZhaoBound {
  BigInt value;
  /// Terms whose Fibonacci index fell below zero and were counted as 0.
  int clamped_terms = 0;
};

/// F_{g+1} + sum_{k=1}^{floor(g/3)} sum_{A ∈ A_k} F_{g - |(A+A) ∩ [0,k]| + |A| - k - 1}.
ZhaoBound zhao_lower_bound_detail(int g);
inline BigInt zhao_lower_bound(int g) { return zhao_lower_bound_detail(g).value; }

struct GlobalBounds {
  BigInt lower;  ///< 2 F_g
  BigInt upper;  ///< 1 + 3 * 2^(g-3)
};

/// Throws Errc::OutOfRange for g < 3.
GlobalBounds global_bounds(int g);

}  // namespace sgforge
