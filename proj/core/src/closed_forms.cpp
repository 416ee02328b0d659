#include "sgforge/closed_forms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgforge/error.hpp"

namespace sgforge {

BigInt fibonacci(int n) {
  if (n < 0) throw Error(Errc::NegativeIndex, "fibonacci(" + std::to_string(n) + ")");
  BigInt a = 0;
  BigInt b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

BigInt binomial(int n, int k) {
  if (n < 0) throw Error(Errc::OutOfRange, "binomial with negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

SylvesterValues sylvester(int a, int b) {
  if (a < 2 || b <= a) throw Error(Errc::OutOfRange, "needs 2 <= a < b");
  if (std::gcd(a, b) != 1) {
    throw Error(Errc::NotCoprime, std::to_string(a) + " and " + std::to_string(b));
  }
  const std::int64_t x = a;
  const std::int64_t y = b;
  return {x * y - x - y, (x - 1) * (y - 1) / 2};
}

BigInt count_f_lt_2m(int g) {
  if (g < 1) throw Error(Errc::OutOfRange, "genus must be positive");
  BigInt total = 0;
  for (int m = 2; m <= g + 1; ++m) total += binomial(m - 1, g - (m - 1));
  return total;
}

namespace {

void grow_ak(int k, int next, AkMember& current, std::vector<char>& in,
             const std::function<void(const AkMember&)>& visit) {
  // Record the current set before trying larger elements.
  std::vector<char> sums(static_cast<std::size_t>(k) + 1, 0);
  for (int a : current.elements) {
    for (int b : current.elements) {
      if (a + b <= k) sums[static_cast<std::size_t>(a + b)] = 1;
    }
  }
  current.sumset_in_range = static_cast<int>(std::count(sums.begin(), sums.end(), 1));
  visit(current);

  for (int x = next; x < k; ++x) {
    const int partner = k - x;
    if (partner == x) continue;
    if (partner < x && in[static_cast<std::size_t>(partner)]) continue;
    in[static_cast<std::size_t>(x)] = 1;
    current.elements.push_back(x);
    grow_ak(k, x + 1, current, in, visit);
    current.elements.pop_back();
    in[static_cast<std::size_t>(x)] = 0;
  }
}

}  // namespace

void for_each_ak(int k, const std::function<void(const AkMember&)>& visit) {
  if (k < 1) throw Error(Errc::OutOfRange, "k must be positive");
  AkMember current;
  current.elements.push_back(0);
  std::vector<char> in(static_cast<std::size_t>(k), 0);
  in[0] = 1;
  grow_ak(k, 1, current, in, visit);
}

AkFamily enumerate_ak(int k) {
  AkFamily family{k, {}};
  for_each_ak(k, [&](const AkMember& a) { family.members.push_back(a); });
  return family;
}

ZhaoBound zhao_lower_bound_detail(int g) {
  if (g < 1) throw Error(Errc::OutOfRange, "genus must be positive");
  ZhaoBound bound{fibonacci(g + 1), 0};
  for (int k = 1; k <= g / 3; ++k) {
    for_each_ak(k, [&](const AkMember& a) {
      const int index = g - a.sumset_in_range + a.size() - k - 1;
      if (index < 0) {
        ++bound.clamped_terms;
        return;
      }
      bound.value += fibonacci(index);
    });
  }
  return bound;
}

GlobalBounds global_bounds(int g) {
  if (g < 3) throw Error(Errc::OutOfRange, "bounds are stated for g >= 3");
  BigInt upper = 1;
  upper <<= (g - 3);
  return {2 * fibonacci(g), 1 + 3 * upper};
}

}  // namespace sgforge
