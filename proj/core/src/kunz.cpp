#include "sgforge/kunz.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "sgforge/error.hpp"

namespace sgforge {

namespace {

// Checks every inequality whose largest index is `i` (1-based), assuming
// k_1..k_i are fixed and all inequalities among smaller indices hold.
bool prefix_ok(int m, const std::vector<int>& k, int i) {
  auto at = [&](int idx) { return k[static_cast<std::size_t>(idx - 1)]; };
  for (int a = 1; a <= i; ++a) {
    for (int b = a; b <= i; ++b) {
      const int sum = a + b;
      if (sum < m) {
        if (sum == i && at(a) + at(b) < at(sum)) return false;
      } else if (sum > m) {
        // sum - m < a <= b, so b is the largest index.
        if (b == i && at(a) + at(b) + 1 < at(sum - m)) return false;
      }
    }
  }
  return true;
}

// Slots 0..i-1 are fixed; fills slot i with every feasible value.
void extend(int m, int remaining, std::vector<int>& k, int i,
            const std::function<void(std::span<const int>)>& visit) {
  const int pos = i + 1;
  auto& slot = k[static_cast<std::size_t>(i)];
  if (pos == m - 1) {
    slot = remaining;
    if (remaining >= 1 && prefix_ok(m, k, pos)) visit(k);
    return;
  }
  const int hi = remaining - (m - 1 - pos);
  for (int v = 1; v <= hi; ++v) {
    slot = v;
    if (prefix_ok(m, k, pos)) extend(m, remaining - v, k, i + 1, visit);
  }
}

void enumerate_slice(int m, int g, int first_lo, int first_hi,
                     const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> k(static_cast<std::size_t>(m - 1), 0);
  if (m == 2) {
    if (g >= 1 && first_lo <= g && g <= first_hi) {
      k[0] = g;
      visit(k);
    }
    return;
  }
  const int hi = std::min(first_hi, g - (m - 2));
  for (int v = std::max(first_lo, 1); v <= hi; ++v) {
    k[0] = v;
    extend(m, g - v, k, 1, visit);
  }
}

}  // namespace

int KunzVector::genus() const noexcept { return std::accumulate(k.begin(), k.end(), 0); }

KunzVector kunz_vector(const NumericalSemigroup& s) {
  const int m = s.multiplicity();
  if (m < 2) throw Error(Errc::MultiplicityOne, "the full monoid has no Kunz coordinates");
  const auto apery = apery_set(s, m);
  KunzVector v{m, {}};
  v.k.reserve(static_cast<std::size_t>(m - 1));
  for (int i = 1; i < m; ++i) v.k.push_back((apery[static_cast<std::size_t>(i)] - i) / m);
  return v;
}

bool satisfies_kunz(int m, std::span<const int> k) {
  if (m < 2 || k.size() != static_cast<std::size_t>(m - 1)) {
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(m - 1) +
                                             " coordinates, got " + std::to_string(k.size()));
  }
  auto at = [&](int i) { return k[static_cast<std::size_t>(i - 1)]; };
  for (int i = 1; i < m; ++i) {
    if (at(i) < 1) return false;
  }
  for (int i = 1; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const int sum = i + j;
      if (sum < m && at(i) + at(j) < at(sum)) return false;
      if (sum > m && at(i) + at(j) + 1 < at(sum - m)) return false;
    }
  }
  return true;
}

NumericalSemigroup semigroup_from_kunz(int m, std::span<const int> k) {
  if (!satisfies_kunz(m, k)) throw Error(Errc::InvalidKunz, "vector violates the Kunz inequalities");
  std::vector<int> gaps;
  for (int i = 1; i < m; ++i) {
    for (int q = 0; q < k[static_cast<std::size_t>(i - 1)]; ++q) gaps.push_back(q * m + i);
  }
  return NumericalSemigroup::from_gaps(gaps);
}

void for_each_kunz_vector(int m, int g,
                          const std::function<void(std::span<const int>)>& visit) {
  if (m < 2 || g < m - 1) return;
  enumerate_slice(m, g, 1, g, visit);
}

std::vector<KunzVector> kunz_vectors(int m, int g) {
  std::vector<KunzVector> out;
  for_each_kunz_vector(m, g, [&](std::span<const int> k) {
    out.push_back({m, std::vector<int>(k.begin(), k.end())});
  });
  return out;
}

std::uint64_t count_by_polytope(int m, int g, int workers) {
  if (m < 2 || g < m - 1) return 0;
  const int shards = m == 2 ? 1 : g - (m - 2);
  workers = std::clamp(workers, 1, shards);
  std::vector<std::uint64_t> per_worker(static_cast<std::size_t>(workers), 0);
  std::atomic<int> next{1};
  auto run = [&](std::size_t id) {
    for (int v = next++; v <= shards; v = next++) {
      const int lo = m == 2 ? 1 : v;
      const int hi = m == 2 ? g : v;
      enumerate_slice(m, g, lo, hi, [&](std::span<const int>) { ++per_worker[id]; });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (int id = 0; id < workers; ++id) pool.emplace_back(run, static_cast<std::size_t>(id));
  }
  return std::accumulate(per_worker.begin(), per_worker.end(), std::uint64_t{0});
}

BijectionReport recurrence_bijection_check(int m, int g) {
  if (m < 3 || 2 * g >= 3 * m) {
    throw Error(Errc::PreconditionViolated,
                "needs m >= 3 and 2g < 3m, got m=" + std::to_string(m) + " g=" + std::to_string(g));
  }
  BijectionReport report;
  report.multiplicity = m;
  report.genus = g;

  std::set<std::vector<int>> images;
  for_each_kunz_vector(m, g, [&](std::span<const int> k) {
    ++report.domain_size;
    std::vector<int> image(k.begin(), k.end() - 1);
    const int image_genus = std::accumulate(image.begin(), image.end(), 0);
    const bool valid =
        (image_genus == g - 1 || image_genus == g - 2) && satisfies_kunz(m - 1, image);
    if (!valid) {
      report.invalid_images.push_back({m, std::vector<int>(k.begin(), k.end())});
      return;
    }
    if (!images.insert(std::move(image)).second) {
      report.collisions.push_back({m, std::vector<int>(k.begin(), k.end())});
    }
  });

  for (int target : {g - 1, g - 2}) {
    for_each_kunz_vector(m - 1, target, [&](std::span<const int> k) {
      ++report.codomain_size;
      if (!images.contains(std::vector<int>(k.begin(), k.end()))) {
        report.missed.push_back({m - 1, std::vector<int>(k.begin(), k.end())});
      }
    });
  }
  return report;
}

}  // namespace sgforge
