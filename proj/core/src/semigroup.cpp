#include "sgforge/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "sgforge/error.hpp"

namespace sgforge {

std::int64_t Partition::size() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

NumericalSemigroup::NumericalSemigroup() : NumericalSemigroup(std::vector<int>{}, 0) {}

NumericalSemigroup::NumericalSemigroup(std::vector<int> gaps, int min_bound)
    : gaps_(std::move(gaps)) {
  frobenius_ = gaps_.empty() ? -1 : gaps_.back();

  multiplicity_ = 1;
  for (int gap : gaps_) {
    if (gap != multiplicity_) break;
    ++multiplicity_;
  }

  bound_ = std::max(min_bound, frobenius_ + 2 * multiplicity_ + 1);
  member_.assign(static_cast<std::size_t>(bound_) + 1, 1);
  for (int gap : gaps_) member_[static_cast<std::size_t>(gap)] = 0;

  // Every minimal generator is at most F + m.
  const int last = std::max(1, frobenius_ + multiplicity_);
  for (int x = 1; x <= last; ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (int u = multiplicity_; 2 * u <= x; ++u) {
      if (contains(u) && contains(x - u)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) generators_.push_back(x);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> generators) {
  if (generators.empty()) throw Error(Errc::EmptyGenerators, "no generators given");
  int gcd = 0;
  for (int n : generators) {
    if (n <= 0) throw Error(Errc::NotAMember, "generators must be positive");
    gcd = std::gcd(gcd, n);
  }
  if (gcd != 1) {
    throw Error(Errc::GcdNotOne, "gcd of generators is " + std::to_string(gcd));
  }

  const int smallest = *std::min_element(generators.begin(), generators.end());
  const int largest = *std::max_element(generators.begin(), generators.end());

  // Grow the table until `smallest` consecutive members appear; everything
  // after such a run is reachable by adding `smallest`.
  std::vector<std::uint8_t> member{1};
  std::vector<int> gaps;
  int run = 1;
  for (int x = 1; run < smallest; ++x) {
    bool in = false;
    for (int n : generators) {
      if (n <= x && member[static_cast<std::size_t>(x - n)]) {
        in = true;
        break;
      }
    }
    member.push_back(in ? 1 : 0);
    if (in) {
      ++run;
    } else {
      run = 0;
      gaps.push_back(x);
    }
  }
  const int frobenius = gaps.empty() ? -1 : gaps.back();
  return NumericalSemigroup(std::move(gaps), frobenius + largest + 1);
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int> gaps) {
  std::vector<int> sorted(gaps.begin(), gaps.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::NotASemigroup, "repeated gap");
  }
  if (!sorted.empty() && sorted.front() <= 0) {
    throw Error(Errc::NotASemigroup, "gaps must be positive");
  }
  NumericalSemigroup s(std::move(sorted), 0);
  for (int gap : s.gaps_) {
    for (int u = 1; 2 * u <= gap; ++u) {
      if (s.contains(u) && s.contains(gap - u)) {
        throw Error(Errc::NotASemigroup,
                    "gap " + std::to_string(gap) + " = " + std::to_string(u) + " + " +
                        std::to_string(gap - u) + " with both summands members");
      }
    }
  }
  return s;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out << ',';
    out << generators_[i];
  }
  out << '>';
  return out.str();
}

std::strong_ordering operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (auto c = a.genus() <=> b.genus(); c != 0) return c;
  return a.gaps_ <=> b.gaps_;
}

NumericalSemigroup ordinary(int genus) {
  if (genus < 0) throw Error(Errc::OutOfRange, "genus must be nonnegative");
  std::vector<int> gaps(static_cast<std::size_t>(genus));
  std::iota(gaps.begin(), gaps.end(), 1);
  return NumericalSemigroup::from_gaps(gaps);
}

std::vector<int> apery_set(const NumericalSemigroup& s, int n) {
  if (n <= 0 || !s.contains(n)) {
    throw Error(Errc::NotAMember, std::to_string(n) + " is not a positive member of " +
                                      s.to_string());
  }
  std::vector<int> apery(static_cast<std::size_t>(n), -1);
  int found = 0;
  for (int x = 0; found < n; ++x) {
    auto& slot = apery[static_cast<std::size_t>(x % n)];
    if (slot < 0 && s.contains(x)) {
      slot = x;
      ++found;
    }
  }
  return apery;
}

std::vector<GeneratorTag> effective_generators(const NumericalSemigroup& s) {
  std::vector<GeneratorTag> tags;
  tags.reserve(s.min_generators().size());
  for (int lambda : s.min_generators()) {
    GeneratorTag tag{lambda, lambda > s.frobenius(), Strength::NotEffective};
    if (tag.effective) {
      const auto child = remove_generator(s, lambda);
      const auto& gens = child.min_generators();
      const bool strong =
          std::binary_search(gens.begin(), gens.end(), s.multiplicity() + lambda);
      tag.strength = strong ? Strength::Strong : Strength::Weak;
    }
    tags.push_back(tag);
  }
  return tags;
}

int efficacy(const NumericalSemigroup& s) {
  const auto& gens = s.min_generators();
  return static_cast<int>(std::count_if(gens.begin(), gens.end(),
                                        [&](int x) { return x > s.frobenius(); }));
}

NumericalSemigroup remove_generator(const NumericalSemigroup& s, int lambda) {
  const auto& gens = s.min_generators();
  if (lambda <= s.frobenius() || !std::binary_search(gens.begin(), gens.end(), lambda)) {
    throw Error(Errc::NotEffective,
                std::to_string(lambda) + " is not an effective generator of " + s.to_string());
  }
  std::vector<int> gaps = s.gaps();
  gaps.push_back(lambda);
  return NumericalSemigroup::from_gaps(gaps);
}

WeightData weight_data(const NumericalSemigroup& s) {
  WeightData data;
  const auto& gaps = s.gaps();
  const auto& gens = s.min_generators();
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const int gap = gaps[i];
    const int index = static_cast<int>(i) + 1;
    data.weight += gap - index;
    // Row of the Ferrers diagram: right-steps taken before this up-step.
    data.partition.parts.push_back(gap - index + 1);
    data.effective_weight +=
        std::lower_bound(gens.begin(), gens.end(), gap) - gens.begin();
  }
  std::sort(data.partition.parts.begin(), data.partition.parts.end(), std::greater<>());
  return data;
}

}  // namespace sgforge
