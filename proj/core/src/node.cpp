#include "sgforge/node.hpp"

#include <string>
#include <vector>

#include "sgforge/error.hpp"

namespace sgforge {

Node Node::root() noexcept {
  Node n;
  for (int x = 0; x < kWindowCapacity; ++x) {
    n.decs_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x / 2 + 1);
  }
  return n;
}

Node Node::from_semigroup(const NumericalSemigroup& s, int limit) {
  if (limit > kWindowCapacity) {
    throw Error(Errc::WindowOverflow, "window " + std::to_string(limit) + " exceeds capacity " +
                                          std::to_string(kWindowCapacity));
  }
  Node n;
  n.conductor_ = s.conductor();
  n.genus_ = s.genus();
  n.multiplicity_ = s.multiplicity();
  for (int x = 0; x < limit; ++x) {
    int count = 0;
    for (int a = 0; 2 * a <= x; ++a) {
      if (s.contains(a) && s.contains(x - a)) ++count;
    }
    n.decs_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(count);
  }
  return n;
}

Node Node::child(int lambda, int limit) const noexcept {
  Node c;
  c.conductor_ = lambda + 1;
  c.genus_ = genus_ + 1;
  c.multiplicity_ = lambda == multiplicity_ ? multiplicity_ + 1 : multiplicity_;

  const std::uint8_t* __restrict__ src = decs_.data();
  std::uint8_t* __restrict__ dst = c.decs_.data();
  for (int x = 0; x < lambda; ++x) dst[x] = src[x];
  for (int x = lambda; x < limit; ++x) {
    dst[x] = static_cast<std::uint8_t>(src[x] - (src[x - lambda] != 0));
  }
  return c;
}

int Node::efficacy() const noexcept {
  int h = 0;
  for (int x = effective_begin(); x < effective_end(); ++x) h += decs_[static_cast<std::size_t>(x)] == 1;
  return h;
}

int Node::embedding_dimension() const noexcept {
  int e = 0;
  for (int x = multiplicity_; x < effective_end(); ++x) e += decs_[static_cast<std::size_t>(x)] == 1;
  return e;
}

NumericalSemigroup Node::to_semigroup() const {
  std::vector<int> gaps;
  gaps.reserve(static_cast<std::size_t>(genus_));
  for (int x = 1; x < conductor_; ++x) {
    if (decs_[static_cast<std::size_t>(x)] == 0) gaps.push_back(x);
  }
  return NumericalSemigroup::from_gaps(gaps);
}

}  // namespace sgforge
