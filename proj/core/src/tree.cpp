#include "sgforge/tree.hpp"

#include <string>

namespace sgforge {

std::vector<GeneratorTag> TreeFrame::effective() const {
  std::vector<GeneratorTag> tags;
  tags.reserve(effective_.size());
  for (int lambda : effective_) {
    tags.push_back({lambda, true, node_->is_strong(lambda) ? Strength::Strong : Strength::Weak});
  }
  return tags;
}

Strength descent_strength(const TreeFrame& parent, int lambda) {
  const auto eff = parent.effective_values();
  if (!std::binary_search(eff.begin(), eff.end(), lambda)) {
    throw Error(Errc::NotEffective, std::to_string(lambda) + " is not effective in the parent");
  }
  return parent.node().is_strong(lambda) ? Strength::Strong : Strength::Weak;
}

int window_for(const EnumerationLimits& limits) {
  // A node of genus g has conductor <= 2g and multiplicity <= g + 1, and the
  // strength test reads index m + λ < conductor + 2m.
  long limit = 4L * limits.max_genus + 2;
  if (limits.max_frobenius) {
    // Conductor and multiplicity are both at most F + 1.
    limit = std::min(limit, 3L * *limits.max_frobenius + 3);
  }
  limit = std::max(limit, 4L);
  if (limit > kWindowCapacity) {
    throw Error(Errc::WindowOverflow, "enumeration needs a window of " + std::to_string(limit) +
                                          " but capacity is " + std::to_string(kWindowCapacity));
  }
  return static_cast<int>(limit);
}

int complete_genus(const EnumerationLimits& limits) noexcept {
  int g = limits.max_genus;
  if (limits.max_frobenius) g = std::min(g, (*limits.max_frobenius + 1) / 2);
  return g;
}

namespace {

void walk_weak(const Node& node, int max_genus, int limit, std::vector<std::uint64_t>& counts) {
  ++counts[static_cast<std::size_t>(node.genus())];
  if (node.genus() >= max_genus) return;
  for (int x = node.effective_begin(); x < node.effective_end(); ++x) {
    if (node.is_min_generator(x) && !node.is_strong(x)) {
      walk_weak(node.child(x, limit), max_genus, limit, counts);
    }
  }
}

}  // namespace

std::vector<std::uint64_t> weak_descendant_counts(const NumericalSemigroup& s, int max_genus) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(max_genus, 0)) + 1, 0);
  if (s.genus() > max_genus) return counts;
  const int limit = window_for({max_genus, std::nullopt});
  walk_weak(Node::from_semigroup(s, limit), max_genus, limit, counts);
  return counts;
}

}  // namespace sgforge
