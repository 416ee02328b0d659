#pragma once

#include <algorithm>
#include <atomic>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "sgforge/error.hpp"
#include "sgforge/node.hpp"
#include "sgforge/semigroup.hpp"

namespace sgforge {

/// How a node was reached from its parent. The full monoid is the Root.
enum class Descent { Root, Strong, Weak };

/// Invariants of the nearest strongly descended ancestor (the node itself
/// when its own descent is Strong or Root). Every semigroup is a weak
/// descendant of exactly one such anchor.
struct Anchor {
  int genus = 0;
  int efficacy = 1;
  int frobenius = -1;
  int multiplicity = 1;
};

/// Read-only view of one visited node, handed to every collector.
class TreeFrame {
 public:
  TreeFrame(const Node& node, std::span<const int> effective, int parent_removed,
            Descent descent, const Anchor& anchor) noexcept
      : node_(&node),
        effective_(effective),
        parent_removed_(parent_removed),
        descent_(descent),
        anchor_(&anchor) {}

  const Node& node() const noexcept { return *node_; }
  int genus() const noexcept { return node_->genus(); }
  int frobenius() const noexcept { return node_->frobenius(); }
  int multiplicity() const noexcept { return node_->multiplicity(); }
  int efficacy() const noexcept { return static_cast<int>(effective_.size()); }

  /// Effective generators in increasing order.
  std::span<const int> effective_values() const noexcept { return effective_; }
  std::vector<GeneratorTag> effective() const;

  /// λ removed from the parent, or -1 at the root.
  int parent_removed() const noexcept { return parent_removed_; }
  Descent descent() const noexcept { return descent_; }
  bool strongly_descended() const noexcept { return descent_ != Descent::Weak; }
  const Anchor& anchor() const noexcept { return *anchor_; }

  NumericalSemigroup semigroup() const { return node_->to_semigroup(); }

 private:
  const Node* node_;
  std::span<const int> effective_;
  int parent_removed_;
  Descent descent_;
  const Anchor* anchor_;
};

/// Strength of the edge parent -> parent∖{λ}. λ must be effective in parent.
Strength descent_strength(const TreeFrame& parent, int lambda);

/// A collector observes frames and folds with other collectors of the same
/// type. merge must be commutative and associative so subtree results can be
/// combined in any order.
template <class C>
concept Collector = std::copy_constructible<C> && requires(C& c, const C& other, const TreeFrame& f) {
  c.visit(f);
  c.merge(other);
};

/// Several collectors driven by one traversal.
template <Collector... Cs>
class CollectorPack {
 public:
  CollectorPack() = default;
  explicit CollectorPack(Cs... cs) : parts_(std::move(cs)...) {}

  void visit(const TreeFrame& f) {
    std::apply([&](auto&... c) { (c.visit(f), ...); }, parts_);
  }
  void merge(const CollectorPack& other) {
    merge_impl(other, std::index_sequence_for<Cs...>{});
  }

  template <std::size_t I>
  auto& get() noexcept { return std::get<I>(parts_); }
  template <std::size_t I>
  const auto& get() const noexcept { return std::get<I>(parts_); }

 private:
  template <std::size_t... I>
  void merge_impl(const CollectorPack& other, std::index_sequence<I...>) {
    (std::get<I>(parts_).merge(std::get<I>(other.parts_)), ...);
  }

  std::tuple<Cs...> parts_;
};

struct EnumerationLimits {
  int max_genus = 0;
  /// When set, children whose Frobenius number would exceed it are pruned.
  std::optional<int> max_frobenius;
};

struct ParallelOptions {
  /// Genus of the frontier whose subtrees become independent work units.
  int split_depth = 0;
  int workers = 1;
};

/// Width of the counter window needed so every node within `limits` can
/// list its effective generators and classify their strength. Throws
/// Errc::WindowOverflow when it does not fit kWindowCapacity.
int window_for(const EnumerationLimits& limits);

/// Highest genus whose level is fully covered by `limits`.
int complete_genus(const EnumerationLimits& limits) noexcept;

namespace detail {

struct FrontierItem {
  Node node;
  int removed;
  Descent descent;
  Anchor anchor;
};

template <Collector C>
class Walker {
 public:
  Walker(const EnumerationLimits& limits, int limit, int split_depth,
         std::vector<FrontierItem>* frontier)
      : max_genus_(limits.max_genus),
        max_frobenius_(limits.max_frobenius.value_or(kWindowCapacity)),
        limit_(limit),
        split_depth_(split_depth),
        frontier_(frontier) {}

  void walk(const Node& node, int removed, Descent descent, const Anchor& parent_anchor, C& out) {
    if (frontier_ != nullptr && node.genus() == split_depth_) {
      frontier_->push_back({node, removed, descent, parent_anchor});
      return;
    }
    std::array<int, kWindowCapacity> effective;
    int h = 0;
    for (int x = node.effective_begin(); x < node.effective_end(); ++x) {
      if (node.is_min_generator(x)) effective[static_cast<std::size_t>(h++)] = x;
    }
    const Anchor anchor = descent == Descent::Weak
                              ? parent_anchor
                              : Anchor{node.genus(), h, node.frobenius(), node.multiplicity()};
    const std::span<const int> eff(effective.data(), static_cast<std::size_t>(h));
    out.visit(TreeFrame(node, eff, removed, descent, anchor));

    if (node.genus() >= max_genus_) return;
    for (int lambda : eff) {
      if (lambda > max_frobenius_) break;
      const Descent d = node.is_strong(lambda) ? Descent::Strong : Descent::Weak;
      walk(node.child(lambda, limit_), lambda, d, anchor, out);
    }
  }

 private:
  int max_genus_;
  int max_frobenius_;
  int limit_;
  int split_depth_;
  std::vector<FrontierItem>* frontier_;
};

}  // namespace detail

/// Depth-first traversal of the semigroup tree from the full monoid down to
/// `limits.max_genus`, visiting each semigroup once with children taken in
/// increasing order of the removed generator.
///
/// With split_depth > 0 the levels above the split are visited on the calling
/// thread and each subtree rooted at genus split_depth is an independent work
/// unit with its own copy of `prototype`; copies are merged at the end. The
/// result does not depend on split_depth or workers.
template <Collector C>
C enumerate(const EnumerationLimits& limits, C prototype, const ParallelOptions& parallel = {}) {
  if (limits.max_genus < 0) throw Error(Errc::OutOfRange, "max genus must be nonnegative");
  if (parallel.split_depth < 0 || parallel.split_depth > limits.max_genus) {
    throw Error(Errc::PreconditionViolated, "split depth must lie in [0, max genus]");
  }
  if (parallel.workers < 1) throw Error(Errc::PreconditionViolated, "workers must be positive");

  const int limit = window_for(limits);
  const Node root = Node::root();
  const Anchor root_anchor{};
  C result = prototype;

  if (parallel.split_depth == 0) {
    detail::Walker<C>(limits, limit, 0, nullptr).walk(root, -1, Descent::Root, root_anchor, result);
    return result;
  }

  std::vector<detail::FrontierItem> frontier;
  detail::Walker<C>(limits, limit, parallel.split_depth, &frontier)
      .walk(root, -1, Descent::Root, root_anchor, result);

  const detail::Walker<C> below(limits, limit, 0, nullptr);
  const auto workers = static_cast<std::size_t>(
      std::max(1, std::min<int>(parallel.workers, static_cast<int>(frontier.size()))));
  std::vector<C> partial(workers, prototype);
  std::atomic<std::size_t> next{0};
  auto run = [&](std::size_t id) {
    auto walker = below;
    for (std::size_t i = next++; i < frontier.size(); i = next++) {
      const auto& item = frontier[i];
      walker.walk(item.node, item.removed, item.descent, item.anchor, partial[id]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t id = 0; id < workers; ++id) pool.emplace_back(run, id);
  }
  for (const auto& p : partial) result.merge(p);
  return result;
}

/// Weak descendants of `s` (including `s` itself) counted per genus up to
/// max_genus, by following only weak edges.
std::vector<std::uint64_t> weak_descendant_counts(const NumericalSemigroup& s, int max_genus);

}  // namespace sgforge
