#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sdlab/signed_tree_model.hpp"

namespace sdlab {

// Closed 1-based interval of leaf positions.
struct LeafInterval {
  std::size_t first = 0;
  std::size_t last = 0;
  friend bool operator==(const LeafInterval&, const LeafInterval&) = default;
};

// Complete binary tree on n >= 1 leaves in heap layout: node x has children
// 2x+1 and 2x+2, nodes n-1..2n-2 are the leaves, and every level except the
// last is full. The last level is filled from the left, so the leaf at
// left-to-right position k is not in general node n-2+k.
class CompleteTree {
public:
  explicit CompleteTree(std::size_t leaves);

  std::size_t leaf_count() const noexcept { return leaves_; }
  std::size_t node_count() const noexcept { return 2 * leaves_ - 1; }
  // Nodes on the longest root-to-leaf path; equals ceil(log2 n) + 1.
  std::size_t height() const noexcept { return height_; }

  static constexpr NodeId root() noexcept { return 0; }
  bool is_leaf(NodeId x) const noexcept { return x + 1 >= leaves_; }
  NodeId left(NodeId x) const noexcept { return 2 * x + 1; }
  NodeId right(NodeId x) const noexcept { return 2 * x + 2; }
  NodeId parent(NodeId x) const noexcept { return x == 0 ? kNoNode : (x - 1) / 2; }
  std::size_t depth(NodeId x) const noexcept;

  // Node of the leaf at 1-based position k.
  NodeId leaf(std::size_t k) const { return leaf_at_[k - 1]; }
  LeafInterval interval(NodeId x) const { return interval_[x]; }

private:
  std::size_t leaves_ = 0;
  std::size_t height_ = 0;
  std::vector<NodeId> leaf_at_;
  std::vector<LeafInterval> interval_;
};

// The inclusion-maximal nodes whose leaf interval lies inside [i, j], left
// to right. Their intervals partition [i, j]; no smaller node set does so.
std::vector<NodeId> interval_cover(const CompleteTree& r, std::size_t i, std::size_t j);

// |interval_cover(r, i, j)| in O(height) time without building the list.
std::size_t interval_cover_size(const CompleteTree& r, std::size_t i, std::size_t j);

// Leaf interval of every node of a structurally sound model.
std::vector<LeafInterval> subtree_intervals(const SignedTreeModel& m);

// max(0, ceil(sqrt(2m)) - 1): no graph with m edges has larger degeneracy.
std::size_t width_bound(std::size_t m);

// Re-embeds a clean, d-sparse model on the complete binary tree over its
// leaves in left-to-right order. Each signed pair xy is replaced by all pairs
// between the interval covers of x and y; when several original pairs yield
// the same new pair, the deepest of them (pairs above a leaf pair form a
// chain) decides its color. Result has complete = true and node ids equal to
// heap indices. Throws DomainError if the model is invalid, not clean, or has
// more than d * |V(T)| signed pairs.
SignedTreeModel shallowise(const SignedTreeModel& m, std::size_t d);

// Owner of each pair: the endpoint removed first in a min-degree peeling of
// the graph on `node_count` nodes formed by `pairs`. Every node owns at most
// degeneracy-many pairs.
struct PairOrientation {
  std::vector<NodeId> owner;
  std::size_t max_owned = 0;
};
PairOrientation orient_low_outdegree(std::size_t node_count, std::span<const NodePair> pairs);

} // namespace sdlab
