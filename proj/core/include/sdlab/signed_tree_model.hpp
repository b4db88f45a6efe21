#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdlab/graph.hpp"
#include "sdlab/twin_metrics.hpp"

namespace sdlab {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

enum class Color : std::uint8_t { green, blue };

// Unordered node pair stored with first < second.
struct NodePair {
  NodeId first = 0;
  NodeId second = 0;

  static NodePair of(NodeId a, NodeId b) { return a < b ? NodePair{a, b} : NodePair{b, a}; }
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

struct TreeNode {
  NodeId parent = kNoNode;
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  Vertex vertex = kNoVertex; // set on leaves only

  bool operator==(const TreeNode&) const = default;
};

// Full binary tree whose leaves are the vertices of a graph, plus the green
// (anti-edge) and blue (edge) transversal pairs. The struct may hold an
// invalid model; validate() reports what is wrong with it.
struct SignedTreeModel {
  std::vector<TreeNode> nodes;
  std::set<NodePair> green;
  std::set<NodePair> blue;
  // Set on models laid out on the complete binary tree by shallowise().
  bool complete = false;

  std::size_t node_count() const noexcept { return nodes.size(); }
  std::size_t leaf_count() const noexcept;
  std::size_t signed_pair_count() const noexcept { return green.size() + blue.size(); }
  bool is_leaf(NodeId x) const { return nodes[x].left == kNoNode && nodes[x].right == kNoNode; }
  std::optional<Color> color_of(NodePair p) const;

  friend bool operator==(const SignedTreeModel&, const SignedTreeModel&) = default;
};

// Ancestry, depth and leaf-order queries on a structurally sound tree
// (single root, consistent child links, acyclic). Throws DomainError otherwise.
class TreeIndex {
public:
  explicit TreeIndex(const SignedTreeModel& m);

  NodeId root() const noexcept { return root_; }
  // Number of nodes on the longest root-to-leaf path.
  std::size_t height() const noexcept { return height_; }
  // Root has depth 1.
  std::size_t depth(NodeId x) const { return depth_[x]; }
  bool is_ancestor_or_self(NodeId a, NodeId b) const { return tin_[a] <= tin_[b] && tout_[b] <= tout_[a]; }
  bool is_strict_ancestor(NodeId a, NodeId b) const { return a != b && is_ancestor_or_self(a, b); }
  bool comparable(NodeId a, NodeId b) const { return is_ancestor_or_self(a, b) || is_ancestor_or_self(b, a); }
  NodeId lca(NodeId a, NodeId b) const;
  NodeId parent(NodeId x) const { return parent_[x]; }
  std::size_t entry_time(NodeId x) const { return tin_[x]; }
  std::size_t exit_time(NodeId x) const { return tout_[x]; }

  NodeId leaf_of(Vertex v) const { return leaf_of_vertex_[v]; }
  // Leaves in left-to-right order.
  std::span<const NodeId> leaves() const { return leaves_; }
  // 1-based position range [first, last] of the leaves below x.
  std::pair<std::size_t, std::size_t> leaf_interval(NodeId x) const { return interval_[x]; }
  // Nodes from the root down to x, inclusive.
  std::vector<NodeId> root_path(NodeId x) const;

  // uv is weakly above u'v' in the tree order on pairs.
  bool pair_precedes_or_equal(NodePair upper, NodePair lower) const;

private:
  NodeId root_ = kNoNode;
  std::size_t height_ = 0;
  std::vector<NodeId> parent_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> tin_;
  std::vector<std::size_t> tout_;
  std::vector<NodeId> leaf_of_vertex_;
  std::vector<NodeId> leaves_;
  std::vector<std::pair<std::size_t, std::size_t>> interval_;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const noexcept { return problems.empty(); }
};

// Fullness, leaf bijection, transversality, pairwise non-crossing and
// green/blue disjointness. Every violation is listed.
ValidationReport validate(const SignedTreeModel& m);

// Every sibling pair carries a green or blue pair.
bool is_clean(const SignedTreeModel& m);

// Degeneracy of the graph on tree nodes with edge set green U blue.
std::size_t width(const SignedTreeModel& m);

// Auxiliary graph on tree nodes whose edges are the signed pairs.
Graph signed_pair_graph(const SignedTreeModel& m);

struct Rational {
  std::size_t num = 0;
  std::size_t den = 1;
  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
};

// |green U blue| / |V(T)|.
Rational sparsity(const SignedTreeModel& m);

struct ResolvedEdge {
  NodePair pair;
  Color color = Color::green;
};

// Deepest signed pair weakly above the leaf pair of vertices u and v.
// Throws DomainError when no signed pair lies above them (model not clean).
ResolvedEdge resolve(const SignedTreeModel& m, Vertex u, Vertex v);

// Graph defined by the model: u ~ v iff some blue pair lies weakly above uv
// with no green pair strictly between it and uv. Valid on non-clean models.
Graph realize(const SignedTreeModel& m);

// Adds a green pair between every unlinked pair of siblings.
SignedTreeModel make_clean(const SignedTreeModel& m);

// Clean model of width <= w.d + 1 built by merging each eliminated vertex
// into its twin partner. Leaves are nodes 0..n-1 (leaf v is vertex v);
// internal nodes n..2n-2 are numbered in merge order, the partner's subtree
// being the left child. Throws DomainError on an invalid witness.
SignedTreeModel stm_from_witness(const Graph& g, const SddWitness& w);

// Closed interval of positions in a vertex order, 0-based.
struct PositionInterval {
  std::size_t first = 0;
  std::size_t last = 0;
  friend bool operator==(const PositionInterval&, const PositionInterval&) = default;
};

// Maximal runs of consecutive positions of `order` occupied by N(v).
std::vector<PositionInterval> neighborhood_intervals(const Graph& g, std::span<const Vertex> order, Vertex v);

// Model of width <= 2d for a bipartite graph whose parts are order[0, x_count)
// and order[x_count, n) (X before Y), where every x in X has N(x) equal to
// the union of intervals[x] (at most d of them) along the order. The tree is
// a root over two left binary combs. Per interval [j, k] of Y-positions, x
// gets a blue pair to the comb node covering Y-positions up to k and a green
// pair to the comb node covering those before j (none when j is the first).
// Leaf v is node v. Throws DomainError on a non-bipartite split or interval
// lists that do not match G.
SignedTreeModel stm_from_welzl(const Graph& g, std::span<const Vertex> order, std::size_t x_count,
                               const std::vector<std::vector<PositionInterval>>& intervals);

// Renumbers nodes in breadth-first order from the root, left child first,
// so that every left child has a smaller id than its sibling.
SignedTreeModel canonicalize(const SignedTreeModel& m);

// STM text format:
//   p stm <nodes> <leaves> [complete 1]
//   t <node> <parent|-1> <leaf-vertex|-1>     (one per node, sorted by id)
//   g <a> <b>                                 (green pairs, a < b, sorted)
//   b <a> <b>                                 (blue pairs, a < b, sorted)
// save_stm writes the canonical numbering. On load, the child with the
// smaller id is the left child.
std::string save_stm(const SignedTreeModel& m);
SignedTreeModel load_stm(std::string_view text);

} // namespace sdlab
