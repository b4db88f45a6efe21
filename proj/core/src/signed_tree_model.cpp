#include "sdlab/signed_tree_model.hpp"

#include <algorithm>
#include <numeric>

#include "sdlab/error.hpp"

namespace sdlab {

std::size_t SignedTreeModel::leaf_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const TreeNode& t) {
    return t.left == kNoNode && t.right == kNoNode;
  }));
}

std::optional<Color> SignedTreeModel::color_of(NodePair p) const {
  if (blue.contains(p)) {
    return Color::blue;
  }
  if (green.contains(p)) {
    return Color::green;
  }
  return std::nullopt;
}

TreeIndex::TreeIndex(const SignedTreeModel& m) {
  const std::size_t n = m.nodes.size();
  if (n == 0) {
    throw DomainError("tree has no nodes");
  }
  parent_.resize(n);
  for (NodeId x = 0; x < n; ++x) {
    const auto& t = m.nodes[x];
    parent_[x] = t.parent;
    if (t.parent == kNoNode) {
      if (root_ != kNoNode) {
        throw DomainError("tree has more than one root");
      }
      root_ = x;
    } else if (t.parent >= n) {
      throw DomainError("node " + std::to_string(x) + " has an out-of-range parent");
    }
    for (NodeId c : {t.left, t.right}) {
      if (c != kNoNode && (c >= n || m.nodes[c].parent != x)) {
        throw DomainError("child link of node " + std::to_string(x) + " is inconsistent");
      }
    }
    if (t.parent != kNoNode) {
      const auto& p = m.nodes[t.parent];
      if (p.left != x && p.right != x) {
        throw DomainError("node " + std::to_string(x) + " is not a child of its parent");
      }
    }
  }
  if (root_ == kNoNode) {
    throw DomainError("tree has no root");
  }

  depth_.assign(n, 0);
  tin_.assign(n, 0);
  tout_.assign(n, 0);
  interval_.assign(n, {0, 0});
  std::size_t clock = 0;
  std::size_t visited = 0;
  // Iterative DFS: left subtree first; tout is the last tin inside the subtree.
  std::vector<std::pair<NodeId, bool>> stack{{root_, false}};
  depth_[root_] = 1;
  while (!stack.empty()) {
    auto [x, done] = stack.back();
    stack.pop_back();
    const auto& t = m.nodes[x];
    if (done) {
      tout_[x] = clock - 1;
      if (t.left == kNoNode && t.right == kNoNode) {
        interval_[x] = {leaves_.size(), leaves_.size()};
      } else {
        std::size_t lo = std::numeric_limits<std::size_t>::max();
        std::size_t hi = 0;
        for (NodeId c : {t.left, t.right}) {
          if (c != kNoNode) {
            lo = std::min(lo, interval_[c].first);
            hi = std::max(hi, interval_[c].second);
          }
        }
        interval_[x] = {lo, hi};
      }
      continue;
    }
    if (++visited > n) {
      throw DomainError("tree contains a cycle");
    }
    tin_[x] = clock++;
    height_ = std::max(height_, depth_[x]);
    if (t.left == kNoNode && t.right == kNoNode) {
      leaves_.push_back(x);
    }
    stack.push_back({x, true});
    for (NodeId c : {t.right, t.left}) {
      if (c != kNoNode) {
        depth_[c] = depth_[x] + 1;
        stack.push_back({c, false});
      }
    }
  }
  if (visited != n) {
    throw DomainError("tree has nodes unreachable from the root");
  }

  leaf_of_vertex_.assign(leaves_.size(), kNoNode);
  for (NodeId leaf : leaves_) {
    Vertex v = m.nodes[leaf].vertex;
    if (v == kNoVertex || v >= leaves_.size() || leaf_of_vertex_[v] != kNoNode) {
      throw DomainError("leaf vertices are not a bijection onto 0.." + std::to_string(leaves_.size() - 1));
    }
    leaf_of_vertex_[v] = leaf;
  }
}

NodeId TreeIndex::lca(NodeId a, NodeId b) const {
  while (depth_[a] > depth_[b]) {
    a = parent_[a];
  }
  while (depth_[b] > depth_[a]) {
    b = parent_[b];
  }
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

std::vector<NodeId> TreeIndex::root_path(NodeId x) const {
  std::vector<NodeId> path;
  for (NodeId y = x; y != kNoNode; y = parent_[y]) {
    path.push_back(y);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool TreeIndex::pair_precedes_or_equal(NodePair upper, NodePair lower) const {
  auto le = [this](NodeId a, NodeId b) { return is_ancestor_or_self(a, b); };
  return (le(upper.first, lower.first) && le(upper.second, lower.second)) ||
         (le(upper.first, lower.second) && le(upper.second, lower.first));
}

namespace {

std::string pair_text(NodePair p) {
  return "{" + std::to_string(p.first) + "," + std::to_string(p.second) + "}";
}

struct Incidence {
  NodeId other;
  std::size_t tin;
};

} // namespace

ValidationReport validate(const SignedTreeModel& m) {
  ValidationReport report;
  auto& problems = report.problems;
  const std::size_t n = m.nodes.size();
  if (n == 0) {
    problems.push_back("tree has no nodes");
    return report;
  }
  for (NodeId x = 0; x < n; ++x) {
    const auto& t = m.nodes[x];
    const bool has_left = t.left != kNoNode;
    const bool has_right = t.right != kNoNode;
    if (has_left != has_right) {
      problems.push_back("node " + std::to_string(x) + " has exactly one child");
    }
    if (has_left && t.left == t.right) {
      problems.push_back("node " + std::to_string(x) + " lists the same node as both children");
    }
    if (has_left && t.vertex != kNoVertex) {
      problems.push_back("internal node " + std::to_string(x) + " carries a vertex");
    }
  }

  std::optional<TreeIndex> index;
  try {
    index.emplace(m);
  } catch (const DomainError& e) {
    problems.emplace_back(e.what());
  }

  for (const auto* set : {&m.green, &m.blue}) {
    for (const auto& p : *set) {
      if (p.first >= p.second || p.second >= n) {
        problems.push_back("signed pair " + pair_text(p) + " is malformed or out of range");
      } else if (index && index->comparable(p.first, p.second)) {
        problems.push_back("signed pair " + pair_text(p) + " is not transversal");
      }
    }
  }
  for (const auto& p : m.green) {
    if (m.blue.contains(p)) {
      problems.push_back("pair " + pair_text(p) + " is both green and blue");
    }
  }
  if (!index || !problems.empty()) {
    return report;
  }

  // Two pairs cross when one endpoint of one pair is a strict ancestor of an
  // endpoint s of the other, and its partner is a strict descendant of the
  // remaining endpoint t. For every strict ancestor x of s we look for a
  // partner of x inside the subtree of t by binary search on entry times.
  std::vector<std::vector<Incidence>> inc(n);
  for (const auto* set : {&m.green, &m.blue}) {
    for (const auto& p : *set) {
      inc[p.first].push_back({p.second, index->entry_time(p.second)});
      inc[p.second].push_back({p.first, index->entry_time(p.first)});
    }
  }
  for (auto& list : inc) {
    std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) { return a.tin < b.tin; });
  }
  std::set<std::pair<NodePair, NodePair>> reported;
  for (const auto* set : {&m.green, &m.blue}) {
    for (const auto& p : *set) {
      for (auto [s, t] : {std::pair{p.first, p.second}, std::pair{p.second, p.first}}) {
        const std::size_t lo = index->entry_time(t) + 1;
        const std::size_t hi = index->exit_time(t);
        if (lo > hi) {
          continue;
        }
        for (NodeId x = index->parent(s); x != kNoNode; x = index->parent(x)) {
          const auto& list = inc[x];
          auto it = std::lower_bound(list.begin(), list.end(), lo,
                                     [](const Incidence& e, std::size_t key) { return e.tin < key; });
          if (it != list.end() && it->tin <= hi) {
            NodePair q = NodePair::of(x, it->other);
            auto key = std::minmax(p, q);
            if (reported.insert({key.first, key.second}).second) {
              problems.push_back("signed pairs " + pair_text(p) + " and " + pair_text(q) + " cross");
            }
          }
        }
      }
    }
  }
  return report;
}

bool is_clean(const SignedTreeModel& m) {
  for (const auto& t : m.nodes) {
    if (t.left != kNoNode && t.right != kNoNode && !m.color_of(NodePair::of(t.left, t.right))) {
      return false;
    }
  }
  return true;
}

Graph signed_pair_graph(const SignedTreeModel& m) {
  GraphBuilder b(m.nodes.size());
  for (const auto* set : {&m.green, &m.blue}) {
    for (const auto& p : *set) {
      b.add_edge(p.first, p.second);
    }
  }
  return std::move(b).build();
}

std::size_t width(const SignedTreeModel& m) { return degeneracy(signed_pair_graph(m)).d; }

Rational sparsity(const SignedTreeModel& m) {
  std::size_t num = m.signed_pair_count();
  std::size_t den = m.nodes.size();
  std::size_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

namespace {

// Signed pairs with one endpoint on each of the two root paths strictly
// below the lowest common ancestor of the leaves.
class CandidateFinder {
public:
  CandidateFinder(const SignedTreeModel& m, const TreeIndex& index) : index_(index), stamp_(m.nodes.size(), 0) {
    inc_.resize(m.nodes.size());
    for (const auto& p : m.green) {
      inc_[p.first].push_back({p.second, Color::green});
      inc_[p.second].push_back({p.first, Color::green});
    }
    for (const auto& p : m.blue) {
      inc_[p.first].push_back({p.second, Color::blue});
      inc_[p.second].push_back({p.first, Color::blue});
    }
  }

  std::vector<ResolvedEdge> find(NodeId a, NodeId b) {
    const NodeId w = index_.lca(a, b);
    std::size_t cost_a = 0;
    std::size_t cost_b = 0;
    for (NodeId x = a; x != w; x = index_.parent(x)) {
      cost_a += inc_[x].size();
    }
    for (NodeId x = b; x != w; x = index_.parent(x)) {
      cost_b += inc_[x].size();
    }
    if (cost_b < cost_a) {
      std::swap(a, b);
    }
    ++clock_;
    for (NodeId x = b; x != w; x = index_.parent(x)) {
      stamp_[x] = clock_;
    }
    std::vector<ResolvedEdge> out;
    for (NodeId x = a; x != w; x = index_.parent(x)) {
      for (const auto& [y, color] : inc_[x]) {
        if (stamp_[y] == clock_) {
          out.push_back({NodePair::of(x, y), color});
        }
      }
    }
    return out;
  }

private:
  const TreeIndex& index_;
  std::vector<std::vector<std::pair<NodeId, Color>>> inc_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t clock_ = 0;
};

bool strictly_below(const TreeIndex& index, NodePair upper, NodePair lower) {
  return upper != lower && index.pair_precedes_or_equal(upper, lower);
}

} // namespace

ResolvedEdge resolve(const SignedTreeModel& m, Vertex u, Vertex v) {
  TreeIndex index(m);
  if (u == v || u >= index.leaves().size() || v >= index.leaves().size()) {
    throw DomainError("resolve needs two distinct vertices of the model");
  }
  CandidateFinder finder(m, index);
  auto cands = finder.find(index.leaf_of(u), index.leaf_of(v));
  if (cands.empty()) {
    throw DomainError("no signed pair lies above vertices " + std::to_string(u) + " and " + std::to_string(v) +
                      "; the model is not clean");
  }
  const ResolvedEdge* best = &cands.front();
  for (const auto& c : cands) {
    if (strictly_below(index, best->pair, c.pair)) {
      best = &c;
    }
  }
  for (const auto& c : cands) {
    if (&c != best && !index.pair_precedes_or_equal(c.pair, best->pair)) {
      throw DomainError("signed pairs above a leaf pair are not a chain; the model has crossing pairs");
    }
  }
  return *best;
}

Graph realize(const SignedTreeModel& m) {
  TreeIndex index(m);
  const std::size_t n = index.leaves().size();
  CandidateFinder finder(m, index);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      auto cands = finder.find(index.leaf_of(u), index.leaf_of(v));
      bool adjacent = false;
      for (const auto& c : cands) {
        if (c.color != Color::blue) {
          continue;
        }
        bool shadowed = std::any_of(cands.begin(), cands.end(), [&](const ResolvedEdge& g) {
          return g.color == Color::green && strictly_below(index, c.pair, g.pair);
        });
        if (!shadowed) {
          adjacent = true;
          break;
        }
      }
      if (adjacent) {
        b.add_edge(u, v);
      }
    }
  }
  return std::move(b).build();
}

SignedTreeModel make_clean(const SignedTreeModel& m) {
  SignedTreeModel out = m;
  for (const auto& t : m.nodes) {
    if (t.left != kNoNode && t.right != kNoNode) {
      NodePair p = NodePair::of(t.left, t.right);
      if (!m.color_of(p)) {
        out.green.insert(p);
      }
    }
  }
  return out;
}

SignedTreeModel canonicalize(const SignedTreeModel& m) {
  TreeIndex index(m);
  const std::size_t n = m.nodes.size();
  std::vector<NodeId> order{index.root()};
  order.reserve(n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& t = m.nodes[order[i]];
    for (NodeId c : {t.left, t.right}) {
      if (c != kNoNode) {
        order.push_back(c);
      }
    }
  }
  std::vector<NodeId> rename(n);
  for (std::size_t i = 0; i < n; ++i) {
    rename[order[i]] = static_cast<NodeId>(i);
  }
  auto map = [&](NodeId x) { return x == kNoNode ? kNoNode : rename[x]; };
  SignedTreeModel out;
  out.complete = m.complete;
  out.nodes.resize(n);
  for (NodeId x = 0; x < n; ++x) {
    const auto& t = m.nodes[x];
    out.nodes[rename[x]] = TreeNode{map(t.parent), map(t.left), map(t.right), t.vertex};
  }
  for (const auto& p : m.green) {
    out.green.insert(NodePair::of(rename[p.first], rename[p.second]));
  }
  for (const auto& p : m.blue) {
    out.blue.insert(NodePair::of(rename[p.first], rename[p.second]));
  }
  return out;
}

} // namespace sdlab
