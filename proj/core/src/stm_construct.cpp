#include <algorithm>

#include "sdlab/bit_matrix.hpp"
#include "sdlab/error.hpp"
#include "sdlab/signed_tree_model.hpp"

namespace sdlab {

SignedTreeModel stm_from_witness(const Graph& g, const SddWitness& w) {
  if (auto why = witness_violation(g, w)) {
    throw DomainError("invalid witness: " + *why);
  }
  const std::size_t n = g.order();
  SignedTreeModel m;
  m.nodes.reserve(2 * n - 1);
  std::vector<NodeId> root_of(n);
  for (Vertex v = 0; v < n; ++v) {
    m.nodes.push_back(TreeNode{kNoNode, kNoNode, kNoNode, v});
    root_of[v] = v;
  }
  BitMatrix adj(g);
  VertexMask alive(n, true);
  for (const auto& [v, u] : w.steps) {
    const NodeId rv = root_of[v];
    const NodeId ru = root_of[u];
    (adj.test(u, v) ? m.blue : m.green).insert(NodePair::of(rv, ru));
    for (Vertex x = 0; x < n; ++x) {
      if (x == u || x == v || !alive.test(x)) {
        continue;
      }
      const bool to_v = adj.test(v, x);
      const bool to_u = adj.test(u, x);
      if (to_v && !to_u) {
        m.blue.insert(NodePair::of(rv, root_of[x]));
      } else if (to_u && !to_v) {
        m.green.insert(NodePair::of(rv, root_of[x]));
      }
    }
    const auto parent = static_cast<NodeId>(m.nodes.size());
    m.nodes.push_back(TreeNode{kNoNode, ru, rv, kNoVertex});
    m.nodes[ru].parent = parent;
    m.nodes[rv].parent = parent;
    root_of[u] = parent;
    alive.reset(v);
  }
  return m;
}

std::vector<PositionInterval> neighborhood_intervals(const Graph& g, std::span<const Vertex> order, Vertex v) {
  std::vector<PositionInterval> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == v || !g.adjacent(v, order[i])) {
      continue;
    }
    if (!out.empty() && out.back().last + 1 == i) {
      out.back().last = i;
    } else {
      out.push_back({i, i});
    }
  }
  return out;
}

namespace {

std::vector<PositionInterval> merge_intervals(std::vector<PositionInterval> list) {
  std::sort(list.begin(), list.end(),
            [](const PositionInterval& a, const PositionInterval& b) { return a.first < b.first; });
  std::vector<PositionInterval> out;
  for (const auto& iv : list) {
    if (!out.empty() && iv.first <= out.back().last + 1) {
      out.back().last = std::max(out.back().last, iv.last);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

// Left comb over `leaves`; cover[k] is the node whose leaves are leaves[0..k].
NodeId build_comb(SignedTreeModel& m, std::span<const NodeId> leaves, std::vector<NodeId>& cover) {
  cover.assign(leaves.size(), kNoNode);
  NodeId cur = leaves.front();
  cover[0] = cur;
  for (std::size_t k = 1; k < leaves.size(); ++k) {
    const auto p = static_cast<NodeId>(m.nodes.size());
    m.nodes.push_back(TreeNode{kNoNode, cur, leaves[k], kNoVertex});
    m.nodes[cur].parent = p;
    m.nodes[leaves[k]].parent = p;
    cover[k] = p;
    cur = p;
  }
  return cur;
}

} // namespace

SignedTreeModel stm_from_welzl(const Graph& g, std::span<const Vertex> order, std::size_t x_count,
                               const std::vector<std::vector<PositionInterval>>& intervals) {
  const std::size_t n = g.order();
  if (order.size() != n) {
    throw DomainError("vertex order must list every vertex exactly once");
  }
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) {
      throw DomainError("vertex order must list every vertex exactly once");
    }
    pos[order[i]] = i;
  }
  if (x_count == 0 || x_count >= n) {
    throw DomainError("both sides of the bipartition must be non-empty");
  }
  if (intervals.size() != n) {
    throw DomainError("interval lists must be indexed by vertex");
  }
  for (const auto& [a, b] : g.edges()) {
    if ((pos[a] < x_count) == (pos[b] < x_count)) {
      throw DomainError("edge " + std::to_string(a) + "-" + std::to_string(b) + " lies inside one side");
    }
  }

  std::vector<std::vector<PositionInterval>> merged(n);
  for (std::size_t i = 0; i < x_count; ++i) {
    const Vertex x = order[i];
    for (const auto& iv : intervals[x]) {
      if (iv.first > iv.last || iv.first < x_count || iv.last >= n) {
        throw DomainError("interval of vertex " + std::to_string(x) + " leaves the Y side");
      }
    }
    merged[x] = merge_intervals(intervals[x]);
    if (merged[x] != neighborhood_intervals(g, order, x)) {
      throw DomainError("intervals of vertex " + std::to_string(x) + " do not match its neighborhood");
    }
  }
  for (std::size_t i = x_count; i < n; ++i) {
    if (!intervals[order[i]].empty()) {
      throw DomainError("vertices of Y carry no intervals");
    }
  }

  SignedTreeModel m;
  m.nodes.reserve(2 * n - 1);
  for (Vertex v = 0; v < n; ++v) {
    m.nodes.push_back(TreeNode{kNoNode, kNoNode, kNoNode, v});
  }
  std::vector<NodeId> x_leaves(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(x_count));
  std::vector<NodeId> y_leaves(order.begin() + static_cast<std::ptrdiff_t>(x_count), order.end());
  std::vector<NodeId> x_cover;
  std::vector<NodeId> y_cover;
  const NodeId x_top = build_comb(m, x_leaves, x_cover);
  const NodeId y_top = build_comb(m, y_leaves, y_cover);
  const auto root = static_cast<NodeId>(m.nodes.size());
  m.nodes.push_back(TreeNode{kNoNode, x_top, y_top, kNoVertex});
  m.nodes[x_top].parent = root;
  m.nodes[y_top].parent = root;

  for (std::size_t i = 0; i < x_count; ++i) {
    const Vertex x = order[i];
    for (const auto& iv : merged[x]) {
      const std::size_t j = iv.first - x_count;
      const std::size_t k = iv.last - x_count;
      m.blue.insert(NodePair::of(x, y_cover[k]));
      if (j > 0) {
        m.green.insert(NodePair::of(x, y_cover[j - 1]));
      }
    }
  }
  return m;
}

} // namespace sdlab
