#include "sdlab/balance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "sdlab/error.hpp"

namespace sdlab {

CompleteTree::CompleteTree(std::size_t leaves) : leaves_(leaves) {
  if (leaves == 0) {
    throw DomainError("complete tree needs at least one leaf");
  }
  const std::size_t nodes = node_count();
  height_ = static_cast<std::size_t>(std::bit_width(nodes));
  interval_.assign(nodes, {});
  leaf_at_.reserve(leaves);
  std::vector<std::pair<NodeId, bool>> stack{{0, false}};
  while (!stack.empty()) {
    auto [x, done] = stack.back();
    stack.pop_back();
    if (is_leaf(x)) {
      leaf_at_.push_back(x);
      interval_[x] = {leaf_at_.size(), leaf_at_.size()};
    } else if (done) {
      interval_[x] = {interval_[left(x)].first, interval_[right(x)].last};
    } else {
      stack.push_back({x, true});
      stack.push_back({right(x), false});
      stack.push_back({left(x), false});
    }
  }
}

std::size_t CompleteTree::depth(NodeId x) const noexcept {
  return static_cast<std::size_t>(std::bit_width(std::size_t{x} + 1));
}

namespace {

void check_range(const CompleteTree& r, std::size_t i, std::size_t j) {
  if (i == 0 || i > j || j > r.leaf_count()) {
    throw DomainError("interval [" + std::to_string(i) + ", " + std::to_string(j) + "] is not within 1.." +
                      std::to_string(r.leaf_count()));
  }
}

void collect_cover(const CompleteTree& r, NodeId x, std::size_t i, std::size_t j, std::vector<NodeId>& out) {
  const auto iv = r.interval(x);
  if (iv.last < i || iv.first > j) {
    return;
  }
  if (i <= iv.first && iv.last <= j) {
    out.push_back(x);
    return;
  }
  collect_cover(r, r.left(x), i, j, out);
  collect_cover(r, r.right(x), i, j, out);
}

bool is_left_child(NodeId x) { return x % 2 == 1; }

} // namespace

std::vector<NodeId> interval_cover(const CompleteTree& r, std::size_t i, std::size_t j) {
  check_range(r, i, j);
  std::vector<NodeId> out;
  collect_cover(r, CompleteTree::root(), i, j, out);
  return out;
}

std::size_t interval_cover_size(const CompleteTree& r, std::size_t i, std::size_t j) {
  check_range(r, i, j);
  NodeId a = r.leaf(i);
  NodeId b = r.leaf(j);
  if (a == b) {
    return 1;
  }
  std::size_t ha = a + 1;
  std::size_t hb = b + 1;
  while (ha != hb) {
    (ha > hb ? ha : hb) /= 2;
  }
  const auto top = static_cast<NodeId>(ha - 1);
  if (r.interval(top) == LeafInterval{i, j}) {
    return 1;
  }

  // Suffix [i, end of left subtree]: climb from leaf i while it is a left
  // child, then count the right siblings of left children on the way up.
  const NodeId lsub = r.left(top);
  NodeId x = a;
  while (x != lsub && is_left_child(x)) {
    x = r.parent(x);
  }
  std::size_t count = 1;
  for (NodeId y = x; y != lsub; y = r.parent(y)) {
    count += is_left_child(y) ? 1 : 0;
  }

  const NodeId rsub = r.right(top);
  x = b;
  while (x != rsub && !is_left_child(x)) {
    x = r.parent(x);
  }
  ++count;
  for (NodeId y = x; y != rsub; y = r.parent(y)) {
    count += is_left_child(y) ? 0 : 1;
  }
  return count;
}

std::vector<LeafInterval> subtree_intervals(const SignedTreeModel& m) {
  TreeIndex index(m);
  std::vector<LeafInterval> out(m.nodes.size());
  for (NodeId x = 0; x < m.nodes.size(); ++x) {
    auto [lo, hi] = index.leaf_interval(x);
    out[x] = {lo, hi};
  }
  return out;
}

std::size_t width_bound(std::size_t m) {
  if (m == 0) {
    return 0;
  }
  // Smallest s with s * s >= 2m.
  auto s = static_cast<std::size_t>(std::sqrt(static_cast<double>(2 * m)));
  while (s * s < 2 * m) {
    ++s;
  }
  while (s > 0 && (s - 1) * (s - 1) >= 2 * m) {
    --s;
  }
  return s - 1;
}

SignedTreeModel shallowise(const SignedTreeModel& m, std::size_t d) {
  auto report = validate(m);
  if (!report.ok()) {
    throw DomainError("cannot shallowise an invalid model: " + report.problems.front());
  }
  if (!is_clean(m)) {
    throw DomainError("cannot shallowise a model that is not clean");
  }
  if (m.signed_pair_count() > d * m.nodes.size()) {
    throw DomainError("model has " + std::to_string(m.signed_pair_count()) + " signed pairs on " +
                      std::to_string(m.nodes.size()) + " nodes, so it is not " + std::to_string(d) + "-sparse");
  }
  TreeIndex index(m);
  const std::size_t n = index.leaves().size();
  CompleteTree r(n);

  std::vector<std::vector<NodeId>> cover(m.nodes.size());
  auto cover_of = [&](NodeId x) -> const std::vector<NodeId>& {
    if (cover[x].empty()) {
      auto [lo, hi] = index.leaf_interval(x);
      cover[x] = interval_cover(r, lo, hi);
    }
    return cover[x];
  };

  struct Origin {
    NodePair pair;
    Color color;
  };
  std::unordered_map<std::uint64_t, Origin> chosen;
  auto emit = [&](const NodePair& origin, Color color) {
    const auto& cx = cover_of(origin.first);
    const auto& cy = cover_of(origin.second);
    for (NodeId a : cx) {
      for (NodeId b : cy) {
        const NodePair ab = NodePair::of(a, b);
        const std::uint64_t key = (std::uint64_t{ab.first} << 32) | ab.second;
        auto [it, fresh] = chosen.try_emplace(key, Origin{origin, color});
        if (fresh || it->second.pair == origin) {
          continue;
        }
        if (index.pair_precedes_or_equal(it->second.pair, origin)) {
          it->second = Origin{origin, color};
        } else if (!index.pair_precedes_or_equal(origin, it->second.pair)) {
          throw std::logic_error("shallowise: incomparable origins for one new pair");
        }
      }
    }
  };
  for (const auto& p : m.green) {
    emit(p, Color::green);
  }
  for (const auto& p : m.blue) {
    emit(p, Color::blue);
  }

  SignedTreeModel out;
  out.complete = true;
  out.nodes.resize(r.node_count());
  for (NodeId x = 0; x < r.node_count(); ++x) {
    auto& t = out.nodes[x];
    t.parent = r.parent(x);
    if (!r.is_leaf(x)) {
      t.left = r.left(x);
      t.right = r.right(x);
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    out.nodes[r.leaf(k)].vertex = m.nodes[index.leaves()[k - 1]].vertex;
  }
  for (const auto& [key, origin] : chosen) {
    const NodePair ab{static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffU)};
    (origin.color == Color::blue ? out.blue : out.green).insert(ab);
  }
  return out;
}

PairOrientation orient_low_outdegree(std::size_t node_count, std::span<const NodePair> pairs) {
  GraphBuilder b(node_count);
  for (const auto& p : pairs) {
    b.add_edge(p.first, p.second);
  }
  const auto cert = degeneracy(std::move(b).build());
  std::vector<std::size_t> rank(node_count);
  for (std::size_t i = 0; i < cert.order.size(); ++i) {
    rank[cert.order[i]] = i;
  }
  PairOrientation out;
  out.owner.reserve(pairs.size());
  std::vector<std::size_t> owned(node_count, 0);
  for (const auto& p : pairs) {
    const NodeId o = rank[p.first] < rank[p.second] ? p.first : p.second;
    out.owner.push_back(o);
    out.max_owned = std::max(out.max_owned, ++owned[o]);
  }
  return out;
}

} // namespace sdlab
