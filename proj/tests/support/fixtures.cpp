#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

#include "sdlab/rng.hpp"

namespace sdlab::fixture {

FigureModel build_named(const NamedTree& tree, const std::vector<std::pair<std::string, std::string>>& green,
                        const std::vector<std::pair<std::string, std::string>>& blue) {
  FigureModel out;
  auto id = [&](const std::string& name) {
    auto it = out.node.find(name);
    if (it == out.node.end()) {
      it = out.node.emplace(name, static_cast<NodeId>(out.model.nodes.size())).first;
      out.model.nodes.emplace_back();
    }
    return it->second;
  };
  // Leaves first so that leaf ids follow vertex ids.
  std::vector<std::pair<Vertex, std::string>> leaves;
  for (const auto& [name, v] : tree.vertex_of) {
    leaves.emplace_back(v, name);
  }
  std::sort(leaves.begin(), leaves.end());
  for (const auto& [v, name] : leaves) {
    out.model.nodes[id(name)].vertex = v;
  }
  id(tree.root);
  for (const auto& [name, children] : tree.internal) {
    const NodeId x = id(name);
    const NodeId l = id(children.first);
    const NodeId r = id(children.second);
    out.model.nodes[x].left = l;
    out.model.nodes[x].right = r;
    out.model.nodes[l].parent = x;
    out.model.nodes[r].parent = x;
  }
  for (const auto& [a, b] : green) {
    out.model.green.insert(NodePair::of(out.node.at(a), out.node.at(b)));
  }
  for (const auto& [a, b] : blue) {
    out.model.blue.insert(NodePair::of(out.node.at(a), out.node.at(b)));
  }
  return out;
}

FigureModel figure_model() {
  NamedTree t;
  t.root = "root";
  t.internal = {
      {"root", {"a", "h"}}, {"a", {"b", "e"}},   {"b", {"c", "d"}},   {"c", {"c1", "c2"}},
      {"e", {"f", "g"}},    {"f", {"f1", "f2"}}, {"g", {"g1", "g2"}}, {"h", {"i", "l"}},
      {"i", {"j", "k"}},    {"j", {"j1", "j2"}}, {"l", {"m", "n"}},   {"m", {"m1", "m2"}},
      {"n", {"n1", "n2"}},
  };
  t.vertex_of = {{"c1", 0}, {"c2", 1}, {"d", 2},   {"f1", 3},  {"f2", 4},  {"g1", 5},  {"g2", 6},
                 {"j1", 7}, {"j2", 8}, {"k", 9},   {"m1", 10}, {"m2", 11}, {"n1", 12}, {"n2", 13}};
  return build_named(t, {{"a", "n"}, {"c2", "k"}, {"i", "e"}, {"c2", "d"}},
                     {{"a", "h"}, {"e", "k"}, {"f", "j"}, {"g1", "g2"}, {"m1", "m2"}, {"m1", "n"},
                      {"f1", "g"}, {"n", "i"}, {"c", "d"}});
}

SignedTreeModel random_model(std::size_t leaves, std::size_t attempts, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SignedTreeModel m;
  const std::size_t total = 2 * leaves - 1;
  m.nodes.resize(total);
  // Random full binary tree: repeatedly split a random current leaf.
  std::vector<NodeId> open{0};
  NodeId next = 1;
  while (next + 1 < total + 1 && open.size() < leaves) {
    const auto pick = static_cast<std::size_t>(rng.next_below(open.size()));
    const NodeId x = open[pick];
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
    m.nodes[x].left = next;
    m.nodes[x].right = next + 1;
    m.nodes[next].parent = x;
    m.nodes[next + 1].parent = x;
    open.push_back(next);
    open.push_back(next + 1);
    next += 2;
  }
  for (std::size_t k = 0; k < open.size(); ++k) {
    m.nodes[open[k]].vertex = static_cast<Vertex>(k);
  }
  for (std::size_t k = 0; k < attempts; ++k) {
    const auto a = static_cast<NodeId>(rng.next_below(total));
    const auto b = static_cast<NodeId>(rng.next_below(total));
    if (a == b) {
      continue;
    }
    const auto p = NodePair::of(a, b);
    if (m.green.count(p) != 0 || m.blue.count(p) != 0) {
      continue;
    }
    auto trial = m;
    (rng.next_bool() ? trial.blue : trial.green).insert(p);
    if (validate(trial).ok()) {
      m = std::move(trial);
    }
  }
  return m;
}

SddWitness greedy_witness(const Graph& g) {
  for (std::size_t d = 0;; ++d) {
    if (auto w = sdd_greedy(g, d)) {
      return *w;
    }
  }
}

Graph random_graph(std::size_t lo, std::size_t hi, std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0x5DEECE66DULL);
  const std::size_t n = lo + static_cast<std::size_t>(rng.next_below(hi - lo + 1));
  const double p = 0.15 + 0.7 * rng.next_double();
  return gen_gnp(n, p, rng.next());
}

namespace {

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;
  auto greedy = [&](std::string name, Graph g) {
    SddWitness w = greedy_witness(g);
    out.push_back({std::move(name), std::move(g), std::move(w), false});
  };
  auto exact = [&](std::string name, Graph g) {
    SddWitness w = sdd_exact(g).witness;
    out.push_back({std::move(name), std::move(g), std::move(w), true});
  };
  for (std::size_t n : {8, 16, 32, 48, 64}) {
    for (double p : {0.1, 0.3, 0.5, 0.8}) {
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        greedy("gnp-" + std::to_string(n) + "-" + std::to_string(p) + "-" + std::to_string(seed),
               gen_gnp(n, p, seed));
      }
    }
  }
  for (std::size_t n : {16, 32, 64}) {
    for (std::size_t d : {1, 2, 4}) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        greedy("twin-" + std::to_string(n) + "-" + std::to_string(d) + "-" + std::to_string(seed),
               gen_twin_growth(n, d, seed).graph);
      }
    }
  }
  for (std::size_t n : {10, 30, 64}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      greedy("tree-" + std::to_string(n) + "-" + std::to_string(seed), gen_random_tree(n, seed));
    }
  }
  for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 5}, {3, 3}, {4, 4}, {5, 6}, {8, 8}}) {
    greedy("rook-" + std::to_string(a) + "x" + std::to_string(b), gen_rook(a, b));
  }
  for (std::size_t n = 3; n <= 11; ++n) {
    greedy("shift-" + std::to_string(n), gen_shift(n));
  }
  for (std::size_t n : {2, 17, 40, 64}) {
    greedy("path-" + std::to_string(n), gen_path(n));
    greedy("complete-" + std::to_string(n), gen_complete(n));
    if (n >= 3) {
      greedy("cycle-" + std::to_string(n), gen_cycle(n));
    }
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    greedy("embed-" + std::to_string(seed), embed_sdd1(gen_gnp(8, 0.5, seed)).graph);
  }
  for (std::size_t n = 2; n <= 16; n += 2) {
    for (double p : {0.3, 0.5, 0.7}) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        exact("exact-gnp-" + std::to_string(n) + "-" + std::to_string(p) + "-" + std::to_string(seed),
              gen_gnp(n, p, 100 + seed));
      }
    }
  }
  exact("exact-rook-3x3", gen_rook(3, 3));
  exact("exact-rook-4x4", gen_rook(4, 4));
  exact("exact-shift-6", gen_shift(6));
  exact("exact-cycle-16", gen_cycle(16));
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

}  // namespace sdlab::fixture
