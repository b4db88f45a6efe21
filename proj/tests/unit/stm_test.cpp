#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sdlab/error.hpp"
#include "sdlab/rng.hpp"
#include "sdlab/signed_tree_model.hpp"

namespace sdlab {
namespace {

using fixture::figure_model;

// Leaves 0..n-1 hung from a left comb; node n.. are internal.
SignedTreeModel comb(std::size_t n) {
  SignedTreeModel m;
  m.nodes.resize(2 * n - 1);
  for (Vertex v = 0; v < n; ++v) {
    m.nodes[v].vertex = v;
  }
  NodeId current = 0;
  for (std::size_t k = 1; k < n; ++k) {
    const auto parent = static_cast<NodeId>(n + k - 1);
    m.nodes[parent].left = current;
    m.nodes[parent].right = static_cast<NodeId>(k);
    m.nodes[current].parent = parent;
    m.nodes[k].parent = parent;
    current = parent;
  }
  return m;
}

TEST(Validate, FigureModelIsValid) {
  const auto f = figure_model();
  EXPECT_EQ(f.model.leaf_count(), 14U);
  EXPECT_EQ(f.model.node_count(), 27U);
  EXPECT_EQ(f.model.green.size(), 4U);
  EXPECT_EQ(f.model.blue.size(), 9U);
  EXPECT_TRUE(validate(f.model).ok());
}

TEST(Validate, RejectsNonTransversalPair) {
  auto f = figure_model();
  f.model.green.insert(NodePair::of(f.node.at("f1"), f.node.at("e")));
  const auto r = validate(f.model);
  EXPECT_FALSE(r.ok());
}

TEST(Validate, RejectsCrossingPairs) {
  // u = b is above u' = c, and v' = e is above v = f: the pairs b-f and c-e cross.
  auto f = figure_model();
  f.model.blue.insert(NodePair::of(f.node.at("b"), f.node.at("f")));
  f.model.blue.insert(NodePair::of(f.node.at("c"), f.node.at("e")));
  EXPECT_FALSE(validate(f.model).ok());
  // Either one on its own is fine.
  auto g = figure_model();
  g.model.blue.insert(NodePair::of(g.node.at("b"), g.node.at("f")));
  EXPECT_TRUE(validate(g.model).ok());
}

TEST(Validate, RejectsSharedColorAndBrokenTrees) {
  auto f = figure_model();
  f.model.green.insert(NodePair::of(f.node.at("a"), f.node.at("h")));
  EXPECT_FALSE(validate(f.model).ok());

  auto g = figure_model();
  g.model.nodes[g.node.at("c")].right = kNoNode;  // c now has one child
  EXPECT_FALSE(validate(g.model).ok());

  auto h = figure_model();
  h.model.nodes[h.node.at("k")].vertex = 0;  // vertex 0 on two leaves
  EXPECT_FALSE(validate(h.model).ok());
}

TEST(Width, Examples) {
  EXPECT_EQ(width(comb(5)), 0U);
  // Trivial model of K_3: all three leaf pairs blue.
  auto k3 = comb(3);
  k3.blue = {NodePair::of(0, 1), NodePair::of(0, 2), NodePair::of(1, 2)};
  ASSERT_TRUE(validate(k3).ok());
  EXPECT_EQ(width(k3), 2U);
  EXPECT_EQ(realize(k3), gen_complete(3));
  const Graph p4 = gen_path(4);
  const auto e = embed_sdd1(p4);
  EXPECT_LE(width(stm_from_witness(e.graph, e.witness)), 2U);
}

TEST(Width, MatchesCoreOracleOnRandomModels) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto m = fixture::random_model(12, 80, seed);
    std::set<NodePair> all = m.green;
    all.insert(m.blue.begin(), m.blue.end());
    EXPECT_EQ(width(m), oracle::pair_graph_degeneracy(m.node_count(), all));
  }
}

TEST(Sparsity, Examples) {
  EXPECT_EQ(sparsity(comb(4)).num, 0U);
  const auto s = sparsity(figure_model().model);
  EXPECT_EQ(s.num, 13U);
  EXPECT_EQ(s.den, 27U);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto m = fixture::random_model(10, 60, seed);
    EXPECT_LE(sparsity(m).value(), static_cast<double>(width(m)));
  }
}

TEST(Realize, FigureModelAdjacencies) {
  const auto f = figure_model();
  const Graph g = realize(f.model);
  EXPECT_EQ(g.order(), 14U);
  EXPECT_TRUE(g.adjacent(3, 7));   // 4 ~ 8
  EXPECT_FALSE(g.adjacent(6, 7));  // 7 !~ 8
  EXPECT_EQ(oracle::adjacency_mismatches(g, oracle::realize(f.model)), 0U);
}

TEST(Realize, TrivialModelGivesGraph) {
  const Graph g = gen_gnp(7, 0.5, 11);
  auto m = comb(7);
  for (const auto& [u, v] : g.edges()) {
    m.blue.insert(NodePair::of(u, v));
  }
  ASSERT_TRUE(validate(m).ok());
  EXPECT_EQ(realize(m), g);
}

TEST(Realize, MatchesParentWalkOracleOnRandomModels) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto m = fixture::random_model(3 + seed % 12, 100, seed);
    ASSERT_TRUE(validate(m).ok());
    EXPECT_EQ(oracle::adjacency_mismatches(realize(m), oracle::realize(m)), 0U) << "seed " << seed;
  }
}

TEST(MakeClean, FigureModelBecomesCleanFigure) {
  const auto f = figure_model();
  EXPECT_FALSE(is_clean(f.model));
  const auto clean = make_clean(f.model);
  EXPECT_TRUE(is_clean(clean));
  EXPECT_TRUE(validate(clean).ok());
  EXPECT_EQ(clean.blue, f.model.blue);
  std::set<NodePair> expected = f.model.green;
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{{"b", "e"},   {"c1", "c2"}, {"f1", "f2"},
                                                                       {"f", "g"},   {"j1", "j2"}, {"j", "k"},
                                                                       {"i", "l"},   {"m", "n"},   {"n1", "n2"}}) {
    expected.insert(NodePair::of(f.node.at(a), f.node.at(b)));
  }
  EXPECT_EQ(clean.green, expected);
  EXPECT_EQ(clean.green.size() - f.model.green.size(), 9U);
  EXPECT_EQ(realize(clean), realize(f.model));
  EXPECT_EQ(make_clean(clean), clean);
}

TEST(MakeClean, EmptyFourLeafModel) {
  SignedTreeModel m;
  m.nodes.resize(7);
  // root 0 -> 1, 2; 1 -> 3, 4; 2 -> 5, 6.
  for (NodeId x : {0U, 1U, 2U}) {
    m.nodes[x].left = 2 * x + 1;
    m.nodes[x].right = 2 * x + 2;
    m.nodes[2 * x + 1].parent = x;
    m.nodes[2 * x + 2].parent = x;
  }
  for (NodeId x = 3; x < 7; ++x) {
    m.nodes[x].vertex = x - 3;
  }
  const auto clean = make_clean(m);
  EXPECT_EQ(clean.green, (std::set<NodePair>{NodePair::of(1, 2), NodePair::of(3, 4), NodePair::of(5, 6)}));
  EXPECT_TRUE(clean.blue.empty());
  EXPECT_EQ(realize(clean).size(), 0U);
}

TEST(MakeClean, PreservesRealizationOnRandomModels) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto m = fixture::random_model(2 + seed % 14, 90, seed * 17);
    ASSERT_TRUE(validate(m).ok());
    const auto clean = make_clean(m);
    EXPECT_TRUE(validate(clean).ok());
    EXPECT_TRUE(is_clean(clean));
    EXPECT_EQ(realize(clean), realize(m)) << "seed " << seed;
    EXPECT_LE(width(clean), width(m) + 1);
  }
}

TEST(Resolve, FigureCleanModel) {
  const auto f = figure_model();
  const auto clean = make_clean(f.model);
  const auto e48 = resolve(clean, 3, 7);
  EXPECT_EQ(e48.pair, NodePair::of(f.node.at("f"), f.node.at("j")));
  EXPECT_EQ(e48.color, Color::blue);
  const auto e78 = resolve(clean, 6, 7);
  EXPECT_EQ(e78.pair, NodePair::of(f.node.at("e"), f.node.at("i")));
  EXPECT_EQ(e78.color, Color::green);
  // g1 and g2 are siblings joined by blue.
  EXPECT_EQ(resolve(clean, 5, 6).pair, NodePair::of(f.node.at("g1"), f.node.at("g2")));
  EXPECT_THROW(resolve(f.model, 12, 13), DomainError);  // n1, n2 unlinked before cleaning
}

TEST(Resolve, ColorDecidesAdjacency) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto clean = make_clean(fixture::random_model(2 + seed % 12, 80, seed * 3));
    const Graph g = realize(clean);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        EXPECT_EQ(resolve(clean, u, v).color == Color::blue, g.adjacent(u, v));
      }
    }
  }
}

TEST(FromWitness, Examples) {
  const auto single = stm_from_witness(Graph(1), SddWitness{0, {}});
  EXPECT_EQ(single.node_count(), 1U);
  EXPECT_EQ(single.signed_pair_count(), 0U);

  const Graph k3 = gen_complete(3);
  const auto m = stm_from_witness(k3, *sdd_greedy(k3, 0));
  EXPECT_TRUE(validate(m).ok());
  EXPECT_TRUE(is_clean(m));
  EXPECT_LE(width(m), 1U);
  EXPECT_EQ(realize(m), k3);
  for (const auto& p : m.blue) {
    EXPECT_EQ(m.nodes[p.first].parent, m.nodes[p.second].parent);
  }

  const auto e = embed_sdd1(gen_path(4));
  const auto pm = stm_from_witness(e.graph, e.witness);
  EXPECT_LE(width(pm), 2U);
  EXPECT_EQ(realize(pm), e.graph);

  EXPECT_THROW(stm_from_witness(k3, SddWitness{0, {{0, 1}}}), DomainError);
}

TEST(FromWitness, LayoutAndRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = fixture::random_graph(2, 24, seed);
    const auto w = fixture::greedy_witness(g);
    const auto m = stm_from_witness(g, w);
    ASSERT_EQ(m.node_count(), 2 * g.order() - 1);
    for (Vertex v = 0; v < g.order(); ++v) {
      EXPECT_EQ(m.nodes[v].vertex, v);
    }
    const auto r = validate(m);
    EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.problems.front());
    EXPECT_TRUE(is_clean(m));
    EXPECT_LE(width(m), w.d + 1);
    EXPECT_EQ(realize(m), g);
    EXPECT_EQ(oracle::adjacency_mismatches(oracle::realize(m), g), 0U);
  }
}

TEST(Welzl, NoEdges) {
  const Graph g(2);
  std::vector<Vertex> order{0, 1};
  const auto m = stm_from_welzl(g, order, 1, {{}, {}});
  EXPECT_EQ(m.signed_pair_count(), 0U);
  EXPECT_EQ(realize(m).size(), 0U);
}

TEST(Welzl, CompleteBipartite) {
  GraphBuilder b(5);
  for (Vertex x : {0U, 1U}) {
    for (Vertex y : {2U, 3U, 4U}) {
      b.add_edge(x, y);
    }
  }
  const Graph g = std::move(b).build();
  std::vector<Vertex> order{0, 1, 2, 3, 4};
  std::vector<std::vector<PositionInterval>> iv(5);
  iv[0] = iv[1] = {{2, 4}};
  const auto m = stm_from_welzl(g, order, 2, iv);
  EXPECT_TRUE(validate(m).ok());
  EXPECT_LE(width(m), 2U);
  EXPECT_EQ(realize(m), g);
}

TEST(Welzl, TwoIntervalsPerVertex) {
  // X = {0, 1}, Y = {2..5} in order; N(0) = {2, 4}, N(1) = {3, 5}.
  GraphBuilder b(6);
  b.add_edge(0, 2);
  b.add_edge(0, 4);
  b.add_edge(1, 3);
  b.add_edge(1, 5);
  const Graph g = std::move(b).build();
  std::vector<Vertex> order{0, 1, 2, 3, 4, 5};
  std::vector<std::vector<PositionInterval>> iv(6);
  for (Vertex v : {0U, 1U}) {
    iv[v] = neighborhood_intervals(g, order, v);
    EXPECT_EQ(iv[v].size(), 2U);
  }
  const auto m = stm_from_welzl(g, order, 2, iv);
  EXPECT_TRUE(validate(m).ok());
  EXPECT_LE(width(m), 4U);
  EXPECT_EQ(realize(m), g);
}

TEST(Welzl, RandomBipartiteGraphs) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t xs = 1 + rng.next_below(6);
    const std::size_t ys = 1 + rng.next_below(8);
    GraphBuilder b(xs + ys);
    for (Vertex x = 0; x < xs; ++x) {
      for (Vertex y = 0; y < ys; ++y) {
        if (rng.next_bool()) {
          b.add_edge(x, static_cast<Vertex>(xs + y));
        }
      }
    }
    const Graph g = std::move(b).build();
    // Reverse order inside Y to exercise a non-identity permutation.
    std::vector<Vertex> order;
    for (Vertex x = 0; x < xs; ++x) {
      order.push_back(x);
    }
    for (std::size_t y = ys; y-- > 0;) {
      order.push_back(static_cast<Vertex>(xs + y));
    }
    std::vector<std::vector<PositionInterval>> iv(xs + ys);
    std::size_t d = 0;
    for (Vertex x = 0; x < xs; ++x) {
      iv[x] = neighborhood_intervals(g, order, x);
      d = std::max(d, iv[x].size());
    }
    const auto m = stm_from_welzl(g, order, xs, iv);
    EXPECT_TRUE(validate(m).ok());
    EXPECT_LE(width(m), 2 * d);
    EXPECT_EQ(realize(m), g) << "seed " << seed;
  }
}

TEST(Welzl, RejectsInconsistentInput) {
  GraphBuilder b(3);
  b.add_edge(0, 1);
  const Graph g = std::move(b).build();
  std::vector<Vertex> order{0, 1, 2};
  EXPECT_THROW(stm_from_welzl(g, order, 1, {{{1, 2}}, {}, {}}), DomainError);
  GraphBuilder nb(3);
  nb.add_edge(1, 2);
  const Graph h = std::move(nb).build();
  EXPECT_THROW(stm_from_welzl(h, order, 1, {{}, {}, {}}), DomainError);
}

TEST(StmFormat, RoundTrip) {
  const auto clean = make_clean(figure_model().model);
  const std::string text = save_stm(clean);
  const auto loaded = load_stm(text);
  EXPECT_EQ(save_stm(loaded), text);
  EXPECT_EQ(realize(loaded), realize(clean));
  EXPECT_EQ(loaded, canonicalize(clean));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = fixture::random_graph(2, 20, seed);
    const auto m = stm_from_witness(g, fixture::greedy_witness(g));
    const auto again = load_stm(save_stm(m));
    EXPECT_EQ(realize(again), g);
    EXPECT_EQ(save_stm(again), save_stm(m));
  }
}

TEST(StmFormat, Rejections) {
  EXPECT_THROW(load_stm(""), DomainError);
  EXPECT_THROW(load_stm("p stm 3 2\nt 0 -1 -1\nt 1 0 0\n"), DomainError);
  EXPECT_THROW(load_stm("p stm 1 1\nt 0 -1 0\ng 0 0\n"), DomainError);
  EXPECT_THROW(load_stm("p stm 1 1\nt 0 -1 0\nq 0 0\n"), DomainError);
}

}  // namespace
}  // namespace sdlab
