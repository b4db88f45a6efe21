#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sdlab/balance.hpp"
#include "sdlab/error.hpp"
#include "sdlab/labeling.hpp"
#include "sdlab/rng.hpp"

namespace sdlab {
namespace {

// Bound written out from the layout: preamble, path length, path ids, one
// count field per path node and at most W entries per path node.
std::size_t layout_bound(const LabelScheme& s, std::size_t h) {
  const std::size_t count_bits = static_cast<std::size_t>(std::bit_width(s.W));
  return 48 + 8 + h * s.id_bits + h * count_bits + h * s.W * (s.id_bits + 1);
}

Graph decoded_graph(const Labeling& l) {
  const std::size_t n = l.labels.size();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (decode(l.labels[u], l.labels[v])) {
        b.add_edge(u, v);
      }
    }
  }
  return std::move(b).build();
}

TEST(BitString, AppendReadAndHex) {
  BitString b;
  b.append(0b101, 3);
  b.append(0xAB, 8);
  b.append(1, 1);
  EXPECT_EQ(b.size(), 12U);
  EXPECT_EQ(b.to_hex(), "b570");
  BitReader r(b);
  EXPECT_EQ(r.read(3), 0b101U);
  EXPECT_EQ(r.read(8), 0xABU);
  EXPECT_EQ(r.read(1), 1U);
  EXPECT_THROW(r.read(1), DomainError);
  auto back = BitString::from_hex(b.to_hex());
  EXPECT_EQ(back.size(), 16U);
  back.truncate(12);
  EXPECT_EQ(back, b);
  EXPECT_EQ(BitString::from_hex("BAB0"), BitString::from_hex("bab0"));
  EXPECT_THROW(BitString::from_hex("0g"), DomainError);
}

TEST(LabelScheme, CountFieldWidth) {
  EXPECT_EQ((LabelScheme{4, 3, 0}).count_bits(), 0U);
  EXPECT_EQ((LabelScheme{4, 3, 1}).count_bits(), 1U);
  EXPECT_EQ((LabelScheme{4, 3, 3}).count_bits(), 2U);
  EXPECT_EQ((LabelScheme{4, 3, 4}).count_bits(), 3U);
  for (std::size_t w = 0; w < 40; ++w) {
    for (std::size_t h = 1; h < 12; ++h) {
      const LabelScheme s{10, 5, w};
      EXPECT_EQ(label_bit_bound(s, h), layout_bound(s, h));
    }
  }
}

TEST(Encode, SingleVertex) {
  const auto m = stm_from_witness(Graph(1), SddWitness{0, {}});
  const auto l = encode(m);
  ASSERT_EQ(l.labels.size(), 1U);
  EXPECT_EQ(l.height, 1U);
  // Preamble, path length, one node id of id_bits bits, one empty count.
  EXPECT_EQ(l.labels[0].bits.size(), 48 + 8 + l.scheme.id_bits + l.scheme.count_bits());
  EXPECT_EQ(label_stats(l, 0).max_bits, l.labels[0].bits.size());
}

TEST(Encode, SingleEdge) {
  const Graph g = gen_complete(2);
  const auto l = label_graph(g, *sdd_greedy(g, 0));
  ASSERT_EQ(l.labels.size(), 2U);
  EXPECT_TRUE(decode(l.labels[0], l.labels[1]));
  EXPECT_TRUE(decode(l.labels[1], l.labels[0]));
}

TEST(Encode, FigureModel) {
  const auto f = fixture::figure_model();
  const auto l = encode(make_clean(f.model));
  ASSERT_EQ(l.labels.size(), 14U);
  EXPECT_TRUE(decode(l.labels[3], l.labels[7]));
  EXPECT_FALSE(decode(l.labels[6], l.labels[7]));
  EXPECT_EQ(decoded_graph(l), realize(f.model));
  EXPECT_THROW(encode(f.model), DomainError);
}

TEST(Encode, ExactLayoutOnSiblings) {
  // Two leaves under a blue sibling pair: ids 0 (root), 1, 2.
  SignedTreeModel m;
  m.nodes.resize(3);
  m.nodes[0].left = 1;
  m.nodes[0].right = 2;
  m.nodes[1] = {0, kNoNode, kNoNode, 0};
  m.nodes[2] = {0, kNoNode, kNoNode, 1};
  m.blue.insert(NodePair::of(1, 2));
  const auto l = encode(m);
  EXPECT_EQ(l.scheme, (LabelScheme{2, 2, 1}));
  EXPECT_TRUE(decode(l.labels[0], l.labels[1]));
  BitReader r(l.labels[0].bits);
  EXPECT_EQ(r.read(24), 2U);
  EXPECT_EQ(r.read(8), 2U);
  EXPECT_EQ(r.read(16), 1U);
  EXPECT_EQ(r.read(8), 2U);  // path length
  EXPECT_EQ(r.read(2), 0U);  // root
  EXPECT_EQ(r.read(2), 1U);  // leaf of vertex 0
  EXPECT_EQ(r.read(1), 0U);  // root owns nothing
  const auto leaf_count = r.read(1);
  // The pair is owned by exactly one of the two leaves.
  BitReader r1(l.labels[1].bits);
  r1.read(48 + 8 + 2 + 2 + 1);
  EXPECT_EQ(leaf_count + r1.read(1), 1U);
}

TEST(Decode, RejectsIdenticalAndTruncatedLabels) {
  const Graph g = gen_gnp(12, 0.5, 3);
  const auto l = label_graph(g, fixture::greedy_witness(g));
  EXPECT_THROW(decode(l.labels[2], l.labels[2]), DomainError);
  SplitMix64 rng(5);
  std::size_t checked = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (u == v) {
        continue;
      }
      const auto& full = l.labels[u].bits;
      for (int k = 0; k < 4; ++k) {
        auto cut = l.labels[u];
        cut.bits.truncate(static_cast<std::size_t>(rng.next_below(full.size())));
        EXPECT_THROW(decode(cut, l.labels[v]), DomainError);
        EXPECT_THROW(decode(l.labels[v], cut), DomainError);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0U);
}

TEST(Decode, SymmetricOnRandomPairs) {
  const Graph g = gen_gnp(40, 0.4, 8);
  const auto l = label_graph(g, fixture::greedy_witness(g));
  SplitMix64 rng(1);
  for (int k = 0; k < 1000; ++k) {
    const auto u = static_cast<Vertex>(rng.next_below(40));
    const auto v = static_cast<Vertex>(rng.next_below(40));
    if (u != v) {
      EXPECT_EQ(decode(l.labels[u], l.labels[v]), decode(l.labels[v], l.labels[u]));
    }
  }
}

TEST(Decode, CandidatesFormAChain) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = fixture::random_graph(4, 30, seed);
    const auto p = label_pipeline(g, fixture::greedy_witness(g));
    const TreeIndex idx(p.balanced);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const auto c = label_candidates(p.labeling.labels[u], p.labeling.labels[v]);
        ASSERT_FALSE(c.empty());
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
          // Chain: each one lies weakly above the next on both paths.
          EXPECT_LE(c[i].depth_a, c[i + 1].depth_a);
          EXPECT_LE(c[i].depth_b, c[i + 1].depth_b);
          EXPECT_TRUE(idx.pair_precedes_or_equal(NodePair::of(c[i].on_a, c[i].on_b),
                                                 NodePair::of(c[i + 1].on_a, c[i + 1].on_b)));
        }
        EXPECT_EQ(c.back().blue, g.adjacent(u, v));
      }
    }
  }
}

TEST(Decode, RandomCleanModelsReconstruct) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto m = make_clean(fixture::random_model(2 + seed % 18, 100, seed * 29));
    const auto l = encode(m);
    EXPECT_EQ(oracle::adjacency_mismatches(decoded_graph(l), oracle::realize(m)), 0U) << "seed " << seed;
  }
}

TEST(LabelGraph, Examples) {
  const Graph k8 = gen_complete(8);
  const auto lk = label_graph(k8, *sdd_greedy(k8, 0));
  EXPECT_EQ(decoded_graph(lk), k8);

  const Graph e = embed_sdd1(gen_gnp(8, 0.5, 7)).graph;
  const auto emb = embed_sdd1(gen_gnp(8, 0.5, 7));
  EXPECT_EQ(decoded_graph(label_graph(emb.graph, emb.witness)), e);

  const Graph rook = gen_rook(3, 3);
  EXPECT_EQ(decoded_graph(label_graph(rook, sdd_exact(rook).witness)), rook);

  EXPECT_THROW(label_graph(rook, SddWitness{0, {}}), DomainError);
}

TEST(LabelGraph, BoundsHold) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph g = fixture::random_graph(2, 48, seed * 9);
    const auto p = label_pipeline(g, fixture::greedy_witness(g));
    EXPECT_EQ(count_label_mismatches(g, p.labeling.labels), 0U);
    const auto& s = p.labeling.scheme;
    EXPECT_LE(s.W, width_bound(p.balanced.signed_pair_count()));
    const std::size_t bound = layout_bound(s, p.labeling.height);
    for (const auto& label : p.labeling.labels) {
      EXPECT_LE(label.bits.size(), bound);
    }
    EXPECT_EQ(s.id_bits, static_cast<std::size_t>(std::bit_width(p.balanced.node_count() - 1)));
  }
}

TEST(LabelStats, DeterministicAndConsistent) {
  const auto a = gen_twin_growth(64, 2, 3);
  const auto l1 = label_graph(a.graph, a.witness);
  const auto l2 = label_graph(a.graph, a.witness);
  const auto s1 = label_stats(l1, 2);
  const auto s2 = label_stats(l2, 2);
  EXPECT_EQ(s1.max_bits, s2.max_bits);
  EXPECT_EQ(s1.mean_bits, s2.mean_bits);
  std::size_t max_bits = 0;
  double total = 0;
  for (const auto& label : l1.labels) {
    max_bits = std::max(max_bits, label.bits.size());
    total += static_cast<double>(label.bits.size());
  }
  EXPECT_EQ(s1.max_bits, max_bits);
  EXPECT_DOUBLE_EQ(s1.mean_bits, total / 64.0);
  EXPECT_DOUBLE_EQ(s1.reference, std::sqrt(3.0 * 64.0) * 216.0);
  EXPECT_DOUBLE_EQ(s1.ratio, static_cast<double>(max_bits) / s1.reference);
}

TEST(LabelFormat, RoundTripAndHeaderChecks) {
  const Graph g = gen_gnp(20, 0.5, 4);
  const auto l = label_graph(g, fixture::greedy_witness(g));
  const std::string text = save_labels(l);
  const auto back = load_labels(text);
  EXPECT_EQ(back.scheme, l.scheme);
  ASSERT_EQ(back.labels.size(), l.labels.size());
  for (std::size_t v = 0; v < l.labels.size(); ++v) {
    EXPECT_EQ(back.labels[v], l.labels[v]);
  }
  EXPECT_EQ(back.height, l.height);
  EXPECT_EQ(count_label_mismatches(g, back.labels), 0U);
  EXPECT_EQ(save_labels(back), text);
  EXPECT_THROW(load_labels("p lbl 2 3 1\nl 0 zz\n"), DomainError);
  EXPECT_THROW(load_labels(""), DomainError);
  // Header disagreeing with the preambles.
  std::string wrong = text;
  wrong.replace(0, wrong.find('\n'), "p lbl 20 " + std::to_string(l.scheme.id_bits + 1) + " " +
                                         std::to_string(l.scheme.W));
  EXPECT_THROW(load_labels(wrong), DomainError);
}

}  // namespace
}  // namespace sdlab
