#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sdlab/graph.hpp"
#include "sdlab/signed_tree_model.hpp"
#include "sdlab/twin_metrics.hpp"

namespace sdlab::fixture {

// The 14-leaf example model with 4 green and 9 blue pairs. Leaves carry the
// vertices 0..13 (drawn as 1..14); internal nodes are named by letters.
struct FigureModel {
  SignedTreeModel model;
  std::map<std::string, NodeId> node;
};
FigureModel figure_model();

// Model on any full binary tree: pairs are given by node names.
struct NamedTree {
  // name -> (left child, right child); leaves are given by vertex_of.
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> internal;
  std::map<std::string, Vertex> vertex_of;
  std::string root;
};
FigureModel build_named(const NamedTree& tree, const std::vector<std::pair<std::string, std::string>>& green,
                        const std::vector<std::pair<std::string, std::string>>& blue);

// Tree on the complete-binary-tree shape over n leaves (heap layout) with
// randomly chosen non-crossing signed pairs; used for property tests.
SignedTreeModel random_model(std::size_t leaves, std::size_t attempts, std::uint64_t seed);

struct CorpusEntry {
  std::string name;
  Graph graph;
  SddWitness witness;
  bool exact = false;  // witness from sdd_exact rather than greedy search
};

// Greedy witnesses on graphs up to 64 vertices and exact witnesses up to
// 16 vertices; built once and cached.
const std::vector<CorpusEntry>& corpus();

// sdd_greedy with the smallest d that succeeds.
SddWitness greedy_witness(const Graph& g);

// Random graph whose vertex count is drawn from [lo, hi].
Graph random_graph(std::size_t lo, std::size_t hi, std::uint64_t seed);

}  // namespace sdlab::fixture
