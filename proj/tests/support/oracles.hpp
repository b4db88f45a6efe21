#pragma once

// Brute-force reference implementations used to cross-check the library.
// They intentionally share no code with it: plain std::set neighborhoods,
// subset enumeration and explicit parent walks.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "sdlab/balance.hpp"
#include "sdlab/graph.hpp"
#include "sdlab/signed_tree_model.hpp"
#include "sdlab/twin_metrics.hpp"

namespace sdlab::oracle {

using NeighborSets = std::vector<std::set<Vertex>>;

NeighborSets neighbor_sets(const Graph& g);

// sd of u, v inside the subgraph induced by `alive` (all vertices if empty).
std::size_t sd_pair(const NeighborSets& adj, Vertex u, Vertex v, const std::set<Vertex>& alive);

// max over subsets of size >= 2 of the min pair sd inside the subset.
std::size_t sd_exact(const Graph& g);

// Smallest d for which a memoised recursive search eliminates G to one vertex.
std::size_t sdd_exact(const Graph& g);

// Degeneracy as the largest minimum degree over all induced subgraphs.
std::size_t degeneracy(const Graph& g);

// Witness acceptance written directly from the definition.
bool witness_ok(const Graph& g, const SddWitness& w);

// Adjacency from the model by following parent links: u ~ v iff a blue pair
// (a, b) with a above u and b above v has no green pair (a', b') with a'
// between a and u, b' between b and v, and (a', b') != (a, b).
Graph realize(const SignedTreeModel& m);

// Every graph-level pair is compared; returns the number of disagreements.
std::size_t adjacency_mismatches(const Graph& a, const Graph& b);

// Degeneracy of the auxiliary graph on tree nodes, by exhaustive peeling
// of the k-cores (repeatedly delete nodes of degree < k).
std::size_t pair_graph_degeneracy(std::size_t nodes, const std::set<NodePair>& pairs);

// Minimum partitions of [i, j] into leaf intervals of the heap-layout
// complete binary tree on n leaves, found by dynamic programming over the
// right end of the covered prefix.
struct CoverSearch {
  std::size_t minimum = 0;
  std::size_t minimum_partitions = 0;  // how many node sets attain it
  std::vector<NodeId> one_minimum;     // left to right
};
CoverSearch cover_search(std::size_t n, std::size_t i, std::size_t j);

// Leaf interval of each heap node, computed by an in-order traversal.
std::vector<std::pair<std::size_t, std::size_t>> heap_intervals(std::size_t n);

// Number of nodes on the longest root-to-leaf path of the heap tree.
std::size_t heap_height(std::size_t n);

// ceil(log2 n) by repeated doubling.
std::size_t ceil_log2(std::size_t n);

}  // namespace sdlab::oracle
