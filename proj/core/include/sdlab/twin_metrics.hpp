#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdlab/graph.hpp"

namespace sdlab {

// Exhaustive oracles refuse larger inputs with SizeLimitError.
inline constexpr std::size_t kSubsetSearchLimit = 18;
inline constexpr std::size_t kEliminationSearchLimit = 20;

struct TwinStep {
  Vertex eliminated = 0;
  Vertex partner = 0;
  friend bool operator==(const TwinStep&, const TwinStep&) = default;
};

// Elimination sequence certifying sd-degeneracy <= d: at each step both
// vertices are still present and are d-twins in the remaining graph. A graph
// on n >= 1 vertices needs exactly n - 1 steps.
struct SddWitness {
  std::size_t d = 0;
  std::vector<TwinStep> steps;
  friend bool operator==(const SddWitness&, const SddWitness&) = default;
};

// |(N(u) \ {v}) symmetric-difference (N(v) \ {u})|; throws on u == v.
std::size_t sd_pair(const Graph& g, Vertex u, Vertex v);

// Pairs (u, v), u < v, with sd_pair <= d, lexicographically sorted.
std::vector<Edge> d_twin_pairs(const Graph& g, std::size_t d);

// True iff |S| >= 2 and every pair of S has symmetric difference >= d + 1
// inside G[S]. Polynomial.
bool is_diverse(const Graph& g, std::span<const Vertex> subset, std::size_t d);

// A maximum-cardinality (hence inclusion-maximal) (d+1)-diverse vertex set;
// among those, the one with the smallest bitmask. Exhaustive over subsets.
std::optional<std::vector<Vertex>> find_diverse_subgraph(const Graph& g, std::size_t d,
                                                         std::size_t limit = kSubsetSearchLimit);

// max over induced subgraphs H with |H| >= 2 of min pair sd in H. n >= 2.
std::size_t sd_exact(const Graph& g, std::size_t limit = kSubsetSearchLimit);

struct SddResult {
  std::size_t value = 0;
  SddWitness witness;
};

// Exact sd-degeneracy: binary search on d, each probe a depth-first search
// over the vertex sets reachable by d-twin eliminations.
SddResult sdd_exact(const Graph& g, std::size_t limit = kEliminationSearchLimit);

// Repeatedly eliminates the lowest-id vertex that has a d-twin, pairing it
// with its lowest-id d-twin. std::nullopt does not prove sdd(G) > d.
std::optional<SddWitness> sdd_greedy(const Graph& g, std::size_t d);

bool check_witness(const Graph& g, const SddWitness& w);
// Human-readable reason the witness is rejected, or std::nullopt if valid.
std::optional<std::string> witness_violation(const Graph& g, const SddWitness& w);

// Host graph of sd-degeneracy <= 1 containing g as an induced subgraph.
// Vertices 0..n-1 of the host are the vertices of g (injection = identity);
// interpolating vertices follow, grouped by consecutive pair (v_k, v_{k+1}).
// Interpolators of pair k only see original vertices j >= k+1: they walk
// from N(v_k) to N(v_{k+1}) restricted to {j >= k+2}, deleting private
// neighbors of v_k first and then adding those of v_{k+1}, and copy the
// v_k--v_{k+1} adjacency. Interpolators are pairwise non-adjacent.
struct Embedding {
  Graph graph;
  SddWitness witness;
  std::vector<Vertex> injection;
};
Embedding embed_sdd1(const Graph& g);

// Random graph grown by near-twin insertion: vertex t copies the
// neighborhood of a random earlier vertex u_t, flips up to d entries among
// the others, and joins u_t with probability 1/2. The witness eliminates
// n-1, ..., 1 against u_t, so it certifies sdd <= d.
struct GrownGraph {
  Graph graph;
  SddWitness witness;
};
GrownGraph gen_twin_growth(std::size_t n, std::size_t d, std::uint64_t seed);

// Witness text format:
//   w sdd <d> <k>
//   x <eliminated> <partner>    (k lines, elimination order)
std::string save_witness(const SddWitness& w);
SddWitness load_witness(std::string_view text);

} // namespace sdlab
