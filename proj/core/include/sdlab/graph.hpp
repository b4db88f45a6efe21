#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sdlab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 0..n-1 with sorted, duplicate-free
// neighbor lists. Immutable once built; use GraphBuilder to assemble one.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  // Throws DomainError on a self-loop, a duplicate edge or an endpoint >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // All edges (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  friend class GraphBuilder;
  std::vector<std::vector<Vertex>> adj_;
};

// Accumulates edges; duplicate insertions are merged. Self-loops and
// out-of-range endpoints throw DomainError.
class GraphBuilder {
public:
  explicit GraphBuilder(std::size_t n) : adj_(n) {}

  std::size_t order() const noexcept { return adj_.size(); }
  void add_edge(Vertex u, Vertex v);
  // Adds every edge between a vertex of `left` and a vertex of `right`.
  void add_biclique(std::span<const Vertex> left, std::span<const Vertex> right);
  void add_clique(std::span<const Vertex> vertices);
  // Appends an isolated vertex and returns its id.
  Vertex add_vertex();

  Graph build() &&;

private:
  std::vector<std::vector<Vertex>> adj_;
};

struct DegeneracyCertificate {
  std::size_t d = 0;
  std::vector<Vertex> order;
};

// Min-degree peeling; ties go to the smallest vertex id.
DegeneracyCertificate degeneracy(const Graph& g);

// Largest number of neighbors that follow a vertex in `order`.
std::size_t max_forward_degree(const Graph& g, std::span<const Vertex> order);

struct InducedSubgraph {
  Graph graph;
  // to_original[i] is the vertex of the host graph relabeled to i.
  std::vector<Vertex> to_original;
};

// Vertices of `subset` are relabeled 0..k-1 in increasing order; duplicates
// are ignored. Throws DomainError on an out-of-range vertex.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

// Generators. Each documents its vertex index layout.

// a x b rook graph; cell (i, j), 1-based, is vertex (i-1)*b + (j-1).
Graph gen_rook(std::size_t a, std::size_t b);

// Shift graph on pairs (i, j), 1 <= i < j <= n, indexed in lexicographic
// order; (i, j) ~ (k, l) iff j == k or i == l.
Graph gen_shift(std::size_t n);

// Erdos-Renyi G(n, p). Pairs (u, v), u < v, are visited lexicographically and
// each consumes one SplitMix64 draw; the pair is kept iff draw < p.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

Graph gen_complete(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);

// Random recursive tree: vertex v > 0 attaches to a uniformly chosen
// earlier vertex.
Graph gen_random_tree(std::size_t n, std::uint64_t seed);

// Edge-list text format:
//   p el <n> <m>
//   e <u> <v>      (exactly m lines, 0 <= u < v < n)
// Lines starting with '#' are comments and may appear anywhere.
Graph load_edge_list(std::string_view text);
std::string save_edge_list(const Graph& g);

} // namespace sdlab
