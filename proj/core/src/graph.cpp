#include "sdlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "sdlab/bit_matrix.hpp"
#include "sdlab/error.hpp"
#include "sdlab/rng.hpp"

namespace sdlab {

namespace {

void check_endpoint(std::size_t n, Vertex v) {
  if (v >= n) {
    throw DomainError("vertex " + std::to_string(v) + " out of range (n = " + std::to_string(n) + ")");
  }
}

} // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    check_endpoint(n, u);
    check_endpoint(n, v);
    if (u == v) {
      throw DomainError("self-loop at vertex " + std::to_string(u));
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = g.adj_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      auto dup = *std::adjacent_find(list.begin(), list.end());
      throw DomainError("duplicate edge " + std::to_string(std::min(v, dup)) + " " +
                        std::to_string(std::max(v, dup)));
    }
  }
  return g;
}

std::size_t Graph::size() const noexcept {
  std::size_t total = 0;
  for (const auto& list : adj_) {
    total += list.size();
  }
  return total / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_endpoint(adj_.size(), u);
  check_endpoint(adj_.size(), v);
  if (u == v) {
    throw DomainError("self-loop at vertex " + std::to_string(u));
  }
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

void GraphBuilder::add_biclique(std::span<const Vertex> left, std::span<const Vertex> right) {
  for (Vertex u : left) {
    for (Vertex v : right) {
      add_edge(u, v);
    }
  }
}

void GraphBuilder::add_clique(std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      add_edge(vertices[i], vertices[j]);
    }
  }
}

Vertex GraphBuilder::add_vertex() {
  adj_.emplace_back();
  return static_cast<Vertex>(adj_.size() - 1);
}

Graph GraphBuilder::build() && {
  Graph g;
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  g.adj_ = std::move(adj_);
  return g;
}

DegeneracyCertificate degeneracy(const Graph& g) {
  const std::size_t n = g.order();
  DegeneracyCertificate cert;
  cert.order.reserve(n);
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    cert.order.push_back(v);
    cert.d = std::max(cert.d, d);
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) {
        queue.erase({deg[w], w});
        --deg[w];
        queue.emplace(deg[w], w);
      }
    }
  }
  return cert;
}

std::size_t max_forward_degree(const Graph& g, std::span<const Vertex> order) {
  std::vector<std::size_t> position(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
  }
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::size_t forward = 0;
    for (Vertex w : g.neighbors(v)) {
      forward += position[w] > position[v] ? 1 : 0;
    }
    best = std::max(best, forward);
  }
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  InducedSubgraph out;
  out.to_original.assign(subset.begin(), subset.end());
  for (Vertex v : out.to_original) {
    check_endpoint(g.order(), v);
  }
  std::sort(out.to_original.begin(), out.to_original.end());
  out.to_original.erase(std::unique(out.to_original.begin(), out.to_original.end()),
                        out.to_original.end());

  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> relabel(g.order(), kAbsent);
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    relabel[out.to_original[i]] = static_cast<Vertex>(i);
  }
  GraphBuilder builder(out.to_original.size());
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    for (Vertex w : g.neighbors(out.to_original[i])) {
      if (relabel[w] != kAbsent && relabel[w] > i) {
        builder.add_edge(static_cast<Vertex>(i), relabel[w]);
      }
    }
  }
  out.graph = std::move(builder).build();
  return out;
}

Graph gen_rook(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) {
    throw DomainError("rook graph needs a, b >= 1");
  }
  GraphBuilder builder(a * b);
  auto cell = [b](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * b + j); };
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      for (std::size_t k = j + 1; k < b; ++k) {
        builder.add_edge(cell(i, j), cell(i, k));
      }
      for (std::size_t k = i + 1; k < a; ++k) {
        builder.add_edge(cell(i, j), cell(k, j));
      }
    }
  }
  return std::move(builder).build();
}

Graph gen_shift(std::size_t n) {
  if (n < 2) {
    throw DomainError("shift graph needs n >= 2");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  GraphBuilder builder(pairs.size());
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      auto [i, j] = pairs[x];
      auto [k, l] = pairs[y];
      if (j == k || i == l) {
        builder.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
      }
    }
  }
  return std::move(builder).build();
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("edge probability must lie in [0, 1]");
  }
  SplitMix64 rng(seed);
  GraphBuilder builder(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.next_double() < p) {
        builder.add_edge(u, v);
      }
    }
  }
  return std::move(builder).build();
}

Graph gen_complete(std::size_t n) {
  return gen_gnp(n, 1.0, 0);
}

Graph gen_path(std::size_t n) {
  GraphBuilder builder(n);
  for (Vertex v = 1; v < n; ++v) {
    builder.add_edge(v - 1, v);
  }
  return std::move(builder).build();
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) {
    throw DomainError("cycle needs n >= 3");
  }
  GraphBuilder builder(n);
  for (Vertex v = 0; v < n; ++v) {
    builder.add_edge(v, static_cast<Vertex>((v + 1) % n));
  }
  return std::move(builder).build();
}

Graph gen_random_tree(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  GraphBuilder builder(n);
  for (Vertex v = 1; v < n; ++v) {
    builder.add_edge(v, static_cast<Vertex>(rng.next_below(v)));
  }
  return std::move(builder).build();
}

BitMatrix::BitMatrix(const Graph& g)
    : n_(g.order()), words_((g.order() + 63) / 64), bits_(n_ * words_, 0) {
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : g.neighbors(u)) {
      bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
}

std::size_t BitMatrix::sd_within(Vertex u, Vertex v, std::span<const std::uint64_t> alive) const {
  auto ru = row(u);
  auto rv = row(v);
  std::size_t count = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t diff = (ru[w] ^ rv[w]) & alive[w];
    if (w == u / 64) {
      diff &= ~(std::uint64_t{1} << (u % 64));
    }
    if (w == v / 64) {
      diff &= ~(std::uint64_t{1} << (v % 64));
    }
    count += static_cast<std::size_t>(std::popcount(diff));
  }
  return count;
}

VertexMask::VertexMask(std::size_t n, bool full) : n_(n), bits_((n + 63) / 64, 0) {
  if (full) {
    for (Vertex v = 0; v < n; ++v) {
      set(v);
    }
  }
}

std::size_t VertexMask::count() const {
  std::size_t total = 0;
  for (auto w : bits_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

std::vector<Vertex> VertexMask::members() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v) {
    if (test(v)) {
      out.push_back(v);
    }
  }
  return out;
}

} // namespace sdlab
