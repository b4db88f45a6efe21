#include <algorithm>
#include <iterator>

#include "sdlab/error.hpp"
#include "sdlab/rng.hpp"
#include "sdlab/twin_metrics.hpp"

namespace sdlab {

Embedding embed_sdd1(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) {
    throw DomainError("embed_sdd1: graph must have at least one vertex");
  }
  Embedding out;
  out.injection.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    out.injection[v] = v;
  }
  out.witness.d = 1;

  GraphBuilder builder(n);
  for (auto [u, v] : g.edges()) {
    builder.add_edge(u, v);
  }

  for (Vertex k = 0; k + 1 < n; ++k) {
    const Vertex next = k + 1;
    // Neighborhoods restricted to the originals that outlive the pair.
    auto later = [&](Vertex v) {
      std::vector<Vertex> out_list;
      for (Vertex w : g.neighbors(v)) {
        if (w > next) {
          out_list.push_back(w);
        }
      }
      return out_list;
    };
    const auto from = later(k);
    const auto to = later(next);
    std::vector<Vertex> to_delete;
    std::vector<Vertex> to_add;
    std::set_difference(from.begin(), from.end(), to.begin(), to.end(), std::back_inserter(to_delete));
    std::set_difference(to.begin(), to.end(), from.begin(), from.end(), std::back_inserter(to_add));

    const bool joined = g.adjacent(k, next);
    std::vector<Vertex> current = from;
    Vertex previous = k;
    const std::size_t moves = to_delete.size() + to_add.size();
    for (std::size_t step = 0; step + 1 < moves; ++step) {
      if (step < to_delete.size()) {
        current.erase(std::find(current.begin(), current.end(), to_delete[step]));
      } else {
        current.insert(std::upper_bound(current.begin(), current.end(), to_add[step - to_delete.size()]),
                       to_add[step - to_delete.size()]);
      }
      const Vertex interpolator = builder.add_vertex();
      for (Vertex w : current) {
        builder.add_edge(interpolator, w);
      }
      if (joined) {
        builder.add_edge(interpolator, next);
      }
      out.witness.steps.push_back({previous, interpolator});
      previous = interpolator;
    }
    out.witness.steps.push_back({previous, next});
  }
  out.graph = std::move(builder).build();
  return out;
}

GrownGraph gen_twin_growth(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0) {
    throw DomainError("gen_twin_growth: n must be positive");
  }
  SplitMix64 rng(seed);
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  std::vector<Vertex> anchor(n, 0);
  std::vector<Vertex> pool;
  for (Vertex t = 1; t < n; ++t) {
    const auto u = static_cast<Vertex>(rng.next_below(t));
    anchor[t] = u;
    for (Vertex w = 0; w < t; ++w) {
      if (w != u) {
        adjacent[t][w] = adjacent[u][w];
      }
    }
    adjacent[t][u] = rng.next_bool();
    pool.clear();
    for (Vertex w = 0; w < t; ++w) {
      if (w != u) {
        pool.push_back(w);
      }
    }
    const auto flips = std::min<std::size_t>(rng.next_below(d + 1), pool.size());
    for (std::size_t f = 0; f < flips; ++f) {
      const auto pick = f + rng.next_below(pool.size() - f);
      std::swap(pool[f], pool[pick]);
      adjacent[t][pool[f]] = !adjacent[t][pool[f]];
    }
    for (Vertex w = 0; w < t; ++w) {
      adjacent[w][t] = adjacent[t][w];
    }
  }

  GrownGraph out;
  GraphBuilder builder(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (adjacent[u][v]) {
        builder.add_edge(u, v);
      }
    }
  }
  out.graph = std::move(builder).build();
  out.witness.d = d;
  for (Vertex t = static_cast<Vertex>(n - 1); t >= 1; --t) {
    out.witness.steps.push_back({t, anchor[t]});
  }
  return out;
}

} // namespace sdlab
