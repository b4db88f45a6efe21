#include "sdlab/twin_metrics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "sdlab/bit_matrix.hpp"
#include "sdlab/error.hpp"
#include "sdlab/text_io.hpp"

namespace sdlab {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> masks(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      masks[v] |= Mask{1} << w;
    }
  }
  return masks;
}

void check_limit(const Graph& g, std::size_t limit, const char* what) {
  if (g.order() > limit) {
    throw SizeLimitError(std::string(what) + ": n = " + std::to_string(g.order()) +
                         " exceeds the exhaustive limit " + std::to_string(limit));
  }
  if (g.order() > 31) {
    throw SizeLimitError(std::string(what) + ": bitmask search supports at most 31 vertices");
  }
}

// Smallest pairwise symmetric difference inside `mask`, stopping as soon as
// the running minimum drops to `floor` or below.
std::size_t min_pair_sd(const std::vector<Mask>& adj, Mask mask, std::size_t floor) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Mask rest = mask; rest != 0; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    for (Mask others = rest & (rest - 1); others != 0; others &= others - 1) {
      const int v = std::countr_zero(others);
      const Mask pair = (Mask{1} << u) | (Mask{1} << v);
      const auto sd = static_cast<std::size_t>(std::popcount((adj[u] ^ adj[v]) & mask & ~pair));
      if (sd < best) {
        best = sd;
        if (best <= floor) {
          return best;
        }
      }
    }
  }
  return best;
}

// Depth-first search over vertex sets reachable from V(G) by removing a
// vertex that has a d-twin in the current set. Returns the sequence of sets
// from V(G) down to a single vertex, or nullopt when none is reachable.
// A set is marked when first entered; a marked set that is left without
// success can never lead to success, so it is not entered again.
std::optional<std::vector<Mask>> elimination_path(const std::vector<Mask>& adj, std::size_t n, std::size_t d) {
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint64_t> seen(states / 64 + 1, 0);
  auto mark = [&](Mask s) { seen[s / 64] |= std::uint64_t{1} << (s % 64); };
  auto marked = [&](Mask s) { return ((seen[s / 64] >> (s % 64)) & 1U) != 0; };
  auto removable = [&](Mask mask) {
    Mask out = 0;
    for (Mask rest = mask; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      for (Mask others = rest & (rest - 1); others != 0; others &= others - 1) {
        const int v = std::countr_zero(others);
        const Mask pair = (Mask{1} << u) | (Mask{1} << v);
        if (static_cast<std::size_t>(std::popcount((adj[u] ^ adj[v]) & mask & ~pair)) <= d) {
          out |= pair;
        }
      }
    }
    return out;
  };
  struct Frame {
    Mask mask;
    Mask todo;
  };
  const auto full = static_cast<Mask>(states - 1);
  std::vector<Frame> stack{{full, removable(full)}};
  mark(full);
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (std::popcount(top.mask) == 1) {
      std::vector<Mask> path;
      path.reserve(stack.size());
      for (const auto& f : stack) {
        path.push_back(f.mask);
      }
      return path;
    }
    if (top.todo == 0) {
      stack.pop_back();
      continue;
    }
    const int v = std::countr_zero(top.todo);
    top.todo &= top.todo - 1;
    const Mask child = top.mask & ~(Mask{1} << v);
    if (marked(child)) {
      continue;
    }
    mark(child);
    stack.push_back({child, removable(child)});
  }
  return std::nullopt;
}

} // namespace

std::size_t sd_pair(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) {
    throw DomainError("sd_pair: vertex out of range");
  }
  if (u == v) {
    throw DomainError("sd_pair: vertices must be distinct");
  }
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t count = 0;
  while (i < nu.size() || j < nv.size()) {
    if (j == nv.size() || (i < nu.size() && nu[i] < nv[j])) {
      count += nu[i] != v ? 1 : 0;
      ++i;
    } else if (i == nu.size() || nv[j] < nu[i]) {
      count += nv[j] != u ? 1 : 0;
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<Edge> d_twin_pairs(const Graph& g, std::size_t d) {
  BitMatrix matrix(g);
  VertexMask all(g.order(), true);
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (matrix.sd_within(u, v, all.words()) <= d) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

bool is_diverse(const Graph& g, std::span<const Vertex> subset, std::size_t d) {
  VertexMask alive(g.order());
  for (Vertex v : subset) {
    if (v >= g.order()) {
      throw DomainError("is_diverse: vertex out of range");
    }
    alive.set(v);
  }
  auto members = alive.members();
  if (members.size() < 2) {
    return false;
  }
  BitMatrix matrix(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (matrix.sd_within(members[i], members[j], alive.words()) <= d) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> find_diverse_subgraph(const Graph& g, std::size_t d,
                                                         std::size_t limit) {
  check_limit(g, limit, "find_diverse_subgraph");
  const auto adj = neighbor_masks(g);
  const Mask full = g.order() == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << g.order()) - 1);
  std::optional<Mask> best;
  int best_size = 1;
  for (std::uint64_t m = 1; m <= full; ++m) {
    const auto mask = static_cast<Mask>(m);
    const int size = std::popcount(mask);
    if (size <= best_size) {
      continue;
    }
    if (min_pair_sd(adj, mask, d) >= d + 1) {
      best = mask;
      best_size = size;
    }
  }
  if (!best) {
    return std::nullopt;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((*best >> v) & 1U) {
      out.push_back(v);
    }
  }
  return out;
}

std::size_t sd_exact(const Graph& g, std::size_t limit) {
  if (g.order() < 2) {
    throw DomainError("sd_exact: needs at least two vertices");
  }
  check_limit(g, limit, "sd_exact");
  const auto adj = neighbor_masks(g);
  const auto full = static_cast<Mask>((std::uint64_t{1} << g.order()) - 1);
  std::size_t best = 0;
  for (std::uint64_t m = 3; m <= full; ++m) {
    const auto mask = static_cast<Mask>(m);
    if (std::popcount(mask) < 2) {
      continue;
    }
    best = std::max(best, min_pair_sd(adj, mask, best));
  }
  return best;
}

SddResult sdd_exact(const Graph& g, std::size_t limit) {
  check_limit(g, limit, "sdd_exact");
  const std::size_t n = g.order();
  SddResult result;
  if (n <= 1) {
    return result;
  }
  const auto adj = neighbor_masks(g);
  // Every pair is an (n-2)-twin, so the search at hi always succeeds.
  std::size_t lo = 0;
  std::size_t hi = n - 2;
  std::optional<std::vector<Mask>> best;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto path = elimination_path(adj, n, mid)) {
      best = std::move(path);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (!best) {
    best = elimination_path(adj, n, lo);
  }
  result.value = lo;
  result.witness.d = lo;
  const auto& states = *best;
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    const Mask mask = states[i];
    const auto v = static_cast<Vertex>(std::countr_zero(mask & ~states[i + 1]));
    Vertex partner = 0;
    std::size_t partner_sd = std::numeric_limits<std::size_t>::max();
    for (Mask rest = mask & ~(Mask{1} << v); rest != 0; rest &= rest - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(rest));
      const Mask pair = (Mask{1} << u) | (Mask{1} << v);
      const auto sd = static_cast<std::size_t>(std::popcount((adj[u] ^ adj[v]) & mask & ~pair));
      if (sd < partner_sd) {
        partner_sd = sd;
        partner = u;
      }
    }
    result.witness.steps.push_back({v, partner});
  }
  return result;
}

std::optional<SddWitness> sdd_greedy(const Graph& g, std::size_t d) {
  const std::size_t n = g.order();
  SddWitness w{d, {}};
  if (n <= 1) {
    return w;
  }
  BitMatrix matrix(g);
  VertexMask alive(n, true);
  for (std::size_t remaining = n; remaining > 1; --remaining) {
    bool found = false;
    for (Vertex v = 0; v < n && !found; ++v) {
      if (!alive.test(v)) {
        continue;
      }
      for (Vertex u = 0; u < n; ++u) {
        if (u != v && alive.test(u) && matrix.sd_within(u, v, alive.words()) <= d) {
          w.steps.push_back({v, u});
          alive.reset(v);
          found = true;
          break;
        }
      }
    }
    if (!found) {
      return std::nullopt;
    }
  }
  return w;
}

std::optional<std::string> witness_violation(const Graph& g, const SddWitness& w) {
  const std::size_t n = g.order();
  const std::size_t expected = n == 0 ? 0 : n - 1;
  if (w.steps.size() != expected) {
    return "expected " + std::to_string(expected) + " steps, got " + std::to_string(w.steps.size());
  }
  BitMatrix matrix(g);
  VertexMask alive(n, true);
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto [v, u] = w.steps[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    if (v >= n || u >= n) {
      return at + "vertex out of range";
    }
    if (u == v) {
      return at + "partner equals eliminated vertex";
    }
    if (!alive.test(v) || !alive.test(u)) {
      return at + "vertex already eliminated";
    }
    const auto sd = matrix.sd_within(u, v, alive.words());
    if (sd > w.d) {
      return at + "pair (" + std::to_string(v) + ", " + std::to_string(u) + ") has sd " +
             std::to_string(sd) + " > " + std::to_string(w.d);
    }
    alive.reset(v);
  }
  return std::nullopt;
}

bool check_witness(const Graph& g, const SddWitness& w) {
  return !witness_violation(g, w).has_value();
}

std::string save_witness(const SddWitness& w) {
  std::ostringstream out;
  out << "w sdd " << w.d << ' ' << w.steps.size() << '\n';
  for (auto [v, u] : w.steps) {
    out << "x " << v << ' ' << u << '\n';
  }
  return out.str();
}

SddWitness load_witness(std::string_view text) {
  LineReader reader(text);
  auto header = reader.next_record();
  if (!header || header->tokens.size() != 4 || header->tokens[0] != "w" || header->tokens[1] != "sdd") {
    throw DomainError("witness: expected header 'w sdd <d> <k>'");
  }
  SddWitness w;
  w.d = parse_count(*header, 2, reader);
  const auto k = parse_count(*header, 3, reader);
  while (auto rec = reader.next_record()) {
    if (rec->tokens.size() != 3 || rec->tokens[0] != "x") {
      throw DomainError(reader.where(*rec) + "expected 'x <eliminated> <partner>'");
    }
    w.steps.push_back({static_cast<Vertex>(parse_count(*rec, 1, reader)),
                       static_cast<Vertex>(parse_count(*rec, 2, reader))});
  }
  if (w.steps.size() != k) {
    throw DomainError("witness: header announces " + std::to_string(k) + " steps, found " +
                      std::to_string(w.steps.size()));
  }
  return w;
}

} // namespace sdlab
